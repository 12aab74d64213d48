#include "rootlat/normal_form.hpp"

#include <cstdlib>

namespace rootlat {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

void require_nonempty(const IntMatrix& m, const char* op) {
  if (m.empty()) throw DimensionMismatch(std::string(op) + ": matrix must be nonempty");
}

// Index of the row i >= from whose entry in column c has minimal nonzero
// absolute value, or -1 when the column is zero below `from`.
int min_abs_pivot_row(const IntMatrix& m, int from, int c) {
  int best = -1;
  for (int i = from; i < m.rows(); ++i) {
    if (m(i, c) == 0) continue;
    if (best < 0 || abs_int(m(i, c)) < abs_int(m(best, c))) best = i;
  }
  return best;
}

}  // namespace

HnfDecomposition hnf(const IntMatrix& m) {
  require_nonempty(m, "hnf");
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());

  int r = 0;
  for (int c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Euclidean descent on column c until at most one nonzero entry
    // remains at or below row r.
    while (true) {
      int p = min_abs_pivot_row(h, r, c);
      if (p < 0) break;
      h.swap_rows(r, p);
      u.swap_rows(r, p);
      bool cleared = true;
      for (int i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Int q = h(i, c) / h(r, c);
        h.row_axpy(i, r, q);
        u.row_axpy(i, r, q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, c) == 0) continue;  // no pivot in this column
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      if (q != 0) {
        h.row_axpy(i, r, q);
        u.row_axpy(i, r, q);
      }
    }
    ++r;
  }
  return {h, u};
}

namespace {

// One full clearing pass at diagonal position t; returns true when row t and
// column t hold no off-diagonal entries afterwards.
bool snf_clear(IntMatrix& s, IntMatrix& u, IntMatrix& v, int t) {
  // Clear column t with row operations (Euclid on entries).
  for (int i = t + 1; i < s.rows(); ++i) {
    while (s(i, t) != 0) {
      Int q = s(i, t) / s(t, t);
      s.row_axpy(i, t, q);
      u.row_axpy(i, t, q);
      if (s(i, t) != 0) {
        s.swap_rows(i, t);
        u.swap_rows(i, t);
      }
    }
  }
  // Clear row t with column operations.
  for (int j = t + 1; j < s.cols(); ++j) {
    while (s(t, j) != 0) {
      Int q = s(t, j) / s(t, t);
      s.col_axpy(j, t, q);
      v.col_axpy(j, t, q);
      if (s(t, j) != 0) {
        s.swap_cols(j, t);
        v.swap_cols(j, t);
      }
    }
  }
  for (int i = t + 1; i < s.rows(); ++i)
    if (s(i, t) != 0) return false;
  return true;
}

}  // namespace

SnfDecomposition snf(const IntMatrix& m) {
  require_nonempty(m, "snf");
  SnfDecomposition d;
  d.s = m;
  d.u = IntMatrix::identity(m.rows());
  d.v = IntMatrix::identity(m.cols());
  IntMatrix& s = d.s;
  IntMatrix& u = d.u;
  IntMatrix& v = d.v;

  int n = std::min(s.rows(), s.cols());
  for (int t = 0; t < n; ++t) {
    // Global minimal-absolute-value pivot in the trailing block.
    int pi = -1, pj = -1;
    for (int i = t; i < s.rows(); ++i)
      for (int j = t; j < s.cols(); ++j) {
        if (s(i, j) == 0) continue;
        if (pi < 0 || abs_int(s(i, j)) < abs_int(s(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    s.swap_rows(t, pi);
    u.swap_rows(t, pi);
    s.swap_cols(t, pj);
    v.swap_cols(t, pj);
    while (!snf_clear(s, u, v, t)) {
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }

  // Enforce the divisibility chain d1 | d2 | ...
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t + 1 < n; ++t) {
      const Int& a = s(t, t);
      const Int& b = s(t + 1, t + 1);
      if (a == 0 || b == 0) continue;
      if (b % a == 0) continue;
      // Fold the next diagonal entry into column t and rediagonalize the
      // 2x2 block; this replaces (a, b) by (gcd, lcm).
      s.col_axpy(t, t + 1, Int(-1));
      v.col_axpy(t, t + 1, Int(-1));
      while (!snf_clear(s, u, v, t)) {
      }
      if (s(t, t) < 0) {
        s.negate_row(t);
        u.negate_row(t);
      }
      if (s(t + 1, t + 1) < 0) {
        s.negate_row(t + 1);
        u.negate_row(t + 1);
      }
      changed = true;
    }
  }

  // Move zero diagonal entries to the end.
  for (int t = 0; t < n; ++t) {
    if (s(t, t) != 0) continue;
    for (int j = t + 1; j < n; ++j) {
      if (s(j, j) != 0) {
        s.swap_rows(t, j);
        u.swap_rows(t, j);
        s.swap_cols(t, j);
        v.swap_cols(t, j);
        break;
      }
    }
  }

  for (int t = 0; t < n; ++t)
    if (s(t, t) != 0) ++d.rank;
  return d;
}

Int det(const IntMatrix& m) {
  if (!m.square()) throw DimensionMismatch("det: matrix must be square");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = t / prev;  // Bareiss: division is exact
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

IntMatrix left_kernel(const IntMatrix& m) {
  if (m.rows() == 0) return IntMatrix(0, 0);
  if (m.cols() == 0) return IntMatrix::identity(m.rows());
  SnfDecomposition d = snf(m);
  IntMatrix k(m.rows() - d.rank, m.rows());
  for (int i = d.rank; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) k(i - d.rank, j) = d.u(i, j);
  return k;
}

std::optional<IntVector> solve_in_lattice(const IntMatrix& m, const RatVector& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw DimensionMismatch("solve_in_lattice: vector length does not match row count");
  if (!is_integral(b)) return std::nullopt;  // integer columns span a sublattice of Z^n
  if (m.rows() == 0) return IntVector(static_cast<std::size_t>(m.cols()), Int(0));
  if (m.cols() == 0) {
    for (const Rat& q : b)
      if (q != 0) return std::nullopt;
    return IntVector{};
  }

  IntVector bi = to_int(b);
  HnfDecomposition hd = hnf(m.transposed());  // rows of h generate the row span
  const IntMatrix& h = hd.h;

  IntVector z(static_cast<std::size_t>(h.rows()), Int(0));
  IntVector res = bi;
  int col = 0;
  for (int r = 0; r < h.rows(); ++r) {
    // locate the pivot of row r
    int p = -1;
    for (int j = col; j < h.cols(); ++j)
      if (h(r, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) break;  // zero rows follow
    for (int j = col; j < p; ++j)
      if (res[static_cast<std::size_t>(j)] != 0) return std::nullopt;
    if (res[static_cast<std::size_t>(p)] % h(r, p) != 0) return std::nullopt;
    Int q = res[static_cast<std::size_t>(p)] / h(r, p);
    z[static_cast<std::size_t>(r)] = q;
    if (q != 0)
      for (int j = 0; j < h.cols(); ++j) res[static_cast<std::size_t>(j)] -= q * h(r, j);
    col = p + 1;
  }
  for (const Int& x : res)
    if (x != 0) return std::nullopt;

  IntVector sol = mul(hd.u.transposed(), z);
  // Paranoia is cheap here: confirm the certificate before returning it.
  IntVector check = mul(m, sol);
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != bi[i]) throw ConsistencyError("solve_in_lattice: invalid solution");
  return sol;
}

RatMatrix invert_rational(const RatMatrix& m) {
  if (!m.square()) throw DimensionMismatch("invert_rational: matrix must be square");
  int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw SingularMatrix("invert_rational: singular matrix");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    Rat piv = a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c);
      a.row_axpy(i, c, f);
      inv.row_axpy(i, c, f);
    }
  }
  return inv;
}

RatMatrix invert_rational(const IntMatrix& m) { return invert_rational(to_rat(m)); }

}  // namespace rootlat
