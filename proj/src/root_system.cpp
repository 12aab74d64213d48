#include "rootlat/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "rootlat/error.hpp"
#include "rootlat/normal_form.hpp"

namespace rootlat {

TypeLabel TypeLabel::parse(const std::string& text) {
  if (text.size() < 2) throw InvalidLabel("unparseable type label: '" + text + "'");
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  for (std::size_t i = 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InvalidLabel("unparseable type label: '" + text + "'");
  if (text.size() > 3) throw InvalidLabel("rank out of range in label: '" + text + "'");
  TypeLabel l{fam, std::stoi(text.substr(1))};
  if (!l.admissible())
    throw InvalidLabel("inadmissible type label: '" + l.str() + "'");
  return l;
}

bool TypeLabel::admissible() const {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

std::string TypeLabel::str() const { return family + std::to_string(rank); }

std::optional<TypeLabel> TypeLabel::canonical_alias() const {
  if (family == 'C' && rank == 2) return TypeLabel{'B', 2};
  if (family == 'D' && rank == 3) return TypeLabel{'A', 3};
  return std::nullopt;
}

RatVector LatticeMap::apply(const RatVector& v) const { return mul(m, v); }

LatticeMap compose(const LatticeMap& outer, const LatticeMap& inner) {
  if (!(inner.target == outer.source))
    throw DimensionMismatch("lattice map composition: basis tags do not match");
  return {inner.source, outer.target, mul(outer.m, inner.m)};
}

namespace {

IntMatrix cartan_matrix(const TypeLabel& l) {
  int n = l.rank;
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto bond = [&](int i, int j) {  // 1-based single bond
    c(i - 1, j - 1) = -1;
    c(j - 1, i - 1) = -1;
  };
  switch (l.family) {
    case 'A':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      c(n - 2, n - 1) = -2;
      c(n - 1, n - 2) = -1;
      break;
    case 'C':  // alpha_n long
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      c(n - 2, n - 1) = -1;
      c(n - 1, n - 2) = -2;
      break;
    case 'D':
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case 'E':
      bond(1, 3);
      bond(3, 4);
      bond(2, 4);
      for (int i = 4; i < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(1, 2);
      c(1, 2) = -2;  // alpha_2 long, alpha_3 short
      c(2, 1) = -1;
      bond(3, 4);
      break;
    case 'G':
      c(0, 1) = -1;  // alpha_1 short
      c(1, 0) = -3;
      break;
  }
  return c;
}

// Square lengths of the simple roots of one irreducible block, normalized
// so the minimum is one. Adjacent nodes satisfy
// len2(i) / len2(j) = C(i,j) / C(j,i).
std::vector<Int> block_square_lengths(const IntMatrix& c) {
  int n = c.rows();
  std::vector<Rat> len2(static_cast<std::size_t>(n), Rat(0));
  std::vector<int> stack{0};
  len2[0] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || c(i, j) == 0 || len2[static_cast<std::size_t>(j)] != 0) continue;
      len2[static_cast<std::size_t>(j)] =
          len2[static_cast<std::size_t>(i)] * Rat(c(j, i)) / Rat(c(i, j));
      stack.push_back(j);
    }
  }
  Rat mn = len2[0];
  for (const Rat& v : len2) {
    if (v == 0) throw ConsistencyError("square lengths: diagram block is not connected");
    mn = std::min(mn, v);
  }
  std::vector<Int> out;
  for (const Rat& v : len2) {
    Rat scaled = v / mn;
    if (!is_integral(scaled))
      throw ConsistencyError("square lengths: non-integral normalized length");
    out.push_back(num(scaled));
  }
  return out;
}

// Orbit of the simple (root, coroot) pairs under the simple reflections.
void generate_roots(RootSystem& r) {
  int n = r.rank;
  const IntMatrix& c = r.cartan;
  std::map<IntVector, IntVector> seen;  // root -> its coroot
  std::vector<std::pair<IntVector, IntVector>> work;
  for (int i = 0; i < n; ++i) {
    IntVector e(static_cast<std::size_t>(n), Int(0));
    e[static_cast<std::size_t>(i)] = 1;
    seen.emplace(e, e);
    work.emplace_back(e, e);
  }
  const std::size_t cap = static_cast<std::size_t>(4 * n * n + 600);
  while (!work.empty()) {
    auto [root, coroot] = work.back();
    work.pop_back();
    for (int j = 0; j < n; ++j) {
      Int rc(0), cc(0);
      for (int i = 0; i < n; ++i) {
        rc += root[static_cast<std::size_t>(i)] * c(i, j);
        cc += coroot[static_cast<std::size_t>(i)] * c(j, i);
      }
      IntVector nr = root;
      nr[static_cast<std::size_t>(j)] -= rc;
      IntVector nc = coroot;
      nc[static_cast<std::size_t>(j)] -= cc;
      auto [it, inserted] = seen.emplace(nr, nc);
      if (inserted) {
        work.emplace_back(nr, nc);
        if (seen.size() > cap)
          throw ConsistencyError("reflection closure exceeded the size bound");
      } else if (it->second != nc) {
        throw ConsistencyError("reflection closure produced two coroots for one root");
      }
    }
  }
  r.roots.reserve(seen.size());
  r.coroots.reserve(seen.size());
  for (auto& [root, coroot] : seen) {
    r.roots.push_back(root);
    r.coroots.push_back(coroot);
  }
}

void finish(RootSystem& r) {
  int n = r.rank;
  const IntMatrix& c = r.cartan;

  r.d_root.assign(static_cast<std::size_t>(n), Int(0));
  r.d_coroot.assign(static_cast<std::size_t>(n), Int(0));
  for (const auto& comp : r.components) {
    int k = comp.label.rank;
    IntMatrix block(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) block(i, j) = c(comp.offset + i, comp.offset + j);
    auto droot = block_square_lengths(block);
    auto dcoroot = block_square_lengths(block.transposed());
    for (int i = 0; i < k; ++i) {
      r.d_root[static_cast<std::size_t>(comp.offset + i)] = droot[static_cast<std::size_t>(i)];
      r.d_coroot[static_cast<std::size_t>(comp.offset + i)] =
          dcoroot[static_cast<std::size_t>(i)];
    }
  }

  r.root_form = RatMatrix(n, n);
  r.coroot_form = RatMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.root_form(i, j) = Rat(c(i, j)) * Rat(r.d_root[static_cast<std::size_t>(j)]) / 2;
      r.coroot_form(i, j) = Rat(c(j, i)) * Rat(r.d_coroot[static_cast<std::size_t>(j)]) / 2;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (r.root_form(i, j) != r.root_form(j, i) || r.coroot_form(i, j) != r.coroot_form(j, i))
        throw ConsistencyError("invariant form is not symmetric");
    }

  if (n > 0) {
    r.weights = invert_rational(r.cartan.transposed());
    r.coweights = invert_rational(r.cartan);
  } else {
    r.weights = RatMatrix(0, 0);
    r.coweights = RatMatrix(0, 0);
  }

  generate_roots(r);
}

}  // namespace

RootSystem build(const TypeLabel& label) {
  if (!label.admissible())
    throw InvalidLabel("inadmissible type label: '" + label.str() + "'");
  RootSystem r;
  r.components = {{label, 0}};
  r.rank = label.rank;
  r.cartan = cartan_matrix(label);
  finish(r);
  return r;
}

RootSystem build(const std::string& label) { return build(TypeLabel::parse(label)); }

RootSystem product(const std::vector<RootSystem>& systems) {
  RootSystem r;
  for (const RootSystem& s : systems) {
    for (const auto& comp : s.components)
      r.components.push_back({comp.label, r.rank + comp.offset});
    r.rank += s.rank;
  }
  r.cartan = IntMatrix(r.rank, r.rank);
  int off = 0;
  for (const RootSystem& s : systems) {
    for (int i = 0; i < s.rank; ++i)
      for (int j = 0; j < s.rank; ++j) r.cartan(off + i, off + j) = s.cartan(i, j);
    off += s.rank;
  }
  finish(r);
  return r;
}

std::string RootSystem::space_tag() const {
  if (components.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += "x";
    s += components[i].label.str();
  }
  return s;
}

Rat RootSystem::pair(const RatVector& x, const RatVector& y) const {
  if (static_cast<int>(x.size()) != rank || static_cast<int>(y.size()) != rank)
    throw DimensionMismatch("pairing operands do not match the rank");
  Rat acc(0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      acc += x[static_cast<std::size_t>(i)] * Rat(cartan(i, j)) * y[static_cast<std::size_t>(j)];
  return acc;
}

bool RootSystem::in_root_lattice(const RatVector& x) const { return is_integral(x); }

bool RootSystem::in_weight_lattice(const RatVector& x) const {
  return is_integral(mul(to_rat(cartan.transposed()), x));
}

bool RootSystem::in_coroot_lattice(const RatVector& y) const { return is_integral(y); }

bool RootSystem::in_coweight_lattice(const RatVector& y) const {
  return is_integral(mul(to_rat(cartan), y));
}

const RatMatrix& fundamental_weights(const RootSystem& r) { return r.weights; }

const RatMatrix& fundamental_coweights(const RootSystem& r) { return r.coweights; }

LatticeMap phi(const RootSystem& r) {
  RatVector d(r.d_coroot.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = Rat(r.d_coroot[i]);
  return {{BasisKind::SimpleCoroots, r.space_tag()},
          {BasisKind::SimpleRoots, r.space_tag()},
          RatMatrix::diagonal(d)};
}

LatticeMap phi_dual(const RootSystem& r) {
  RatVector d(r.d_root.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = Rat(r.d_root[i]);
  return {{BasisKind::SimpleRoots, r.space_tag()},
          {BasisKind::SimpleCoroots, r.space_tag()},
          RatMatrix::diagonal(d)};
}

bool PhiReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

PhiReport check_phi_properties(const RootSystem& r) {
  PhiReport rep;
  LatticeMap f = phi(r);
  LatticeMap fd = phi_dual(r);

  {
    PhiReport::Check c{"coweights_land_in_weight_lattice", true, ""};
    for (int k = 0; k < r.rank; ++k) {
      RatVector img = f.apply(r.coweights.col(k));
      if (!r.in_weight_lattice(img)) {
        c.pass = false;
        c.witness = "phi(f" + std::to_string(k + 1) + "v) = " + to_string(img);
        break;
      }
    }
    rep.checks.push_back(c);
  }
  {
    PhiReport::Check c{"coroots_land_in_root_lattice", true, ""};
    for (int k = 0; k < r.rank; ++k) {
      RatVector e(static_cast<std::size_t>(r.rank), Rat(0));
      e[static_cast<std::size_t>(k)] = 1;
      RatVector img = f.apply(e);
      if (!r.in_root_lattice(img)) {
        c.pass = false;
        c.witness = "phi(alpha" + std::to_string(k + 1) + "v) = " + to_string(img);
        break;
      }
    }
    rep.checks.push_back(c);
  }
  {
    PhiReport::Check c{"fundamental_coweight_scaling", true, ""};
    for (int k = 0; k < r.rank; ++k) {
      RatVector img = f.apply(r.coweights.col(k));
      RatVector want = r.weights.col(k);
      for (Rat& q : want) q *= Rat(r.d_coroot[static_cast<std::size_t>(k)]);
      if (img != want) {
        c.pass = false;
        c.witness = "phi(f" + std::to_string(k + 1) + "v) = " + to_string(img) +
                    ", expected " + to_string(want);
        break;
      }
    }
    rep.checks.push_back(c);
  }
  {
    PhiReport::Check c{"dual_composite_scalar", true, ""};
    RatMatrix comp = mul(f.m, fd.m);  // V -> V
    for (const auto& component : r.components) {
      Int ratio(1);
      for (int i = 0; i < component.label.rank; ++i)
        ratio = std::max(ratio, r.d_coroot[static_cast<std::size_t>(component.offset + i)]);
      for (int i = 0; i < component.label.rank && c.pass; ++i)
        for (int j = 0; j < component.label.rank; ++j) {
          Rat want = (i == j) ? Rat(ratio) : Rat(0);
          if (comp(component.offset + i, component.offset + j) != want) {
            c.pass = false;
            c.witness = component.label.str() + " block of phi*phi_dual is not " +
                        ratio.str() + "*identity";
            break;
          }
        }
    }
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace rootlat
