#include "rootlat/center.hpp"

#include <algorithm>

#include "rootlat/error.hpp"
#include "rootlat/normal_form.hpp"

namespace rootlat {

namespace {

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_int(a, b) * b;
}

Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Catalogued generator nodes (1-based, local to the component). These are
// the classes the tables are written on: f_1 for family A and E6, the
// half-spin weights for family D, and a single representative for the
// order-two centers.
std::vector<int> catalog_nodes(const TypeLabel& l, FiniteAbelianGroup::Side side) {
  bool weights = side == FiniteAbelianGroup::Side::Weights;
  switch (l.family) {
    case 'A': return {1};
    case 'B': return weights ? std::vector<int>{l.rank} : std::vector<int>{1};
    case 'C': return weights ? std::vector<int>{1} : std::vector<int>{l.rank};
    case 'D':
      if (l.rank % 2 == 1) return {l.rank};
      return {l.rank - 1, l.rank};
    case 'E':
      if (l.rank == 6) return {1};
      if (l.rank == 7) return {7};
      return {};
    default: return {};  // F4, G2
  }
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(const RootSystem& r, Side side) {
  ambient_dim_ = r.rank;
  IntMatrix rel = side == Side::Weights ? r.cartan.transposed() : r.cartan;
  basis_coords_ = to_rat(rel);
  const RatMatrix& lifts = side == Side::Weights ? r.weights : r.coweights;

  if (r.rank > 0) {
    SnfDecomposition dec = snf(rel);
    snf_u_ = dec.u;
    for (int t = 0; t < r.rank; ++t) {
      Int d = dec.s(t, t);
      if (d == 0) throw ConsistencyError("lattice quotient is not finite");
      snf_diag_.push_back(d);
      if (d > 1) {
        nontrivial_.push_back(t);
        invariant_factors_.push_back(d);
      }
    }
  } else {
    snf_u_ = IntMatrix(0, 0);
  }

  for (std::size_t ci = 0; ci < r.components.size(); ++ci) {
    const auto& comp = r.components[ci];
    for (int node : catalog_nodes(comp.label, side)) {
      int ambient_node = comp.offset + node;  // 1-based
      gen_names_.push_back("f" + std::to_string(ambient_node) +
                           (side == Side::Coweights ? "v" : ""));
      gen_lifts_.push_back(lifts.col(ambient_node - 1));
      gen_component_.push_back(static_cast<int>(ci));
    }
  }

  // Orders of the chosen generators, straight from their SNF coordinates.
  std::vector<std::vector<Int>> gen_snf;
  for (const RatVector& lift : gen_lifts_) {
    std::vector<Int> s = snf_coords(lift);
    Int ord(1);
    for (std::size_t j = 0; j < nontrivial_.size(); ++j) {
      Int d = invariant_factors_[j];
      ord = lcm_int(ord, d / gcd_int(d, s[j]));
    }
    gen_orders_.push_back(ord);
    gen_snf.push_back(std::move(s));
  }

  // The generator list must present the group: the combination map
  // gen-coordinate tuples -> elements has to be a bijection.
  Int expected = order();
  Int actual(1);
  for (const Int& d : invariant_factors_) actual *= d;
  if (expected != actual)
    throw ConsistencyError("catalogued generators do not span the quotient");

  std::vector<Int> counter(gen_orders_.size(), Int(0));
  while (true) {
    std::vector<Int> s(nontrivial_.size(), Int(0));
    for (std::size_t g = 0; g < counter.size(); ++g)
      for (std::size_t j = 0; j < s.size(); ++j)
        s[j] = mod_pos(s[j] + counter[g] * gen_snf[g][j], invariant_factors_[j]);
    if (!snf_to_gen_.emplace(s, counter).second)
      throw ConsistencyError("catalogued generators are not independent");
    std::size_t g = 0;
    while (g < counter.size() && counter[g] == gen_orders_[g] - 1) {
      counter[g] = 0;
      ++g;
    }
    if (g == counter.size()) break;
    ++counter[g];
  }
  if (Int(static_cast<long>(snf_to_gen_.size())) != expected)
    throw ConsistencyError("catalogued generators do not enumerate the quotient");
}

Int FiniteAbelianGroup::order() const {
  Int o(1);
  for (const Int& d : gen_orders_) o *= d;
  return o;
}

std::vector<Int> FiniteAbelianGroup::snf_coords(const RatVector& ambient) const {
  if (static_cast<int>(ambient.size()) != ambient_dim_)
    throw DimensionMismatch("quotient reduce: wrong ambient dimension");
  RatVector w = mul(basis_coords_, ambient);
  if (!is_integral(w))
    throw Error("vector is not in the lattice underlying the quotient");
  std::vector<Int> s;
  s.reserve(nontrivial_.size());
  for (int t : nontrivial_) {
    Int acc(0);
    for (int j = 0; j < ambient_dim_; ++j) acc += snf_u_(t, j) * num(w[static_cast<std::size_t>(j)]);
    s.push_back(mod_pos(acc, snf_diag_[static_cast<std::size_t>(t)]));
  }
  return s;
}

std::vector<Int> FiniteAbelianGroup::reduce(const RatVector& ambient) const {
  auto it = snf_to_gen_.find(snf_coords(ambient));
  if (it == snf_to_gen_.end())
    throw ConsistencyError("quotient reduce: element missing from the lookup");
  return it->second;
}

RatVector FiniteAbelianGroup::lift(const std::vector<Int>& coords) const {
  if (coords.size() != gen_orders_.size())
    throw DimensionMismatch("quotient lift: wrong coordinate count");
  RatVector v(static_cast<std::size_t>(ambient_dim_), Rat(0));
  for (std::size_t g = 0; g < coords.size(); ++g)
    for (int i = 0; i < ambient_dim_; ++i)
      v[static_cast<std::size_t>(i)] += Rat(coords[g]) * gen_lifts_[g][static_cast<std::size_t>(i)];
  return v;
}

bool FiniteAbelianGroup::contains_ambient(const RatVector& ambient) const {
  if (static_cast<int>(ambient.size()) != ambient_dim_) return false;
  return is_integral(mul(basis_coords_, ambient));
}

std::vector<Int> FiniteAbelianGroup::zero() const {
  return std::vector<Int>(gen_orders_.size(), Int(0));
}

std::vector<Int> FiniteAbelianGroup::add(const std::vector<Int>& a,
                                         const std::vector<Int>& b) const {
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod_pos(a[i] + b[i], gen_orders_[i]);
  return c;
}

std::vector<Int> FiniteAbelianGroup::neg(const std::vector<Int>& a) const {
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod_pos(-a[i], gen_orders_[i]);
  return c;
}

bool FiniteAbelianGroup::is_zero(const std::vector<Int>& a) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mod_pos(a[i], gen_orders_[i]) != 0) return false;
  return true;
}

Int FiniteAbelianGroup::element_order(const std::vector<Int>& a) const {
  Int ord(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int d = gen_orders_[i];
    ord = lcm_int(ord, d / gcd_int(d, a[i]));
  }
  return ord;
}

std::vector<std::vector<Int>> FiniteAbelianGroup::elements() const {
  std::vector<std::vector<Int>> out;
  std::vector<Int> counter(gen_orders_.size(), Int(0));
  while (true) {
    out.push_back(counter);
    std::size_t g = 0;
    while (g < counter.size() && counter[g] == gen_orders_[g] - 1) {
      counter[g] = 0;
      ++g;
    }
    if (g == counter.size()) break;
    ++counter[g];
  }
  return out;
}

FiniteAbelianGroup weight_quotient(const RootSystem& r) {
  return FiniteAbelianGroup(r, FiniteAbelianGroup::Side::Weights);
}

FiniteAbelianGroup coweight_quotient(const RootSystem& r) {
  return FiniteAbelianGroup(r, FiniteAbelianGroup::Side::Coweights);
}

std::vector<Int> GroupHom::apply(const std::vector<Int>& coords) const {
  if (static_cast<int>(coords.size()) != mat.cols())
    throw DimensionMismatch("hom applied to wrong coordinate count");
  std::vector<Int> out(static_cast<std::size_t>(mat.rows()), Int(0));
  for (int i = 0; i < mat.rows(); ++i) {
    Int acc(0);
    for (int j = 0; j < mat.cols(); ++j) acc += mat(i, j) * coords[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = mod_pos(acc, target.gen_orders()[static_cast<std::size_t>(i)]);
  }
  return out;
}

bool GroupHom::is_zero() const {
  for (int i = 0; i < mat.rows(); ++i)
    for (int j = 0; j < mat.cols(); ++j) {
      Int v = mat(i, j) % target.gen_orders()[static_cast<std::size_t>(i)];
      if (v != 0) return false;
    }
  return true;
}

GroupHom GroupHom::after(const GroupHom& inner) const {
  if (!source.same_presentation(inner.target))
    throw DimensionMismatch("hom composition: middle groups do not match");
  GroupHom out{inner.source, target, mul(mat, inner.mat)};
  for (int i = 0; i < out.mat.rows(); ++i)
    for (int j = 0; j < out.mat.cols(); ++j) {
      Int d = target.gen_orders()[static_cast<std::size_t>(i)];
      Int v = out.mat(i, j) % d;
      if (v < 0) v += d;
      out.mat(i, j) = v;
    }
  return out;
}

bool GroupHom::equals(const GroupHom& o) const {
  if (!source.same_presentation(o.source) || !target.same_presentation(o.target)) return false;
  // Element-by-element comparison; generator agreement would suffice, so the
  // loop is capped for very large groups.
  if (source.order() <= 65536) {
    for (const auto& el : source.elements())
      if (apply(el) != o.apply(el)) return false;
    return true;
  }
  for (int j = 0; j < mat.cols(); ++j) {
    std::vector<Int> unit(static_cast<std::size_t>(mat.cols()), Int(0));
    unit[static_cast<std::size_t>(j)] = 1;
    if (apply(unit) != o.apply(unit)) return false;
  }
  return true;
}

std::vector<Int> GroupHom::kernel_invariant_factors() const {
  int k = source.ngens();
  if (k == 0) return {};
  int m = target.ngens();

  // Lattice of integer tuples mapping into the target relation lattice.
  IntMatrix gens(k, 0);
  {
    IntMatrix a(m, k + m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < k; ++j) a(i, j) = mat(i, j);
      a(i, k + i) = target.gen_orders()[static_cast<std::size_t>(i)];
    }
    if (m == 0) {
      gens = IntMatrix::identity(k);
    } else {
      SnfDecomposition dec = snf(a);
      int null_count = (k + m) - dec.rank;
      gens = IntMatrix(k, null_count + k);
      for (int c = 0; c < null_count; ++c)
        for (int i = 0; i < k; ++i) gens(i, c) = dec.v(i, dec.rank + c);
      for (int i = 0; i < k; ++i) gens(i, null_count + i) = source.gen_orders()[static_cast<std::size_t>(i)];
    }
  }

  HnfDecomposition hd = hnf(gens.transposed());
  int rank = 0;
  for (int r = 0; r < hd.h.rows(); ++r) {
    bool zero_row = true;
    for (int c = 0; c < hd.h.cols(); ++c)
      if (hd.h(r, c) != 0) {
        zero_row = false;
        break;
      }
    if (!zero_row) ++rank;
  }
  if (rank != k) throw ConsistencyError("kernel lattice is not full rank");
  IntMatrix basis(rank, k);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < k; ++c) basis(r, c) = hd.h(r, c);

  // Express the source relation lattice in that basis.
  IntMatrix x(k, k);
  for (int j = 0; j < k; ++j) {
    RatVector target_vec(static_cast<std::size_t>(k), Rat(0));
    target_vec[static_cast<std::size_t>(j)] = Rat(source.gen_orders()[static_cast<std::size_t>(j)]);
    auto sol = solve_in_lattice(basis.transposed(), target_vec);
    if (!sol) throw ConsistencyError("relation lattice escaped the kernel lattice");
    for (int i = 0; i < k; ++i) x(i, j) = (*sol)[static_cast<std::size_t>(i)];
  }

  SnfDecomposition xd = snf(x);
  std::vector<Int> out;
  for (int t = 0; t < k; ++t) {
    Int d = xd.s(t, t);
    if (d < 0) d = -d;
    if (d > 1) out.push_back(d);
  }
  return out;
}

GroupHom GroupHom::zero_map(const FiniteAbelianGroup& src, const FiniteAbelianGroup& tgt) {
  return {src, tgt, IntMatrix(tgt.ngens(), src.ngens())};
}

DescendResult descend(const FiniteAbelianGroup& src, const FiniteAbelianGroup& tgt,
                      const RatMatrix& ambient_map) {
  if (ambient_map.cols() != src.ambient_dim() || ambient_map.rows() != tgt.ambient_dim())
    throw DimensionMismatch("descend: ambient map shape mismatch");
  // Sublattice into sublattice: in these coordinates both sublattices are
  // the integer points, so the matrix itself must be integral.
  for (int i = 0; i < ambient_map.rows(); ++i)
    for (int j = 0; j < ambient_map.cols(); ++j)
      if (!is_integral(ambient_map(i, j)))
        return {std::nullopt, "image of basis vector " + std::to_string(j + 1) +
                                  " leaves the sublattice: " +
                                  to_string(ambient_map.col(j))};

  GroupHom hom{src, tgt, IntMatrix(tgt.ngens(), src.ngens())};
  for (int j = 0; j < src.ngens(); ++j) {
    RatVector img = mul(ambient_map, src.gen_lifts()[static_cast<std::size_t>(j)]);
    if (!tgt.contains_ambient(img))
      return {std::nullopt, "image of generator " + src.gen_names()[static_cast<std::size_t>(j)] +
                                " is not in the target lattice: " + to_string(img)};
    std::vector<Int> coords = tgt.reduce(img);
    for (int i = 0; i < tgt.ngens(); ++i) hom.mat(i, j) = coords[static_cast<std::size_t>(i)];
  }

  // Generator orders must be respected; with the lattice checks above this
  // is automatic, so a failure here is a bug.
  for (int j = 0; j < src.ngens(); ++j) {
    std::vector<Int> unit(static_cast<std::size_t>(src.ngens()), Int(0));
    unit[static_cast<std::size_t>(j)] = 1;
    std::vector<Int> img = hom.apply(unit);
    for (std::size_t i = 0; i < img.size(); ++i) {
      Int v = img[i] * src.gen_orders()[static_cast<std::size_t>(j)] % tgt.gen_orders()[i];
      if (v != 0) throw ConsistencyError("descended map does not respect generator orders");
    }
  }
  return {hom, ""};
}

QmodZ PairingTable::value_on(const std::vector<Int>& l, const std::vector<Int>& r) const {
  QmodZ acc;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      acc = acc + values[i][j].scaled(l[i] * r[j]);
  return acc;
}

namespace {

void check_biadditivity(const PairingTable& t) {
  for (int i = 0; i < t.left.ngens(); ++i)
    for (int j = 0; j < t.right.ngens(); ++j) {
      if (!t.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
               .scaled(t.left.gen_orders()[static_cast<std::size_t>(i)])
               .zero() ||
          !t.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
               .scaled(t.right.gen_orders()[static_cast<std::size_t>(j)])
               .zero())
        throw ConsistencyError("pairing value incompatible with generator orders");
    }
}

}  // namespace

PairingTable duality_pairing(const RootSystem& r) {
  PairingTable t;
  t.left = weight_quotient(r);
  t.right = coweight_quotient(r);
  t.values.assign(static_cast<std::size_t>(t.left.ngens()),
                  std::vector<QmodZ>(static_cast<std::size_t>(t.right.ngens())));
  for (int i = 0; i < t.left.ngens(); ++i)
    for (int j = 0; j < t.right.ngens(); ++j)
      t.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          QmodZ(r.pair(t.left.gen_lifts()[static_cast<std::size_t>(i)],
                       t.right.gen_lifts()[static_cast<std::size_t>(j)]));
  check_biadditivity(t);
  return t;
}

PerfectnessResult check_perfect(const PairingTable& t) {
  auto characters_injective = [&](bool left_side) -> std::optional<std::string> {
    const FiniteAbelianGroup& side = left_side ? t.left : t.right;
    const FiniteAbelianGroup& other = left_side ? t.right : t.left;
    std::map<std::vector<Rat>, std::vector<Int>> seen;
    for (const auto& el : side.elements()) {
      std::vector<Rat> sig;
      for (int j = 0; j < other.ngens(); ++j) {
        std::vector<Int> unit(static_cast<std::size_t>(other.ngens()), Int(0));
        unit[static_cast<std::size_t>(j)] = 1;
        sig.push_back(left_side ? t.value_on(el, unit).v : t.value_on(unit, el).v);
      }
      auto [it, inserted] = seen.emplace(sig, el);
      if (!inserted)
        return std::string(left_side ? "left" : "right") + " elements " +
               to_string(it->second) + " and " + to_string(el) +
               " induce the same character";
    }
    return std::nullopt;
  };
  if (auto w = characters_injective(true)) return {false, *w};
  if (auto w = characters_injective(false)) return {false, *w};
  return {true, ""};
}

GroupHom rho(const RootSystem& r) {
  DescendResult d = descend(coweight_quotient(r), weight_quotient(r), phi(r).m);
  if (!d.hom) throw ConsistencyError("rho failed to descend: " + d.failure);
  return *d.hom;
}

std::string KernelClass::str() const {
  switch (kind) {
    case Kind::Iso: return "iso";
    case Kind::Zero: return "zero";
    case Kind::TrivialCenter: return "trivial-center";
  }
  return "?";
}

KernelClass rho_kernel_class(const RootSystem& r) {
  if (!r.irreducible())
    throw Error("kernel classification is defined per irreducible type");
  GroupHom h = rho(r);
  KernelClass out{KernelClass::Kind::Iso, h.kernel_invariant_factors()};
  if (h.source.trivial()) {
    out.kind = KernelClass::Kind::TrivialCenter;
  } else if (h.is_zero()) {
    out.kind = KernelClass::Kind::Zero;
  } else if (out.kernel_factors.empty()) {
    out.kind = KernelClass::Kind::Iso;
  } else {
    throw ConsistencyError("rho on " + r.space_tag() + " is neither zero nor injective");
  }
  return out;
}

PairingTable induced_pairing_from(const RootSystem& r, const GroupHom& rho_like) {
  PairingTable dual = duality_pairing(r);
  PairingTable t;
  t.left = rho_like.source;
  t.right = rho_like.source;
  int n = t.left.ngens();
  t.values.assign(static_cast<std::size_t>(n), std::vector<QmodZ>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Int> unit_i(static_cast<std::size_t>(n), Int(0));
      std::vector<Int> unit_j(static_cast<std::size_t>(n), Int(0));
      unit_i[static_cast<std::size_t>(i)] = 1;
      unit_j[static_cast<std::size_t>(j)] = 1;
      t.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          dual.value_on(rho_like.apply(unit_j), unit_i);
    }
  check_biadditivity(t);
  return t;
}

PairingTable induced_pairing(const RootSystem& r) {
  PairingTable t = induced_pairing_from(r, rho(r));
  for (std::size_t i = 0; i < t.values.size(); ++i)
    for (std::size_t j = 0; j < t.values.size(); ++j)
      if (!(t.values[i][j] == t.values[j][i]))
        throw ConsistencyError("induced pairing came out asymmetric on " + r.space_tag());
  return t;
}

}  // namespace rootlat
