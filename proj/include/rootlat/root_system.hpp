#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootlat/matrix.hpp"

namespace rootlat {

// Dynkin type, Bourbaki node numbering throughout. C2 and D3 are accepted
// as labels in their own right (isomorphic to B2 / A3 but numbered per
// their own family).
struct TypeLabel {
  char family = 'A';
  int rank = 0;

  static TypeLabel parse(const std::string& text);  // throws InvalidLabel
  bool admissible() const;
  std::string str() const;
  // B2 for C2, A3 for D3; nullopt when the label is already canonical.
  std::optional<TypeLabel> canonical_alias() const;

  bool operator==(const TypeLabel&) const = default;
};

enum class BasisKind { SimpleRoots, SimpleCoroots, FundamentalWeights, FundamentalCoweights };

struct BasisRef {
  BasisKind kind;
  std::string space;
  bool operator==(const BasisRef&) const = default;
};

// Linear map between lattices, stored as an exact matrix on tagged bases.
struct LatticeMap {
  BasisRef source;
  BasisRef target;
  RatMatrix m;

  RatVector apply(const RatVector& v) const;
};

// outer ∘ inner; the inner target basis must match the outer source basis.
LatticeMap compose(const LatticeMap& outer, const LatticeMap& inner);

// A reduced root system, possibly a product. Vectors on the V side live in
// simple-root coordinates, vectors on the V* side in simple-coroot
// coordinates; both forms are normalized per irreducible component so the
// short (co)roots have square length one.
struct RootSystem {
  struct Component {
    TypeLabel label;
    int offset;  // index of its first simple root
  };

  std::vector<Component> components;
  int rank = 0;
  IntMatrix cartan;  // cartan(i, j) = alpha_j^vee(alpha_i)

  std::vector<IntVector> roots;    // all roots, simple-root coordinates, sorted
  std::vector<IntVector> coroots;  // coroots[k] is the coroot of roots[k]

  std::vector<Int> d_root;    // (alpha_i, alpha_i)
  std::vector<Int> d_coroot;  // (alpha_i^vee, alpha_i^vee)^vee

  RatMatrix root_form;    // Gram matrix of ( , ) on the simple roots
  RatMatrix coroot_form;  // Gram matrix of ( , )^vee on the simple coroots

  RatMatrix weights;    // column i: fundamental weight f_i, simple-root coords
  RatMatrix coweights;  // column i: fundamental coweight f_i^vee, coroot coords

  bool irreducible() const { return components.size() == 1; }
  std::string space_tag() const;
  std::size_t root_count() const { return roots.size(); }

  // canonical pairing <x, y> of V with V*
  Rat pair(const RatVector& x_root_coords, const RatVector& y_coroot_coords) const;

  bool in_root_lattice(const RatVector& x) const;      // integral coordinates
  bool in_weight_lattice(const RatVector& x) const;    // C^T x integral
  bool in_coroot_lattice(const RatVector& y) const;    // integral coordinates
  bool in_coweight_lattice(const RatVector& y) const;  // C y integral
};

RootSystem build(const TypeLabel& label);
RootSystem build(const std::string& label);

// Block-diagonal product; an empty list yields the rank-0 system.
RootSystem product(const std::vector<RootSystem>& systems);

// Columns are the fundamental (co)weights on the simple (co)root basis.
const RatMatrix& fundamental_weights(const RootSystem& r);
const RatMatrix& fundamental_coweights(const RootSystem& r);

// The map V* -> V sending each coroot to its root scaled by the coroot
// square length: diagonal on the simple bases.
LatticeMap phi(const RootSystem& r);
LatticeMap phi_dual(const RootSystem& r);

struct PhiReport {
  struct Check {
    std::string id;
    bool pass;
    std::string witness;  // empty when passing
  };
  std::vector<Check> checks;
  bool pass() const;
};

// Mechanically verifies the defining properties of phi: fundamental
// coweights land in the weight lattice scaled by d, simple coroots land in
// the root lattice, and phi composed with its dual is the short-root
// square-length scalar on every irreducible component.
PhiReport check_phi_properties(const RootSystem& r);

}  // namespace rootlat
