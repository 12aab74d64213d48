#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootlat/root_system.hpp"

namespace rootlat {

// Element of Q/Z, stored as the canonical representative in [0, 1).
struct QmodZ {
  Rat v;

  QmodZ() : v(0) {}
  explicit QmodZ(const Rat& q) : v(mod_one(q)) {}

  QmodZ operator+(const QmodZ& o) const { return QmodZ(v + o.v); }
  QmodZ scaled(const Int& k) const { return QmodZ(v * Rat(k)); }
  bool zero() const { return v == 0; }
  std::string str() const { return v == 0 ? "0" : rootlat::to_string(v); }
  bool operator==(const QmodZ&) const = default;
};

// Finite quotient of a weight lattice by the corresponding root lattice,
// presented by Smith normal form but addressed through a fixed generator
// list (the catalogued fundamental-weight classes where the type provides
// them). Ambient vectors are simple-root or simple-coroot coordinates, in
// which the sublattice is exactly the integer span.
class FiniteAbelianGroup {
 public:
  enum class Side { Weights, Coweights };

  FiniteAbelianGroup() = default;
  FiniteAbelianGroup(const RootSystem& r, Side side);

  const std::vector<Int>& invariant_factors() const { return invariant_factors_; }
  const std::vector<Int>& gen_orders() const { return gen_orders_; }
  const std::vector<std::string>& gen_names() const { return gen_names_; }
  const std::vector<RatVector>& gen_lifts() const { return gen_lifts_; }

  Int order() const;
  int ngens() const { return static_cast<int>(gen_orders_.size()); }
  bool trivial() const { return order() == 1; }
  int ambient_dim() const { return ambient_dim_; }

  // Class of an ambient vector as generator coordinates; the vector must
  // lie in the (co)weight lattice.
  std::vector<Int> reduce(const RatVector& ambient) const;
  RatVector lift(const std::vector<Int>& coords) const;

  bool contains_ambient(const RatVector& ambient) const;

  std::vector<Int> zero() const;
  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;
  std::vector<Int> neg(const std::vector<Int>& a) const;
  bool is_zero(const std::vector<Int>& a) const;
  Int element_order(const std::vector<Int>& a) const;
  std::vector<std::vector<Int>> elements() const;

  // Same generator orders; group values are interchangeable then.
  bool same_presentation(const FiniteAbelianGroup& o) const {
    return gen_orders_ == o.gen_orders_;
  }

  // Index of the component each generator belongs to.
  const std::vector<int>& gen_component() const { return gen_component_; }

 private:
  std::vector<Int> snf_coords(const RatVector& ambient) const;

  int ambient_dim_ = 0;
  std::vector<Int> invariant_factors_;
  std::vector<Int> gen_orders_;
  std::vector<std::string> gen_names_;
  std::vector<RatVector> gen_lifts_;
  std::vector<int> gen_component_;
  RatMatrix basis_coords_;  // ambient -> (co)weight-basis coordinates
  IntMatrix snf_u_;
  std::vector<Int> snf_diag_;
  std::vector<int> nontrivial_;
  std::map<std::vector<Int>, std::vector<Int>> snf_to_gen_;
};

FiniteAbelianGroup weight_quotient(const RootSystem& r);    // Delta
FiniteAbelianGroup coweight_quotient(const RootSystem& r);  // Delta_dual

// Homomorphism between two finite quotients, stored on their generators.
struct GroupHom {
  FiniteAbelianGroup source;
  FiniteAbelianGroup target;
  IntMatrix mat;  // mat(i, j): coordinate i of the image of source generator j

  std::vector<Int> apply(const std::vector<Int>& coords) const;
  bool is_zero() const;
  GroupHom after(const GroupHom& inner) const;  // this ∘ inner
  bool equals(const GroupHom& o) const;
  std::vector<Int> kernel_invariant_factors() const;

  static GroupHom zero_map(const FiniteAbelianGroup& src, const FiniteAbelianGroup& tgt);
};

// Descends an ambient-coordinate lattice map to the quotients, verifying
// that it maps lattice into lattice and sublattice into sublattice.
struct DescendResult {
  std::optional<GroupHom> hom;
  std::string failure;  // nonempty iff descent is ill-defined
};
DescendResult descend(const FiniteAbelianGroup& src, const FiniteAbelianGroup& tgt,
                      const RatMatrix& ambient_map);

struct PairingTable {
  FiniteAbelianGroup left;
  FiniteAbelianGroup right;
  std::vector<std::vector<QmodZ>> values;  // left gens x right gens

  QmodZ value_on(const std::vector<Int>& l, const std::vector<Int>& r) const;
};

// <x, y> on classes: Delta x Delta_dual -> Q/Z.
PairingTable duality_pairing(const RootSystem& r);

struct PerfectnessResult {
  bool perfect;
  std::string witness;
};
// Exhaustive: distinct elements on either side induce distinct characters.
PerfectnessResult check_perfect(const PairingTable& t);

// The map Delta_dual -> Delta induced by phi.
GroupHom rho(const RootSystem& r);

struct KernelClass {
  enum class Kind { Iso, Zero, TrivialCenter };
  Kind kind;
  std::vector<Int> kernel_factors;
  std::string str() const;
};
KernelClass rho_kernel_class(const RootSystem& r);  // irreducible input only

// Delta_dual x Delta_dual -> Q/Z through the duality pairing and rho.
PairingTable induced_pairing(const RootSystem& r);
// Same bilinear construction around an arbitrary stand-in for rho; the
// verification harness uses this to prove it can detect a broken map.
PairingTable induced_pairing_from(const RootSystem& r, const GroupHom& rho_like);

}  // namespace rootlat
