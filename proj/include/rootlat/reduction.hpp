#pragma once

#include <string>
#include <vector>

#include "rootlat/center.hpp"
#include "rootlat/root_system.hpp"

namespace rootlat {

// Connected piece of the sub-diagram on the simple roots whose fundamental
// weight stays outside the root lattice. Always of type A, with one common
// coroot square length.
struct TypeAComponent {
  std::vector<int> nodes;  // ambient node indices, 1-based, in path order
  TypeLabel label;
  Int d;
};

struct SimpleRootPartition {
  std::vector<int> pi_r;      // nodes whose fundamental weight is in the root lattice
  std::vector<int> pi_prime;  // the complement
  std::vector<TypeAComponent> components;
};

// Splits the simple roots of an irreducible system by root-lattice
// membership of their fundamental weights; membership is decided exactly.
SimpleRootPartition partition(const RootSystem& r);

// The three lattice maps tying a system to the product of its type-A
// pieces: s corrects coweights onto the primed side, t and t_dual embed
// primed (co)weights back, t with the square-length multipliers.
struct ReductionMaps {
  RootSystem primed;
  std::vector<int> prime_nodes;  // ambient node, 1-based, per primed index
  LatticeMap s;       // ambient coroot coords -> primed coroot coords
  LatticeMap t;       // primed root coords -> ambient root coords
  LatticeMap t_dual;  // primed coroot coords -> ambient coroot coords
};

ReductionMaps build_maps(const RootSystem& r, const SimpleRootPartition& p);

struct CheckResult {
  bool pass = true;
  std::string witness;
};

struct Lemma2Report {
  CheckResult inclusion;      // image of t∘phi'∘s − phi lies in the root lattice
  CheckResult diagram;        // rho ∘ t_dual-bar = t-bar ∘ rho' on the quotients
  CheckResult decomposition;  // rho factors through the primed center with multipliers d_i
  bool quotient_checks_vacuous = false;  // trivial center: (b), (c) carry no content

  bool pass() const { return inclusion.pass && diagram.pass && decomposition.pass; }
};

Lemma2Report verify_lemma2(const RootSystem& r);
// Same verification against externally supplied maps; lets a harness prove
// it can detect deliberately broken maps.
Lemma2Report verify_lemma2_with(const RootSystem& r, const SimpleRootPartition& p,
                                const ReductionMaps& maps);

// (t_dual ∘ s)(x) − x decomposes over span{f_beta^vee : beta in pi_r} plus
// the coroot lattice, for every fundamental coweight x.
struct ClaimReport {
  struct Decomposition {
    int generator;           // 1-based coweight index
    RatVector span_coeffs;   // one coefficient per pi_r node
    IntVector lattice_part;  // coroot-lattice summand
  };
  bool pass = true;
  std::string witness;
  std::vector<Decomposition> decomps;
};

ClaimReport claim_check(const RootSystem& r);

}  // namespace rootlat
