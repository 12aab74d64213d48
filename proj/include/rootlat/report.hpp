#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootlat/center.hpp"
#include "rootlat/reduction.hpp"
#include "rootlat/root_system.hpp"

namespace rootlat {

inline constexpr int kDefaultRankCeiling = 64;
inline constexpr int kDefaultVerifyMaxRank = 8;

// Everything the describe command reports for one type.
struct DescribeRecord {
  std::string label;
  int rank = 0;
  IntMatrix cartan;
  std::size_t root_count = 0;
  std::vector<Int> delta;       // invariant factors of Delta
  std::vector<Int> delta_dual;  // invariant factors of Delta_dual
  std::vector<std::string> delta_gens;
  std::vector<std::string> delta_dual_gens;
  IntMatrix rho_matrix;  // target generator coordinates x source generators
  std::string rho_class;
  std::vector<std::vector<std::string>> pairing;  // reduced fractions, "0" for zero
  std::vector<int> pi_r;
  std::vector<int> pi_prime;
  struct Comp {
    std::vector<int> nodes;
    std::string type;
    Int d = 1;
  };
  std::vector<Comp> components;
  std::optional<std::string> alias;  // canonical label for C2 / D3
};

DescribeRecord describe(const TypeLabel& label, int rank_ceiling = kDefaultRankCeiling);

nlohmann::ordered_json to_json(const DescribeRecord& rec);
nlohmann::ordered_json pairing_json(const DescribeRecord& rec);
std::string to_text(const DescribeRecord& rec);
std::string pairing_text(const DescribeRecord& rec);

enum class VerifyScope { All, Phi, Center, Lemma2, Table91 };

std::optional<VerifyScope> parse_scope(const std::string& name);
std::string scope_name(VerifyScope scope);

struct VerifyCheck {
  std::string id;
  std::string label;
  bool pass = true;
  std::string witness;
};

struct VerifyReport {
  std::string scope;
  int max_rank = kDefaultVerifyMaxRank;
  std::vector<VerifyCheck> checks;
  bool overall = true;
};

VerifyReport run_verify(VerifyScope scope, int max_rank = kDefaultVerifyMaxRank);

nlohmann::ordered_json to_json(const VerifyReport& rep);
std::string to_text(const VerifyReport& rep, bool color);

// All admissible labels with the classical families capped at max_rank; the
// exceptional types are always present.
std::vector<TypeLabel> catalogue_labels(int max_rank);

// Closed-form induced pairing per family, frozen from the tabulated values.
std::vector<std::vector<QmodZ>> expected_induced_pairing(const TypeLabel& label);
std::vector<std::string> expected_pairing_generators(const TypeLabel& label);

// nullopt when the computed table matches the closed form; otherwise a
// description of the first mismatch. Split out so harnesses can feed it a
// deliberately broken table.
std::optional<std::string> compare_induced_pairing(const TypeLabel& label,
                                                   const PairingTable& table);

// Expected kernel classification per family.
KernelClass::Kind expected_kernel_kind(const TypeLabel& label);

}  // namespace rootlat
