#include "rootlat/report.hpp"

#include <algorithm>

#include "rootlat/error.hpp"
#include "rootlat/normal_form.hpp"

namespace rootlat {

namespace {

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

nlohmann::ordered_json int_matrix_json(const IntMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_ll(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::ordered_json factors_json(const std::vector<Int>& fs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Int& f : fs) arr.push_back(to_ll(f));
  return arr;
}

}  // namespace

DescribeRecord describe(const TypeLabel& label, int rank_ceiling) {
  if (!label.admissible())
    throw InvalidLabel("inadmissible type label: '" + label.str() + "'");
  if (label.rank > rank_ceiling)
    throw InvalidLabel("rank " + std::to_string(label.rank) + " is above the ceiling " +
                       std::to_string(rank_ceiling));

  RootSystem r = build(label);
  DescribeRecord rec;
  rec.label = label.str();
  rec.rank = label.rank;
  rec.cartan = r.cartan;
  rec.root_count = r.root_count();

  FiniteAbelianGroup delta = weight_quotient(r);
  FiniteAbelianGroup delta_dual = coweight_quotient(r);
  rec.delta = delta.invariant_factors();
  rec.delta_dual = delta_dual.invariant_factors();
  rec.delta_gens = delta.gen_names();
  rec.delta_dual_gens = delta_dual.gen_names();

  rec.rho_matrix = rho(r).mat;
  rec.rho_class = rho_kernel_class(r).str();

  PairingTable pt = induced_pairing(r);
  for (const auto& row : pt.values) {
    std::vector<std::string> out_row;
    for (const QmodZ& v : row) out_row.push_back(v.str());
    rec.pairing.push_back(std::move(out_row));
  }

  SimpleRootPartition p = partition(r);
  rec.pi_r = p.pi_r;
  rec.pi_prime = p.pi_prime;
  for (const auto& c : p.components)
    rec.components.push_back({c.nodes, c.label.str(), c.d});

  if (auto alias = label.canonical_alias()) rec.alias = alias->str();
  return rec;
}

nlohmann::ordered_json to_json(const DescribeRecord& rec) {
  nlohmann::ordered_json j;
  j["label"] = rec.label;
  j["rank"] = rec.rank;
  j["cartan"] = int_matrix_json(rec.cartan);
  j["root_count"] = rec.root_count;
  j["delta"] = factors_json(rec.delta);
  j["delta_dual"] = factors_json(rec.delta_dual);
  j["rho"] = int_matrix_json(rec.rho_matrix);
  j["rho_class"] = rec.rho_class;
  j["pairing"] = rec.pairing;
  j["pi_r"] = rec.pi_r;
  j["pi_prime"] = rec.pi_prime;
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const auto& c : rec.components) {
    nlohmann::ordered_json cj;
    cj["nodes"] = c.nodes;
    cj["type"] = c.type;
    cj["d"] = to_ll(c.d);
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

nlohmann::ordered_json pairing_json(const DescribeRecord& rec) {
  nlohmann::ordered_json j;
  j["label"] = rec.label;
  j["generators"] = rec.delta_dual_gens;
  j["pairing"] = rec.pairing;
  return j;
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  if (v.empty()) return "(none)";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_strings(const std::vector<std::string>& v) {
  if (v.empty()) return "(none)";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += v[i];
  }
  return s;
}

std::string group_text(const std::vector<Int>& factors) {
  if (factors.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " + ";
    s += "Z/" + factors[i].str();
  }
  return s;
}

}  // namespace

std::string to_text(const DescribeRecord& rec) {
  std::string s;
  s += "type: " + rec.label + "\n";
  if (rec.alias) s += "canonical_alias: " + *rec.alias + "\n";
  s += "rank: " + std::to_string(rec.rank) + "\n";
  s += "cartan:\n" + rec.cartan.str();
  s += "root_count: " + std::to_string(rec.root_count) + "\n";
  s += "Delta: " + group_text(rec.delta) + "  generators: " + join_strings(rec.delta_gens) + "\n";
  s += "Delta_dual: " + group_text(rec.delta_dual) + "  generators: " +
       join_strings(rec.delta_dual_gens) + "\n";
  s += "rho (Delta_dual -> Delta):\n";
  s += rec.rho_matrix.empty() ? std::string("(empty)\n") : rec.rho_matrix.str();
  s += "rho_class: " + rec.rho_class + "\n";
  s += "pairing (Delta_dual x Delta_dual -> Q/Z):\n";
  if (rec.pairing.empty()) {
    s += "(empty)\n";
  } else {
    for (const auto& row : rec.pairing) {
      for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + row[j];
      s += "\n";
    }
  }
  s += "pi_r: " + join_ints(rec.pi_r) + "\n";
  s += "pi_prime: " + join_ints(rec.pi_prime) + "\n";
  s += "components:";
  if (rec.components.empty()) s += " (none)";
  for (const auto& c : rec.components) {
    s += " " + c.type + "{nodes=" + join_ints(c.nodes) + " d=" + c.d.str() + "}";
  }
  s += "\n";
  return s;
}

std::string pairing_text(const DescribeRecord& rec) {
  std::string s;
  s += "type: " + rec.label + "\n";
  s += "Delta_dual generators: " + join_strings(rec.delta_dual_gens) + "\n";
  s += "pairing (Q/Z):\n";
  if (rec.pairing.empty()) {
    s += "(empty)\n";
  } else {
    for (const auto& row : rec.pairing) {
      for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + row[j];
      s += "\n";
    }
  }
  return s;
}

std::optional<VerifyScope> parse_scope(const std::string& name) {
  if (name == "all") return VerifyScope::All;
  if (name == "phi") return VerifyScope::Phi;
  if (name == "center") return VerifyScope::Center;
  if (name == "lemma2") return VerifyScope::Lemma2;
  if (name == "table91") return VerifyScope::Table91;
  return std::nullopt;
}

std::string scope_name(VerifyScope scope) {
  switch (scope) {
    case VerifyScope::All: return "all";
    case VerifyScope::Phi: return "phi";
    case VerifyScope::Center: return "center";
    case VerifyScope::Lemma2: return "lemma2";
    case VerifyScope::Table91: return "table91";
  }
  return "?";
}

std::vector<TypeLabel> catalogue_labels(int max_rank) {
  std::vector<TypeLabel> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({'A', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'B', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'C', n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({'D', n});
  for (int n : {6, 7, 8}) out.push_back({'E', n});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

std::vector<std::vector<QmodZ>> expected_induced_pairing(const TypeLabel& l) {
  int n = l.rank;
  auto one_by_one = [](const Rat& v) {
    return std::vector<std::vector<QmodZ>>{{QmodZ(v)}};
  };
  switch (l.family) {
    case 'A': return one_by_one(Rat(n, n + 1));
    case 'B': return one_by_one(Rat(0));
    case 'C': return n % 2 == 0 ? one_by_one(Rat(0)) : one_by_one(Rat(1, 2));
    case 'D':
      if (n % 2 == 1) return one_by_one(Rat(n, 4));
      return {{QmodZ(Rat(n, 4)), QmodZ(Rat(n - 2, 4))},
              {QmodZ(Rat(n - 2, 4)), QmodZ(Rat(n, 4))}};
    case 'E':
      if (n == 6) return one_by_one(Rat(1, 3));
      if (n == 7) return one_by_one(Rat(1, 2));
      return {};
    default: return {};  // F4, G2
  }
}

std::vector<std::string> expected_pairing_generators(const TypeLabel& l) {
  switch (l.family) {
    case 'A': return {"f1v"};
    case 'B': return {"f1v"};
    case 'C': return {"f" + std::to_string(l.rank) + "v"};
    case 'D':
      if (l.rank % 2 == 1) return {"f" + std::to_string(l.rank) + "v"};
      return {"f" + std::to_string(l.rank - 1) + "v", "f" + std::to_string(l.rank) + "v"};
    case 'E':
      if (l.rank == 6) return {"f1v"};
      if (l.rank == 7) return {"f7v"};
      return {};
    default: return {};
  }
}

std::optional<std::string> compare_induced_pairing(const TypeLabel& label,
                                                   const PairingTable& table) {
  auto want = expected_induced_pairing(label);
  auto want_gens = expected_pairing_generators(label);
  if (table.left.gen_names() != want_gens) {
    std::string got = table.left.gen_names().empty() ? "(none)" : table.left.gen_names()[0];
    return "generator list mismatch, got " + got;
  }
  if (table.values.size() != want.size())
    return "table size " + std::to_string(table.values.size()) + ", expected " +
           std::to_string(want.size());
  for (std::size_t i = 0; i < want.size(); ++i)
    for (std::size_t j = 0; j < want.size(); ++j)
      if (!(table.values[i][j] == want[i][j]))
        return "entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ") is " +
               table.values[i][j].str() + ", expected " + want[i][j].str();
  return std::nullopt;
}

KernelClass::Kind expected_kernel_kind(const TypeLabel& l) {
  switch (l.family) {
    case 'A':
    case 'D': return KernelClass::Kind::Iso;
    case 'B': return KernelClass::Kind::Zero;
    case 'C': return l.rank % 2 == 0 ? KernelClass::Kind::Zero : KernelClass::Kind::Iso;
    case 'E':
      if (l.rank == 8) return KernelClass::Kind::TrivialCenter;
      return KernelClass::Kind::Iso;
    default: return KernelClass::Kind::TrivialCenter;  // F4, G2
  }
}

namespace {

void verify_phi(std::vector<VerifyCheck>& out, const std::vector<TypeLabel>& labels) {
  for (const TypeLabel& l : labels) {
    PhiReport rep = check_phi_properties(build(l));
    for (const auto& c : rep.checks)
      out.push_back({"phi." + c.id, l.str(), c.pass, c.witness});
  }
}

void verify_center(std::vector<VerifyCheck>& out, const std::vector<TypeLabel>& labels) {
  for (const TypeLabel& l : labels) {
    RootSystem r = build(l);
    FiniteAbelianGroup delta = weight_quotient(r);
    FiniteAbelianGroup delta_dual = coweight_quotient(r);
    Int want = det(r.cartan);
    if (want < 0) want = -want;
    bool order_ok = delta.order() == want && delta_dual.order() == want;
    out.push_back({"center.order_matches_det", l.str(), order_ok,
                   order_ok ? "" : "|Delta| = " + delta.order().str() + ", |det C| = " + want.str()});

    PerfectnessResult perf = check_perfect(duality_pairing(r));
    out.push_back({"center.duality_perfect", l.str(), perf.perfect, perf.witness});

    KernelClass got = rho_kernel_class(r);
    bool class_ok = got.kind == expected_kernel_kind(l);
    out.push_back({"center.kernel_class", l.str(), class_ok,
                   class_ok ? "" : "classified as " + got.str()});
  }
}

void verify_lemma2_scope(std::vector<VerifyCheck>& out, const std::vector<TypeLabel>& labels) {
  for (const TypeLabel& l : labels) {
    Lemma2Report rep = verify_lemma2(build(l));
    out.push_back({"lemma2.inclusion", l.str(), rep.inclusion.pass, rep.inclusion.witness});
    out.push_back({"lemma2.diagram", l.str(), rep.diagram.pass, rep.diagram.witness});
    out.push_back(
        {"lemma2.decomposition", l.str(), rep.decomposition.pass, rep.decomposition.witness});
    ClaimReport claim = claim_check(build(l));
    out.push_back({"lemma2.claim", l.str(), claim.pass, claim.witness});
  }
}

void verify_table91(std::vector<VerifyCheck>& out, const std::vector<TypeLabel>& labels) {
  for (const TypeLabel& l : labels) {
    auto mismatch = compare_induced_pairing(l, induced_pairing(build(l)));
    out.push_back({"table91.match", l.str(), !mismatch.has_value(), mismatch.value_or("")});
  }
}

}  // namespace

VerifyReport run_verify(VerifyScope scope, int max_rank) {
  VerifyReport rep;
  rep.scope = scope_name(scope);
  rep.max_rank = max_rank;
  std::vector<TypeLabel> labels = catalogue_labels(max_rank);

  if (scope == VerifyScope::All || scope == VerifyScope::Phi) verify_phi(rep.checks, labels);
  if (scope == VerifyScope::All || scope == VerifyScope::Center)
    verify_center(rep.checks, labels);
  if (scope == VerifyScope::All || scope == VerifyScope::Lemma2)
    verify_lemma2_scope(rep.checks, labels);
  if (scope == VerifyScope::All || scope == VerifyScope::Table91)
    verify_table91(rep.checks, labels);

  for (const auto& c : rep.checks)
    if (!c.pass) rep.overall = false;
  return rep;
}

nlohmann::ordered_json to_json(const VerifyReport& rep) {
  nlohmann::ordered_json j;
  j["scope"] = rep.scope;
  j["max_rank"] = rep.max_rank;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["label"] = c.label;
    cj["pass"] = c.pass;
    if (!c.witness.empty()) cj["witness"] = c.witness;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["pass"] = rep.overall;
  return j;
}

std::string to_text(const VerifyReport& rep, bool color) {
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::string s;
  for (const auto& c : rep.checks) {
    s += c.pass ? std::string(green) + "[PASS]" + reset : std::string(red) + "[FAIL]" + reset;
    s += " " + c.id + " " + c.label;
    if (!c.pass && !c.witness.empty()) s += " -- " + c.witness;
    s += "\n";
  }
  s += "verify " + rep.scope + " (max rank " + std::to_string(rep.max_rank) + "): ";
  s += rep.overall ? std::string(green) + "PASS" + reset : std::string(red) + "FAIL" + reset;
  s += " (" + std::to_string(rep.checks.size()) + " checks)\n";
  return s;
}

}  // namespace rootlat
