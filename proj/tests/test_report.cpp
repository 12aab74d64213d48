#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootlat/report.hpp"

using namespace rootlat;

TEST_CASE("describe: catalogued records") {
  DescribeRecord e6 = describe(TypeLabel{'E', 6});
  CHECK(e6.delta == std::vector<Int>{3});
  CHECK(e6.delta_dual == std::vector<Int>{3});
  CHECK(e6.pairing == std::vector<std::vector<std::string>>{{"1/3"}});
  CHECK(e6.rho_class == "iso");
  CHECK(e6.root_count == 72);

  DescribeRecord g2 = describe(TypeLabel{'G', 2});
  CHECK(g2.delta.empty());
  CHECK(g2.pairing.empty());
  CHECK(g2.rho_class == "trivial-center");
  CHECK(g2.pi_prime.empty());

  DescribeRecord d6 = describe(TypeLabel{'D', 6});
  CHECK(d6.pairing ==
        std::vector<std::vector<std::string>>{{"1/2", "0"}, {"0", "1/2"}});
  CHECK(d6.delta_dual_gens == std::vector<std::string>{"f5v", "f6v"});

  DescribeRecord c2 = describe(TypeLabel{'C', 2});
  REQUIRE(c2.alias.has_value());
  CHECK(*c2.alias == "B2");

  DescribeRecord b3 = describe(TypeLabel{'B', 3});
  CHECK(b3.pi_r == std::vector<int>{1, 2});
  CHECK(b3.pi_prime == std::vector<int>{3});
  REQUIRE(b3.components.size() == 1);
  CHECK(b3.components[0].d == 2);
  CHECK(b3.rho_matrix == IntMatrix{{0}});
}

TEST_CASE("describe: rank ceiling and inadmissible labels") {
  CHECK_THROWS_AS(describe(TypeLabel{'B', 9}, 8), InvalidLabel);
  CHECK_NOTHROW(describe(TypeLabel{'B', 9}, 64));
  CHECK_THROWS_AS(describe(TypeLabel{'E', 9}), InvalidLabel);
}

TEST_CASE("json emission: fixed keys, determinism, byte-identical round trip") {
  DescribeRecord rec = describe(TypeLabel{'D', 4});
  nlohmann::ordered_json j = to_json(rec);

  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"label", "rank", "cartan", "root_count", "delta",
                                         "delta_dual", "rho", "rho_class", "pairing", "pi_r",
                                         "pi_prime", "components"});

  std::string once = j.dump(2);
  std::string reparsed = nlohmann::ordered_json::parse(once).dump(2);
  CHECK(once == reparsed);
  CHECK(once == to_json(describe(TypeLabel{'D', 4})).dump(2));

  VerifyReport rep = run_verify(VerifyScope::Table91, 4);
  std::string vonce = to_json(rep).dump(2);
  CHECK(vonce == nlohmann::ordered_json::parse(vonce).dump(2));
}

TEST_CASE("catalogue: label census per max rank") {
  CHECK(catalogue_labels(8).size() == 33);
  CHECK(catalogue_labels(4).size() == 17);
  CHECK(catalogue_labels(1).size() == 6);  // A1 plus the five exceptional types
}

TEST_CASE("verify scopes: check counts and overall verdicts") {
  VerifyReport t91 = run_verify(VerifyScope::Table91, 8);
  CHECK(t91.overall);
  CHECK(t91.checks.size() == 33);

  VerifyReport phi4 = run_verify(VerifyScope::Phi, 4);
  CHECK(phi4.overall);
  CHECK(phi4.checks.size() == 17 * 4);

  VerifyReport all4 = run_verify(VerifyScope::All, 4);
  CHECK(all4.overall);
  CHECK(all4.checks.size() == 17 * (4 + 3 + 4 + 1));

  for (const auto& c : all4.checks) CHECK(c.witness.empty());
}

TEST_CASE("expected tables: spot values") {
  TypeLabel a3{'A', 3};
  auto t = expected_induced_pairing(a3);
  REQUIRE(t.size() == 1);
  CHECK(t[0][0] == QmodZ(Rat(3, 4)));
  CHECK(expected_pairing_generators(a3) == std::vector<std::string>{"f1v"});

  auto d8 = expected_induced_pairing(TypeLabel{'D', 8});
  CHECK(d8[0][0] == QmodZ());          // 8/4 = 0 mod Z: hyperbolic
  CHECK(d8[0][1] == QmodZ(Rat(1, 2)));

  CHECK(expected_induced_pairing(TypeLabel{'F', 4}).empty());
  CHECK(expected_kernel_kind(TypeLabel{'C', 7}) == KernelClass::Kind::Iso);
  CHECK(expected_kernel_kind(TypeLabel{'C', 6}) == KernelClass::Kind::Zero);
}

TEST_CASE("the table check detects a zeroed rho") {
  RootSystem a2 = build("A2");
  GroupHom dead = GroupHom::zero_map(coweight_quotient(a2), weight_quotient(a2));
  PairingTable broken = induced_pairing_from(a2, dead);
  auto mismatch = compare_induced_pairing(TypeLabel{'A', 2}, broken);
  REQUIRE(mismatch.has_value());
  CHECK(mismatch->find("expected 2/3") != std::string::npos);

  // and the genuine table passes
  CHECK_FALSE(compare_induced_pairing(TypeLabel{'A', 2}, induced_pairing(a2)).has_value());
}

TEST_CASE("scope parsing") {
  CHECK(parse_scope("all") == VerifyScope::All);
  CHECK(parse_scope("lemma2") == VerifyScope::Lemma2);
  CHECK(parse_scope("table91") == VerifyScope::Table91);
  CHECK_FALSE(parse_scope("everything").has_value());
  CHECK(scope_name(VerifyScope::Center) == "center");
}

TEST_CASE("text rendering is plain ASCII and grep-friendly") {
  DescribeRecord rec = describe(TypeLabel{'C', 3});
  std::string text = to_text(rec);
  CHECK(text.find("Delta_dual") != std::string::npos);
  CHECK(text.find("rho_class: iso") != std::string::npos);
  CHECK(text.find("f3v") != std::string::npos);

  VerifyReport rep = run_verify(VerifyScope::Phi, 2);
  std::string plain = to_text(rep, false);
  CHECK(plain.find("\033") == std::string::npos);
  CHECK(plain.find("[PASS]") != std::string::npos);
  std::string colored = to_text(rep, true);
  CHECK(colored.find("\033[32m") != std::string::npos);
}
