// End-to-end checks of the installed command surface: output schemas and
// the 0/1/2 exit-code contract, against the real binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef ROOTLAT_CLI_PATH
#error "ROOTLAT_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  std::string cmd = "NO_COLOR=1 " + std::string(ROOTLAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("describe: JSON schema and values") {
  RunResult r = run_cli("describe E6 --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["label"] == "E6");
  CHECK(j["delta"] == nlohmann::json::array({3}));
  CHECK(j["pairing"][0][0] == "1/3");
  CHECK(j["rho_class"] == "iso");
  CHECK(j["root_count"] == 72);

  RunResult g2 = run_cli("describe G2 --json");
  auto jg = nlohmann::json::parse(g2.output);
  CHECK(jg["delta"] == nlohmann::json::array());
  CHECK(jg["pairing"] == nlohmann::json::array());
  CHECK(jg["pi_prime"] == nlohmann::json::array());

  RunResult d6 = run_cli("describe D6 --json");
  auto jd = nlohmann::json::parse(d6.output);
  CHECK(jd["pairing"] == nlohmann::json::parse(R"([["1/2","0"],["0","1/2"]])"));
}

TEST_CASE("describe output is deterministic across runs") {
  RunResult a = run_cli("describe D4 --json");
  RunResult b = run_cli("describe D4 --json");
  CHECK(a.output == b.output);
}

TEST_CASE("pairing: restricted record") {
  RunResult a3 = run_cli("pairing A3 --json");
  REQUIRE(a3.exit_code == 0);
  auto j = nlohmann::json::parse(a3.output);
  CHECK(j["generators"] == nlohmann::json::array({"f1v"}));
  CHECK(j["pairing"][0][0] == "3/4");

  RunResult c7 = run_cli("pairing C7 --json");
  CHECK(nlohmann::json::parse(c7.output)["pairing"][0][0] == "1/2");

  // rank 9 is above the verify cap but fine for rendering one type
  RunResult b9 = run_cli("pairing B9");
  REQUIRE(b9.exit_code == 0);
  CHECK(b9.output.find("0") != std::string::npos);
}

TEST_CASE("verify: passing scopes exit zero") {
  CHECK(run_cli("verify --scope phi --max-rank 3").exit_code == 0);
  CHECK(run_cli("verify --scope table91 --max-rank 4").exit_code == 0);
  RunResult r = run_cli("verify --scope lemma2 --max-rank 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[PASS] lemma2.inclusion A1") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);

  RunResult j = run_cli("verify --scope center --max-rank 3 --json");
  auto parsed = nlohmann::json::parse(j.output);
  CHECK(parsed["pass"] == true);
  CHECK(parsed["scope"] == "center");
}

TEST_CASE("usage and input errors exit with code two") {
  CHECK(run_cli("describe E9").exit_code == 2);
  CHECK(run_cli("describe A99").exit_code == 2);  // above the rank ceiling
  CHECK(run_cli("describe").exit_code == 2);
  CHECK(run_cli("verify --scope everything").exit_code == 2);
  CHECK(run_cli("verify --max-rank 0").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("snf subcommand") {
  std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  std::string good = dir + "/rootlat_cli_snf_good.txt";
  std::string bad = dir + "/rootlat_cli_snf_bad.txt";
  std::string tiny = dir + "/rootlat_cli_snf_tiny.txt";
  {
    FILE* f = fopen(good.c_str(), "w");
    REQUIRE(f);
    fputs("2 2\n2 -1\n-1 2\n", f);
    fclose(f);
    f = fopen(bad.c_str(), "w");
    REQUIRE(f);
    fputs("2 2\n2 -1\n-1\n", f);
    fclose(f);
    f = fopen(tiny.c_str(), "w");
    REQUIRE(f);
    fputs("1 1\n0\n", f);
    fclose(f);
  }

  RunResult ok = run_cli("snf " + good);
  REQUIRE(ok.exit_code == 0);
  CHECK(ok.output.find("S =\n1 0\n0 3\n") != std::string::npos);
  CHECK(ok.output.find("U =") != std::string::npos);
  CHECK(ok.output.find("V =") != std::string::npos);

  RunResult zero = run_cli("snf " + tiny);
  REQUIRE(zero.exit_code == 0);
  CHECK(zero.output.find("S =\n0\n") != std::string::npos);

  RunResult short_file = run_cli("snf " + bad);
  CHECK(short_file.exit_code == 2);
  CHECK(short_file.output.find("expected 4 entries") != std::string::npos);

  RunResult missing = run_cli("snf " + dir + "/does_not_exist.txt");
  CHECK(missing.exit_code == 2);
}
