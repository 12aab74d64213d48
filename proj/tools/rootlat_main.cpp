// Command-line front end: describe and pairing render one type, verify runs
// the invariant suites over the catalogue, snf exposes the integer Smith
// decomposition for ad-hoc matrices.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rootlat/error.hpp"
#include "rootlat/normal_form.hpp"
#include "rootlat/report.hpp"

namespace {

bool use_color() {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout)) != 0;
}

int run_describe(const std::string& label_text, bool json, int ceiling, bool pairing_only) {
  rootlat::DescribeRecord rec =
      rootlat::describe(rootlat::TypeLabel::parse(label_text), ceiling);
  if (json) {
    std::cout << (pairing_only ? rootlat::pairing_json(rec) : rootlat::to_json(rec)).dump(2)
              << "\n";
  } else {
    std::cout << (pairing_only ? rootlat::pairing_text(rec) : rootlat::to_text(rec));
  }
  return 0;
}

int run_verify(const std::string& scope_text, int max_rank, bool json) {
  auto scope = rootlat::parse_scope(scope_text);
  if (!scope) {
    std::cerr << "error: unknown scope '" << scope_text << "'\n";
    return 2;
  }
  rootlat::VerifyReport rep = rootlat::run_verify(*scope, max_rank);
  if (json)
    std::cout << rootlat::to_json(rep).dump(2) << "\n";
  else
    std::cout << rootlat::to_text(rep, use_color());
  return rep.overall ? 0 : 1;
}

struct SnfParseError {
  int line;
  int col;
  std::string message;
};

rootlat::IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SnfParseError{0, 0, "cannot open file"};

  struct Token {
    std::string text;
    int line;
    int col;
  };
  std::vector<Token> tokens;
  std::string line_text;
  int line_no = 0;
  while (std::getline(in, line_text)) {
    ++line_no;
    std::size_t i = 0;
    while (i < line_text.size()) {
      if (std::isspace(static_cast<unsigned char>(line_text[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line_text.size() && !std::isspace(static_cast<unsigned char>(line_text[i]))) ++i;
      tokens.push_back({line_text.substr(start, i - start), line_no, static_cast<int>(start) + 1});
    }
  }

  auto parse_int = [](const Token& t) -> rootlat::Int {
    const std::string& s = t.text;
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw SnfParseError{t.line, t.col, "expected integer, got '" + s + "'"};
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw SnfParseError{t.line, t.col, "expected integer, got '" + s + "'"};
    return rootlat::Int(s);
  };

  if (tokens.size() < 2) throw SnfParseError{1, 1, "expected 'rows cols' on the first line"};
  rootlat::Int rows_big = parse_int(tokens[0]);
  rootlat::Int cols_big = parse_int(tokens[1]);
  if (rows_big < 1 || cols_big < 1 || rows_big > 1024 || cols_big > 1024)
    throw SnfParseError{tokens[0].line, tokens[0].col, "matrix shape out of range"};
  int rows = rows_big.convert_to<int>();
  int cols = cols_big.convert_to<int>();

  std::size_t want = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (tokens.size() - 2 != want) {
    const Token& at = tokens.size() > 2 ? tokens.back() : tokens[1];
    throw SnfParseError{at.line, at.col,
                        "expected " + std::to_string(want) + " entries, found " +
                            std::to_string(tokens.size() - 2)};
  }
  rootlat::IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = parse_int(tokens[static_cast<std::size_t>(2 + i * cols + j)]);
  return m;
}

int run_snf(const std::string& path) {
  try {
    rootlat::IntMatrix m = read_matrix_file(path);
    rootlat::SnfDecomposition dec = rootlat::snf(m);
    std::cout << "S =\n" << dec.s.str();
    std::cout << "U =\n" << dec.u.str();
    std::cout << "V =\n" << dec.v.str();
    return 0;
  } catch (const SnfParseError& e) {
    std::cerr << "error: " << path << ":" << e.line << ":" << e.col << ": " << e.message << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact root-system lattice toolkit"};
  app.require_subcommand(1);

  std::string label;
  std::string scope = "all";
  std::string file;
  bool json_describe = false, json_pairing = false, json_verify = false;
  int ceiling_describe = rootlat::kDefaultRankCeiling;
  int ceiling_pairing = rootlat::kDefaultRankCeiling;
  int max_rank = rootlat::kDefaultVerifyMaxRank;

  CLI::App* describe = app.add_subcommand("describe", "full record for one type");
  describe->add_option("LABEL", label, "type label, e.g. A5 or E7")->required();
  describe->add_flag("--json", json_describe, "emit JSON");
  describe->add_option("--rank-ceiling", ceiling_describe, "largest accepted rank")
      ->default_val(rootlat::kDefaultRankCeiling);

  CLI::App* pairing = app.add_subcommand("pairing", "induced center pairing for one type");
  pairing->add_option("LABEL", label, "type label, e.g. A5 or E7")->required();
  pairing->add_flag("--json", json_pairing, "emit JSON");
  pairing->add_option("--rank-ceiling", ceiling_pairing, "largest accepted rank")
      ->default_val(rootlat::kDefaultRankCeiling);

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--scope", scope, "all|phi|center|lemma2|table91")
      ->check(CLI::IsMember({"all", "phi", "center", "lemma2", "table91"}))
      ->default_val("all");
  verify->add_option("--max-rank", max_rank, "classical families up to this rank")
      ->check(CLI::Range(1, rootlat::kDefaultRankCeiling))
      ->default_val(rootlat::kDefaultVerifyMaxRank);
  verify->add_flag("--json", json_verify, "emit JSON");

  CLI::App* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
  snf->add_option("FILE", file, "whitespace-separated, first line 'rows cols'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (describe->parsed()) return run_describe(label, json_describe, ceiling_describe, false);
    if (pairing->parsed()) return run_describe(label, json_pairing, ceiling_pairing, true);
    if (verify->parsed()) return run_verify(scope, max_rank, json_verify);
    if (snf->parsed()) return run_snf(file);
  } catch (const rootlat::InvalidLabel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const rootlat::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
