#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "qpbraid/garside.hpp"
#include "qpbraid/word.hpp"

using namespace qpbraid;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "qpbraid");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("nf") {
  CHECK(run({"nf", "(s1 s2)^6"}).out == "D^4\n");
  CHECK(run({"nf", ""}).out == "1\n");
  CHECK(run({"nf", "s1", "s2", "s1", "s2"}).out == "D^1 · s2\n");
  const auto bad = run({"nf", "s1^0"});
  CHECK(bad.code == cli::kUsageError);
  CHECK(bad.err.find("zero exponent at byte 3") != std::string::npos);
}

TEST_CASE("reduce") {
  const auto r = run({"reduce", "(s1 s2)^6 s1^5 s2^-15"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.starts_with("D^-11 s1^7 (s2^2 s1^2)^7\ncase=3 p=-11 m=15 e=2\n"));
  CHECK(r.out.find("(verified)") != std::string::npos);
}

TEST_CASE("classify") {
  const auto r = run({"classify", "--twist", "d a^5 b^-15"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.starts_with("NotQP  p=-11 m=15 e=2  (p+m=4 !< 2e=4)"));
  CHECK(run({"classify", "--twist", "a b"}).out.starts_with("QP"));
  CHECK(run({"classify", "s1"}).out.starts_with("QP"));
  CHECK(run({"classify", "--twist", "a", "--braid", "s1"}).code == cli::kUsageError);
  CHECK(run({"classify"}).code == cli::kUsageError);
}

TEST_CASE("json output round-trips through the parser") {
  const auto r = run({"--json", "reduce", "(s1 s2)^6 s1^5 s2^-15"});
  REQUIRE(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["p"] == -11);
  CHECK(j["m"] == 15);
  CHECK(j["case"] == 3);
  const BraidWord word = parse_braid(j["word"].get<std::string>());
  const BraidWord conj = parse_braid(j["conjugator"].get<std::string>());
  CHECK(equals(word, conjugate(parse_braid("(s1 s2)^6 s1^5 s2^-15"), conj)));

  const auto q = run({"--json", "classify", "s2 s1 s2^-1 s1"});
  const auto v = nlohmann::json::parse(q.out);
  CHECK(v["outcome"] == "QP");
  BraidWord product;
  for (const auto& b : v["bands"]) {
    const BraidWord c = parse_braid(b["conjugator"].get<std::string>());
    product.append(conjugate(parse_braid(b["generator"].get<std::string>()), c));
  }
  CHECK(equals(product, parse_braid("s2 s1 s2^-1 s1")));

  const auto n = nlohmann::json::parse(run({"--json", "classify", "--twist", "d a^5 b^-15"}).out);
  CHECK(n["outcome"] == "NotQP");
  CHECK(n["twist_word"] == "d a^5 b^-15");
}

TEST_CASE("batch mode keeps input order") {
  std::string input;
  std::string expected;
  for (int k = 1; k <= 30; ++k) {
    input += "(s1 s2)^" + std::to_string(k) + "\n";
    if (k == 10) input += "\n";
    expected += render(garside_nf(parse_braid("(s1 s2)^" + std::to_string(k)))) + "\n";
  }
  const auto r = run({"nf", "-"}, input);
  CHECK(r.code == cli::kOk);
  CHECK(r.out == expected);
}

TEST_CASE("batch mode reports a bad line") {
  const auto r = run({"nf", "-"}, "s1\ns1^0\ns2\n");
  CHECK(r.code == cli::kUsageError);
}

TEST_CASE("family") {
  const auto r = run({"--k-range", "0..3", "family"});
  CHECK(r.code == cli::kOk);
  int notqp = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) notqp += line.find("NotQP") != std::string::npos;
  CHECK(notqp == 4);
  CHECK(run({"--k-range", "3..2", "family"}).out.empty());
  CHECK(run({"--k-range", "-1..2", "family"}).code == cli::kUsageError);
  CHECK(run({"--k-range", "zero", "family"}).code == cli::kUsageError);
}

TEST_CASE("transcript command") {
  const auto ok = run({"verify-paper"});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("beta_0 verdict: NotQP") != std::string::npos);
  const auto bad = run({"verify-paper", "--corrupt-step", "9"});
  CHECK(bad.code == cli::kVerifyFailed);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("psi and psi-inv") {
  CHECK(run({"psi", "D"}).out == "a b a\n");
  CHECK(run({"psi-inv", "d a^5 b^-15"}).out == "(s1 s2)^6 s1^5 s2^-15\n");
}

TEST_CASE("search-qp and resource diagnostics") {
  CHECK(run({"search-qp", "s1^-1"}).out.starts_with("NotQP"));
  const auto r = run({"--budget", "5", "--bound", "3", "search-qp", "D^4 s1^5 s2^-13"});
  CHECK(r.code == cli::kDiagnostic);
}

TEST_CASE("config file supplies defaults and flags win") {
  const auto path = std::filesystem::temp_directory_path() / "qpbraid_cli_test.ini";
  {
    std::ofstream f(path);
    f << "k-range=0..1\njson=false\n";
  }
  const auto r = run({"--config", path.string(), "family"});
  CHECK(r.code == cli::kOk);
  int rows = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) rows += line.find("NotQP") != std::string::npos;
  CHECK(rows == 2);
  const auto flagged = run({"--config", path.string(), "--k-range", "0..2", "family"});
  rows = 0;
  std::istringstream more(flagged.out);
  for (std::string line; std::getline(more, line);) rows += line.find("NotQP") != std::string::npos;
  CHECK(rows == 3);
  std::filesystem::remove(path);
}
