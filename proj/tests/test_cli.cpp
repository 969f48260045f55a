#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dk/cli.hpp"

using namespace dk;
using nlohmann::json;

namespace {

std::pair<int, json> run(const std::vector<std::string>& args) {
  std::ostringstream os;
  int code = cli::runCli(args, os);
  return {code, json::parse(os.str())};
}

std::string runRaw(const std::vector<std::string>& args) {
  std::ostringstream os;
  cli::runCli(args, os);
  return os.str();
}

std::string errorOf(const std::string& text) {
  try {
    parseExpr(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

std::string writeTemp(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST_CASE("expression parsing: round-trip and canonical scalars") {
  for (const std::string& text :
       {"(brk x[1,1] y[1,1])", "(smul 1/2 t[1,2])",
        "(bch x[1,1] (smul -1 x[1,1]))", "(+ x[1,1] (smul ?u y[1,1]))",
        "(mul (exp x[1,1]) (log (exp y[1,1])))", "-7", "?lambda", "x[1,1]"}) {
    ExprPtr e = parseExpr(text);
    CHECK(printExpr(*e) == text);
    CHECK(printExpr(*parseExpr(printExpr(*e))) == text);
  }
  // int/int scalars canonicalize on input.
  CHECK(printExpr(*parseExpr("(smul 2/4 x[1,1])")) == "(smul 1/2 x[1,1])");
  CHECK(printExpr(*parseExpr("(smul -2/4 x[1,1])")) == "(smul -1/2 x[1,1])");
  CHECK(printExpr(*parseExpr("(smul 6/3 x[1,1])")) == "(smul 2 x[1,1])");
  CHECK(printExpr(*parseExpr("+5")) == "5");
  // Node kinds of the documented shapes.
  CHECK(parseExpr("(brk x[1,1] y[1,1])")->kind == Expr::Kind::Brk);
  CHECK(parseExpr("(smul 1/2 t[1,2])")->kind == Expr::Kind::Smul);
  CHECK(parseExpr("(smul 1/2 t[1,2])")->value == Scalar(ratFromLong(1, 2)));
  CHECK(parseExpr("?u")->value == Scalar::var("u"));
}

TEST_CASE("expression parsing: positioned errors") {
  CHECK(errorOf("(brk x[1,1] y[1,1]").find("unterminated") !=
        std::string::npos);
  CHECK(errorOf("(brk x[1,1] y[1,1]").find("1:1") != std::string::npos);
  CHECK(errorOf("(foo 1)").find("unknown operator 'foo'") !=
        std::string::npos);
  CHECK(errorOf("(foo 1)").find("1:2") != std::string::npos);
  CHECK(errorOf("\n  )").find("2:3") != std::string::npos);
  CHECK(errorOf("x y").find("trailing input 'y'") != std::string::npos);
  CHECK(errorOf("x y").find("1:3") != std::string::npos);
  CHECK(errorOf("(brk x)").find("got 1 argument") != std::string::npos);
  CHECK(errorOf("(smul x[1,1] y[1,1])").find("bad scalar 'x[1,1]'") !=
        std::string::npos);
  CHECK_THROWS(parseExpr("(smul 1/0 x[1,1])"));
  CHECK_THROWS(parseExpr(""));
}

TEST_CASE("expression evaluation") {
  StrandSet s{{"1", "2"}, 1, true};
  AlphabetPtr a = strandAlphabet(s);
  const int D = 4;
  // Inverse pair under bch evaluates to zero.
  CHECK(evalTensor(*parseExpr("(bch x[1,1] (smul -1 x[1,1]))"), a, D).isZero());
  // log(exp) round-trips.
  CHECK(evalTensor(*parseExpr("(log (exp y[2,1]))"), a, D) ==
        Tensor<Scalar>::gen(a, D, a->require("y[2,1]")));
  // brk is the commutator.
  Lie<Scalar> b = evalLie(*parseExpr("(brk x[1,1] y[1,1])"), a, D);
  Lie<Scalar> m = bracket(Lie<Scalar>::gen(a, D, a->require("x[1,1]")),
                          Lie<Scalar>::gen(a, D, a->require("y[1,1]")));
  CHECK(b == m);
  // Products are generally not Lie elements.
  CHECK_THROWS(evalLie(*parseExpr("(mul x[1,1] y[1,1])"), a, D));
  // Unknown generator names are rejected.
  CHECK_THROWS(evalTensor(*parseExpr("x[9,9]"), a, D));
  // Polynomial scalars flow through.
  Lie<Scalar> p = evalLie(*parseExpr("(smul ?u t[1,2])"), a, D);
  CHECK(p.terms().begin()->second == Scalar::var("u"));
}

TEST_CASE("dims, nf, bch and insert verbs") {
  auto [c1, j1] = run({"dims", "--genus", "0", "--strands", "2", "--framed",
                       "--max-degree", "4"});
  CHECK(c1 == 0);
  CHECK(j1["ok"] == true);
  CHECK(j1["verb"] == "dims");
  StrandSet s{{"1", "2"}, 0, true};
  GradedBasis b(makeTf(s), 4);
  CHECK(j1["result"]["dims"].get<std::vector<int>>() == b.dims());

  auto [c2, j2] = run({"nf", "--genus", "1", "--strands", "1", "--max-degree",
                       "3", "(bch x[1,1] (smul -1 x[1,1]))"});
  CHECK(c2 == 0);
  CHECK(j2["result"]["zero"] == true);

  auto [c3, j3] = run({"bch", "--genus", "1", "--strands", "1", "--max-degree",
                       "3", "x[1,1]", "y[1,1]"});
  CHECK(c3 == 0);
  bool sawHalf = false;
  for (const auto& t : j3["result"]["value"]["terms"])
    if (t["word"] == "x[1,1].y[1,1]" && t["coeff"] == "1/2") sawHalf = true;
  CHECK(sawHalf);

  auto [c4, j4] = run({"insert", "--genus", "0", "--strands", "2", "--at", "2",
                       "--labels", "2,3", "--max-degree", "4", "t[1,2]"});
  CHECK(c4 == 0);
  CHECK(j4["result"]["strands"].get<std::vector<std::string>>() ==
        std::vector<std::string>{"1", "2", "3"});
  // t_{12} |-> t_{12} + t_{13} under doubling of strand 2.
  CHECK(j4["result"]["value"]["terms"].size() == 2);
}

TEST_CASE("verification verbs and exit codes") {
  auto [c1, j1] = run({"verify-action", "--genus", "1", "--punctures", "0",
                       "--max-degree", "3"});
  CHECK(c1 == 0);
  CHECK(j1["ok"] == true);
  CHECK(j1["failures"].empty());

  auto [c2, j2] = run({"verify-action", "--genus", "1", "--punctures", "0",
                       "--max-degree", "3", "--mutate"});
  CHECK(c2 == 1);
  CHECK(j2["ok"] == false);
  CHECK(!j2["failures"].empty());

  auto [c3, j3] = run({"verify-split", "--genus", "0", "--punctures", "1",
                       "--max-degree", "4"});
  CHECK(c3 == 0);
  CHECK(j3["result"]["dims_direct"] == j3["result"]["dims_tower"]);
}

TEST_CASE("trace-operation verbs") {
  auto [c1, j1] = run({"fox-eval", "--genus", "1", "--punctures", "0",
                       "--max-degree", "2", "x[1]", "y[1]"});
  CHECK(c1 == 0);
  REQUIRE(j1["result"]["diamond"].size() == 1);
  CHECK(j1["result"]["diamond"][0]["word"] == "1");
  CHECK(j1["result"]["diamond"][0]["coeff"] == "1");

  auto [c2, j2] = run({"goldman", "--genus", "1", "--punctures", "0",
                       "--max-degree", "3", "(exp x[1])", "(exp y[1])"});
  CHECK(c2 == 0);
  CHECK(!j2["result"]["bracket"].empty());
  // Non-group-like input is an error, not a silent wrong answer.
  auto [c2b, j2b] = run({"goldman", "--genus", "1", "--punctures", "0",
                         "--max-degree", "3", "x[1]", "(exp y[1])"});
  CHECK(c2b == 2);
  CHECK(j2b["error"]["kind"] == "error");

  auto [c3, j3] = run({"turaev", "--genus", "1", "--punctures", "0",
                       "--max-degree", "3", "(exp c[])"});
  CHECK(c3 == 0);
  CHECK(!j3["result"]["cobracket"].empty());
}

TEST_CASE("series verb") {
  auto [c, j] = run({"series", "--name", "s", "--max-degree", "4"});
  CHECK(c == 0);
  CHECK(j["result"]["coefficients"].get<std::vector<std::string>>() ==
        std::vector<std::string>{"-1/2", "-1/12", "0", "1/720", "0"});
  auto [c2, j2] = run({"series", "--name", "r", "--max-degree", "4"});
  CHECK(j2["result"]["coefficients"].get<std::vector<std::string>>() ==
        std::vector<std::string>{"0", "1/2", "1/24", "0", "-1/2880"});
}

TEST_CASE("framing-eqs verb") {
  auto [c, j] = run({"framing-eqs", "--genus", "1"});
  CHECK(c == 0);
  CHECK(j["result"]["genus1_solution"]["nu"] == "1/2");
  CHECK(j["result"]["genus1_solution"]["s"] == "0");
  CHECK(j["result"]["genus1_solution"]["framing"] == "0");
  CHECK(j["result"]["uses_weight3_coefficients"] == false);
  CHECK(j["result"]["equations"]["x"].size() == 1);

  auto [c2, j2] = run({"framing-eqs", "--genus", "2"});
  CHECK(c2 == 0);
  CHECK(j2["result"]["equations"]["x"].size() == 2);
  CHECK(!j2["result"].contains("genus1_solution"));

  auto [c3, j3] = run({"framing-eqs", "--genus", "1", "--swap"});
  CHECK(c3 == 0);
  CHECK(j3["result"]["genus1_solution"]["nu"] == "-1/2");
}

TEST_CASE("kv-check verb") {
  std::string moving = writeTemp(
      "cli_kv_moving.json",
      R"json({"g":0,"n":2,"D":4,"u":{},"conjugators":["(smul 1/2 z[2])","0"]})json");
  auto [c1, j1] = run({"kv-check", "--input", moving, "--framing", "c=1,-3",
                       "--equation", "solkv"});
  CHECK(c1 == 0);
  CHECK(j1["ok"] == true);
  REQUIRE(j1["result"]["reports"].size() == 1);
  CHECK(j1["result"]["reports"][0]["equation"] == "SolKV");
  CHECK(j1["result"]["reports"][0]["fixed_point_ok"] == true);
  CHECK(j1["result"]["reports"][0]["membership_ok"] == true);

  std::string identity = writeTemp(
      "cli_kv_identity.json",
      R"({"g":0,"n":2,"D":4,"u":{},"conjugators":["0","0"]})");
  auto [c2, j2] = run({"kv-check", "--input", identity, "--framing", "c=1,-3",
                       "--equation", "kv"});
  CHECK(c2 == 0);
  CHECK(j2["ok"] == true);
  auto [c3, j3] = run({"kv-check", "--input", identity, "--framing", "c=1,-3",
                       "--equation", "solkv"});
  CHECK(c3 == 1);
  CHECK(j3["ok"] == false);
  CHECK(!j3["failures"].empty());

  // All three reports by default.
  auto [c4, j4] = run({"kv-check", "--input", identity});
  CHECK(j4["result"]["reports"].size() == 3);

  std::remove(moving.c_str());
  std::remove(identity.c_str());
}

TEST_CASE("determinism, timing and error reports") {
  std::vector<std::string> cmd{"dims", "--genus", "1", "--strands", "1",
                               "--max-degree", "3"};
  CHECK(runRaw(cmd) == runRaw(cmd));
  CHECK(runRaw(cmd).find("timing_ms") == std::string::npos);
  std::vector<std::string> timed = cmd;
  timed.push_back("--timing");
  CHECK(runRaw(timed).find("timing_ms") != std::string::npos);
  // --seed is accepted.
  auto [cs, js] = run({"--seed", "7", "series", "--name", "r",
                       "--max-degree", "2"});
  CHECK(cs == 0);

  auto [c1, j1] = run({"no-such-verb"});
  CHECK(c1 == 2);
  CHECK(j1["ok"] == false);
  CHECK(j1["error"]["kind"] == "usage");

  auto [c2, j2] = run({"nf", "--genus", "1", "--strands", "1", "--max-degree",
                       "3", "(mul x[1,1] y[1,1])"});
  CHECK(c2 == 2);
  CHECK(j2["error"]["kind"] == "error");
  CHECK(std::string(j2["error"]["message"]).find("not a Lie element") !=
        std::string::npos);

  auto [c3, j3] = run({"dims", "--genus", "0", "--strands", "1",
                       "--max-degree", "99"});
  CHECK(c3 == 2);
  CHECK(std::string(j3["error"]["message"]).find("safety limit") !=
        std::string::npos);
}
