#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ktypes/cli/cli.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = ktypes::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json run_json(std::vector<std::string> args, int expected_code) {
  args.insert(args.begin(), "--json");
  const Result r = run(args);
  REQUIRE(r.code == expected_code);
  return Json::parse(r.out);
}

const std::string kFixtures = std::string(KTYPES_SOURCE_DIR) + "/fixtures/";

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"audit", "DT", "--bound", "2"}).code == 0);
  CHECK(run({"audit", "LO_total", "--bound", "2"}).code == 1);
  CHECK(run({"audit", "DT", "--no-such-flag"}).code == 2);
  CHECK(run({"audit", "DT", "--bound", "x"}).code == 2);
  CHECK(run({"audit", "NOPE"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"classify", "DT", "--params", "A1", "--type", "r(x,"}).code == 2);
  CHECK(run({"classify", "DT", "--params", "A1", "--type", "r(x,q)"}).code == 2);
  CHECK(run({"decompose", "sideways", "DT"}).code == 2);
  CHECK(run({"poly", "factor", "x +"}).code == 2);
  const Result unknown = run({"primes", "NOPE"});
  CHECK(unknown.err.find("InvalidArgument") != std::string::npos);
  CHECK(unknown.err.find("DT") != std::string::npos);
}

TEST_CASE("theory and structure files are accepted by path") {
  const Result r = run({"primes", kFixtures + "DT.thy", "--params", kFixtures + "A1.str"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4 prime types") != std::string::npos);
}

TEST_CASE("audit output") {
  const Result text = run({"audit", "DT", "--bound", "2"});
  CHECK(text.out.find("D0 PASS, D1 PASS, D2 PASS (slack 2), D3 PASS") != std::string::npos);
  const Json j = run_json({"audit", "DT", "--bound", "2"}, 0);
  for (const char* k : {"theory", "bound", "tuple_vars", "contexts", "d0", "d1", "d2", "d3", "principal", "verdict"})
    CHECK(j.contains(k));
  CHECK(j["verdict"] == "PASS");
  CHECK(j["d2"]["slack"] == 2);
  const Json lo = run_json({"audit", "LO_total", "--bound", "2"}, 1);
  CHECK(lo["d0"]["verdict"] == "FAIL");
  REQUIRE_FALSE(lo["d0"]["witnesses"].empty());
  CHECK(lo["d0"]["witnesses"][0]["formula"] == "r(x,a) | r(a,x) | x = a");
  const Result lo_text = run({"audit", "LO_total", "--bound", "2"});
  CHECK(lo_text.out.find("r(x,a) | r(a,x) | x = a") != std::string::npos);
}

TEST_CASE("primes and classify") {
  const Json j = run_json({"primes", "DT", "--params", "A1", "--vars", "1"}, 0);
  REQUIRE(j["diagrams"].size() == 4);
  CHECK(j["diagrams"][1]["atoms"] == Json::array({"r(x,a)"}));
  CHECK(j["diagrams"][1]["isolating_formula"] == "r(x,a)");
  CHECK(run_json({"primes", "DT", "--vars", "2"}, 0)["diagrams"].size() == 4);
  CHECK(run_json({"primes", "DT"}, 0)["diagrams"].size() == 1);
  const Json c = run_json({"classify", "DT", "--params", "A1", "--type", "r(x,a) | r(a,x)"}, 0);
  CHECK(c.dump().find("\"prime\":false") != std::string::npos);
}

TEST_CASE("decompose") {
  const Json p = run_json({"decompose", "prime", "DT", "--params", "A1", "--type", "r(x,a) | x = a"}, 0);
  CHECK(p.dump().find("r(x,a)") != std::string::npos);
  const Json f = run_json({"decompose", "maximal", "free", "--params", "A1", "--type", "r(x,a)"}, 1);
  CHECK(f["verdict"] == "FAIL");
  CHECK(f["chain"].size() == 2);
  CHECK(run({"decompose", "lksihn", "DT", "--vars", "2", "--type", "r(z1,z2)", "--indep", "z1"}).code == 0);
  CHECK(run({"decompose", "lksihn", "DT", "--vars", "2", "--type", "r(z1,z2)", "--indep", ""}).code == 2);
}

TEST_CASE("dim report schema") {
  const Json j = run_json({"dim", "DT", "--vars", "2"}, 0);
  for (const char* k : {"context", "type", "kdim", "odim", "kchain", "oset", "checks"}) CHECK(j.contains(k));
  CHECK(j["kdim"] == 1);
  CHECK(j["odim"] == 2);
  CHECK(j["oset"] == Json::array({"z1", "z2"}));
  for (const auto& c : j["checks"]) CHECK(c["failures"] == 0);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "DT", "--params", "A1"}).code == 0);
  const Json f = run_json({"verify", "free", "--params", "A1"}, 1);
  bool some_failure = false;
  for (const auto& c : f["checks"])
    if (c["failures"] != 0) {
      some_failure = true;
      CHECK_FALSE(c["details"].empty());
    }
  CHECK(some_failure);
}

TEST_CASE("amalgamate") {
  const Json ok = run_json({"amalgamate", "DT", "-A", "A1", "-M", "M1", "-N", "N1"}, 0);
  CHECK(ok["model"]["universe"].size() == 3);
  const Result text = run({"amalgamate", "DT", "-A", "A1", "-M", "M1", "-N", "N1"});
  CHECK(text.out.find("amalgam: {a, b, c; r(a,b), r(c,a), r(c,b)}") != std::string::npos);
  const Json no = run_json({"amalgamate", "LO_inj", "-A", "A_inj", "-M", "M_inj", "-N", "N_inj", "--slack", "1"}, 1);
  CHECK(no["verdict"] == "FAIL");
  REQUIRE(no["witness"]["attempts"].size() == 4);
  CHECK(no["witness"]["attempts"][2]["outcome"] == "clash at u(b)");
  CHECK(run({"amalgamate", "DT", "-A", "M1", "-M", "A1", "-N", "N1"}).code == 2);
}

TEST_CASE("entails, probe and project") {
  const Result e = run({"entails", "DT", "--params", "A1", "--conclusion", "!r(x,x)"});
  CHECK(e.code == 0);
  CHECK(e.out.find("true |- !r(x,x)") != std::string::npos);
  const Json p = run_json({"probe", "DT", "--params", "A1", "--formula", "r(x,a)", "--max-size", "5"}, 0);
  CHECK(p.dump().find("max_solutions") != std::string::npos);
  CHECK(run({"project", "DT", "--vars", "2", "--type", "r(z1,z2)", "--keep", "z1"}).code == 0);
}

TEST_CASE("poly subcommand") {
  CHECK(run({"poly", "extgcd", "x^2 + 1", "x"}).out == "d=1 u=1 v=-x\n");
  CHECK(run({"poly", "gcd", "[x^2 - 1, x^2 - 2*x + 1]"}).out == "x - 1\n");
  CHECK(run({"poly", "factor", "x^4 - 1"}).out == "(x - 1)(x + 1)(x^2 + 1)\n");
  CHECK(run({"poly", "primetype", "x^2 - 1", "x^3 - 1"}).out == "maximal (gcd x - 1), minpoly x - 1\n");
  CHECK(run({"poly", "dim", "[x*y]"}).out == "1\n");
  CHECK(run({"poly", "dim", "[x, y]"}).out == "0\n");
  CHECK(run({"poly", "dim", "[]", "--nvars", "2"}).out == "2\n");
  CHECK(run({"poly", "frobnicate", "x"}).code == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> cmds = {
      {"--json", "audit", "DT", "--bound", "2"},
      {"--json", "verify", "DT", "--vars", "2"},
      {"primes", "DT", "--params", "A1", "--vars", "2"},
      {"--json", "amalgamate", "DT", "-A", "A1", "-M", "M1", "-N", "N1"},
      {"poly", "groebner", "[x^2 - y, y^2 - x]"},
  };
  for (const auto& c : cmds) {
    const Result a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("every FAIL exit carries a witness") {
  const std::vector<std::vector<std::string>> failing = {
      {"audit", "LO_total", "--bound", "1"},
      {"audit", "free", "--bound", "1"},
      {"verify", "free", "--params", "A1"},
      {"decompose", "maximal", "free", "--params", "A1", "--type", "r(x,a)"},
      {"amalgamate", "LO_inj", "-A", "A_inj", "-M", "M_inj", "-N", "N_inj"},
  };
  for (const auto& c : failing) {
    CAPTURE(c[0]);
    const Json j = run_json(c, 1);
    const std::string s = j.dump();
    const bool has = s.find("\"witnesses\":[{") != std::string::npos || s.find("\"witness\":{") != std::string::npos ||
                     s.find("\"chain\":[[") != std::string::npos || s.find("\"details\":[\"") != std::string::npos ||
                     s.find("\"witness_params\":{") != std::string::npos;
    CHECK(has);
  }
}
