#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "hafs/cli.hpp"
#include "hafs/json_io.hpp"
#include "support.hpp"

using namespace hafs;
using njson = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check echoes the canonical form") {
  auto r = call({"check", "--text", "supp(t1,a,a). arg(a)."});
  CHECK(r.code == 0);
  CHECK(r.out == "arg(a).\nsupp(t1,a,a).\n");
  auto s = call({"check", "-"}, "arg(b). arg(a).");
  CHECK(s.code == 0);
  CHECK(s.out == "arg(a).\narg(b).\n");
}

TEST_CASE("labellings of the self-supporting argument") {
  auto r = call({"labellings", "--text", testing::kSelfSupport, "--semantics", "complete"});
  REQUIRE(r.code == 0);
  auto j = njson::parse(r.out);
  REQUIRE(j["labellings"].size() == 3);
  CHECK(j["labellings"][0] == njson{{"arg:a", "0"}, {"supp:t1", "1"}});
  CHECK(j["labellings"][1] == njson{{"arg:a", "1/2"}, {"supp:t1", "1"}});
  CHECK(j["labellings"][2] == njson{{"arg:a", "1"}, {"supp:t1", "1"}});
  auto g = njson::parse(call({"labellings", "--text", testing::kSelfSupport, "--semantics", "grounded"}).out);
  CHECK(g.contains("diagnostic"));
}

TEST_CASE("extensions") {
  auto r = call({"extensions", "--text", testing::kMutual, "--semantics", "preferred"});
  REQUIRE(r.code == 0);
  auto j = njson::parse(r.out);
  CHECK(j["extensions"] == njson::parse(R"([["arg:a","att:r1","att:r2"],["arg:b","att:r1","att:r2"]])"));
}

TEST_CASE("encode") {
  auto r = call({"encode", "--text", "arg(a).", "--logic", "l3", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "(a <-> T)\n");
  auto j = call({"encode", "--text", testing::kOneAttack, "--format", "json"});
  REQUIRE(j.code == 0);
  auto parsed = njson::parse(j.out);
  auto h = parse(testing::kOneAttack);
  CHECK(to_text(hafs::json::formula_from_json(parsed["formula"], h)) == to_text(encode_normal(h)));
}

TEST_CASE("formula JSON round trip") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto h = testing::random_framework(seed, 8);
    auto f = encode_normal(h);
    auto j = hafs::json::formula(f);
    auto back = hafs::json::formula_from_json(njson::parse(j.dump()), h);
    CHECK(back == f);
  }
}

TEST_CASE("eval") {
  auto r = call({"eval", "--text", testing::kOneAttack, "--assignment", R"({"a":"1","r1":"1","b":"0"})"});
  REQUIRE(r.code == 0);
  auto j = njson::parse(r.out);
  CHECK(j["model"] == true);
  CHECK(j["value"] == "1");
  CHECK(j["mode"] == "exact");

  auto bad = njson::parse(call({"eval", "--text", testing::kOneAttack, "--assignment", R"({"a":1,"r1":1,"b":1})"}).out);
  CHECK(bad["model"] == false);

  auto g = call({"eval", "--text", testing::kSelfSupport, "--logic", "godel", "--assignment", R"({"a":0.4,"t1":1})"});
  REQUIRE(g.code == 0);
  auto gj = njson::parse(g.out);
  CHECK(gj["model"] == true);
  CHECK(gj["mode"] == "float");

  auto q = njson::parse(call({"eval", "--text", testing::kSelfSupport, "--logic", "product", "--assignment",
                             R"({"arg:a":"1/3","supp:t1":"1/2"})"})
                           .out);
  CHECK(q["mode"] == "exact");
  CHECK(q["model"] == false);

  CHECK(call({"eval", "--text", testing::kOneAttack, "--assignment", R"({"a":1})"}).code == 2);
  CHECK(call({"eval", "--text", testing::kOneAttack, "--assignment", "{nope"}).code == 2);
  CHECK(call({"eval", "--text", testing::kOneAttack, "--assignment", R"({"a":1,"r1":1,"zz":1})"}).code == 2);
}

TEST_CASE("assignment parsing") {
  auto h = parse(testing::kOneAttack);
  auto exact = hafs::json::parse_assignment(njson::parse(R"({"a":"1/2","b":0,"att:r1":"1"})"), h);
  REQUIRE(std::holds_alternative<std::vector<Rational>>(exact));
  CHECK(std::get<std::vector<Rational>>(exact) == std::vector<Rational>{Rational(1, 2), Rational(0), Rational(1)});
  auto approx = hafs::json::parse_assignment(njson::parse(R"({"a":"1/2","b":0.25,"r1":"0.5"})"), h);
  REQUIRE(std::holds_alternative<std::vector<double>>(approx));
  CHECK(std::get<std::vector<double>>(approx) == std::vector<double>{0.5, 0.25, 0.5});
  CHECK_THROWS(hafs::json::parse_assignment(njson::parse(R"({"a":1,"arg:a":1,"b":0,"r1":1})"), h));
  CHECK_THROWS(hafs::json::parse_assignment(njson::parse(R"({"a":true,"b":0,"r1":1})"), h));
  CHECK_THROWS(hafs::json::parse_assignment(njson::parse(R"([1,2])"), h));
}

TEST_CASE("solve") {
  auto r = call({"solve", "--text", testing::kSelfAttack, "--logic", "godel"});
  REQUIRE(r.code == 0);
  auto j = njson::parse(r.out);
  REQUIRE(j["reports"].size() >= 1);
  for (const auto& rep : j["reports"]) {
    CHECK(rep["converged"] == true);
    CHECK(rep["residual"].get<double>() <= 1e-9);
    CHECK(rep["solution"]["arg:a"].get<double>() == doctest::Approx(0.5));
    CHECK(rep["solution"]["att:r1"].get<double>() == doctest::Approx(1.0));
  }
  auto x = call({"solve", "--text", testing::kSelfSupport, "--exact"});
  REQUIRE(x.code == 0);
  CHECK(njson::parse(x.out)["solutions"].size() == 3);
  CHECK(call({"solve", "--text", testing::kSelfAttack, "--logic", "l3"}).code == 1);
}

TEST_CASE("verify") {
  auto ok = call({"verify", "--text", testing::kSelfSupport, "--theorem", "T1,IDEM"});
  CHECK(ok.code == 0);
  auto j = njson::parse(ok.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["theorem"] == "T1");
  CHECK(j[1]["passed"] == true);
  auto pre = call({"verify", "--text", testing::kSelfSupport, "--theorem", "T2"});
  CHECK(pre.code == 1);
  CHECK(njson::parse(pre.out)[0].contains("error"));
  CHECK(call({"verify", "--text", testing::kSelfSupport, "--theorem", "NOPE"}).code == 2);
}

TEST_CASE("random") {
  auto r = call({"random", "--args", "3", "--atts", "3", "--supps", "2", "--seed", "42", "--acyclic-supports",
                 "--higher-order-prob", "0.5"});
  REQUIRE(r.code == 0);
  auto h = parse(r.out);
  CHECK(h.size() == 8);
  CHECK(is_support_acyclic(h));
  CHECK(call({"random", "--args", "1", "--supps", "1", "--acyclic-supports"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"check"}).code == 2);
  CHECK(call({"check", "--text", "arg(a).", "--bogus"}).code == 2);
  CHECK(call({"labellings", "--text", "arg(a).", "--semantics", "ideal"}).code == 2);
  CHECK(call({"check", "--text", "arg(a"}).code == 2);
  CHECK(call({"check", "/nonexistent/file.hafs"}).code == 2);
  auto r = call({"check", "--text", "arg(a). att(r1,r1,a)."});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("enumeration bound from the environment") {
  ::setenv("HAFS_MAX_U", "2", 1);
  CHECK(call({"labellings", "--text", testing::kOneAttack}).code == 1);
  CHECK(call({"labellings", "--text", testing::kSelfSupport}).code == 0);
  ::setenv("HAFS_MAX_U", "x", 1);
  CHECK(call({"labellings", "--text", testing::kSelfSupport}).code == 2);
  ::unsetenv("HAFS_MAX_U");
}

TEST_CASE("identical invocations give identical bytes") {
  std::vector<std::vector<std::string>> cmds = {
      {"solve", "--text", testing::kMutual, "--logic", "product", "--seed", "3"},
      {"labellings", "--text", testing::kMutual, "--semantics", "preferred"},
      {"verify", "--text", testing::kSupportedTarget, "--theorem", "T1,T2,T_PL3,EQ_G,T16,CORR_G", "--seed", "4"},
      {"random", "--args", "4", "--atts", "5", "--supps", "3", "--seed", "9", "--higher-order-prob", "0.3"},
  };
  for (const auto& c : cmds) {
    auto a = call(c), b = call(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

}  // TEST_SUITE
