#include <doctest.h>

#include "hafs/bridge.hpp"
#include "support.hpp"

using namespace hafs;
using testing::lab;

TEST_SUITE("bridge") {

TEST_CASE("ternarize") {
  std::vector<Rational> exact{Rational(1), Rational(0)};
  CHECK(ternarize(exact) == lab("10"));
  std::vector<double> v{0.4, 1.0};
  CHECK(ternarize(v) == lab("h1"));
  std::vector<double> w{0.5, 0.999999999};
  CHECK(ternarize(w) == lab("h1"));
  std::vector<double> near_zero{1e-7, 2e-6};
  CHECK(ternarize(near_zero) == lab("0h"));
  std::vector<double> bad{1.5};
  CHECK_THROWS_AS(ternarize(bad), std::invalid_argument);
  std::vector<Rational> bad_q{Rational(-1, 3)};
  CHECK_THROWS_AS(ternarize(bad_q), std::invalid_argument);
}

TEST_CASE("ternarize is idempotent on its image") {
  for (const auto& l : {lab("01h"), lab("111"), lab("hhh")}) {
    auto e = embed(l);
    CHECK(ternarize(e) == l);
    CHECK(ternarize(embed(ternarize(e))) == l);
  }
}

TEST_CASE("theorem names") {
  for (auto id : kAllTheorems) CHECK(parse_theorem(to_string(id)) == id);
  CHECK_THROWS(parse_theorem("T99"));
}

TEST_CASE("worked example passes every applicable check") {
  auto ss = parse(testing::kSelfSupport);
  for (auto id : {TheoremId::T1, TheoremId::T_PL3, TheoremId::EQ_G, TheoremId::EQ_P, TheoremId::EQ_L,
                  TheoremId::T16, TheoremId::IDEM, TheoremId::CORR_G}) {
    auto r = verify(ss, id);
    CAPTURE(to_string(id));
    CHECK(r.passed);
    CHECK(r.checked > 0);
    CHECK_FALSE(r.counterexample.has_value());
    CHECK(r.framework_digest == digest(ss));
  }
  VerifyOptions product;
  product.logic = "product";
  CHECK(verify(ss, TheoremId::T16, product).passed);
}

TEST_CASE("preconditions") {
  auto ss = parse(testing::kSelfSupport);
  CHECK_THROWS_AS(verify(ss, TheoremId::T2), PreconditionError);
  VerifyOptions luk;
  luk.logic = "lukasiewicz";
  CHECK_THROWS_AS(verify(ss, TheoremId::T16, luk), PreconditionError);
  VerifyOptions product;
  product.logic = "product";
  CHECK_THROWS_AS(verify(ss, TheoremId::IDEM, product), PreconditionError);
  CHECK_THROWS_AS(verify(ss, TheoremId::CORR_G, product), PreconditionError);
  VerifyOptions l3;
  l3.logic = "l3";
  CHECK_THROWS_AS(verify(ss, TheoremId::T16, l3), PreconditionError);
  VerifyOptions tiny;
  tiny.max_elements = 1;
  CHECK_THROWS_AS(verify(ss, TheoremId::T1, tiny), BoundExceeded);
}

TEST_CASE("support-acyclic frameworks pass T2") {
  for (std::uint64_t seed = 0; seed < 60; seed += 2) {
    auto h = testing::random_framework(seed, 7);
    if (!is_support_acyclic(h)) continue;
    CHECK(verify(h, TheoremId::T2).passed);
  }
}

TEST_CASE("batch verification preserves order") {
  std::vector<Framework> hs;
  for (std::uint64_t seed = 0; seed < 20; ++seed) hs.push_back(testing::random_framework(seed, 6));
  auto reports = verify_batch(hs, TheoremId::T_PL3);
  REQUIRE(reports.size() == hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    CHECK(reports[i].framework_digest == digest(hs[i]));
    CHECK(reports[i].passed);
  }
}

}  // TEST_SUITE
