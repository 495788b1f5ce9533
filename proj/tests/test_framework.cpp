#include <doctest.h>

#include <algorithm>

#include "hafs/framework.hpp"
#include "support.hpp"

using namespace hafs;
using testing::idx;

TEST_SUITE("framework") {

TEST_CASE("parse minimal framework") {
  auto h = parse("arg(a).");
  CHECK(h.size() == 1);
  CHECK(h.num_arguments() == 1);
  CHECK(h.num_attacks() == 0);
  CHECK(h.num_supports() == 0);
  CHECK(h.element(0) == ElementId{ElementKind::Argument, "a"});
}

TEST_CASE("parse self-supporting argument") {
  auto h = parse(testing::kSelfSupport);
  REQUIRE(h.size() == 2);
  CHECK(h.num_supports() == 1);
  CHECK(h.element(1).qualified() == "supp:t1");
  auto [src, dst] = h.endpoints(idx(h, "t1"));
  CHECK(src == idx(h, "a"));
  CHECK(dst == idx(h, "a"));
  REQUIRE(h.supporters(idx(h, "a")).size() == 1);
  CHECK(h.supporters(idx(h, "a"))[0].source == idx(h, "a"));
  CHECK(h.supporters(idx(h, "a"))[0].relation == idx(h, "t1"));
}

TEST_CASE("parse rejects malformed input") {
  auto code_of = [](const char* text) {
    try {
      parse(text);
    } catch (const FrameworkError& e) {
      return e.code();
    }
    FAIL("no error for " << text);
    return FrameworkError::Code::Syntax;
  };
  CHECK(code_of("arg(a). att(r1,r1,a).") == FrameworkError::Code::SelfReference);
  CHECK(code_of("arg(a). arg(a).") == FrameworkError::Code::DuplicateName);
  CHECK(code_of("arg(a). att(a,a,a).") == FrameworkError::Code::DuplicateName);
  CHECK(code_of("arg(a). arg(b). att(r1,a,b). att(r2,a,b).") == FrameworkError::Code::DuplicateRelation);
  CHECK(code_of("arg(a). att(r1,a,b).") == FrameworkError::Code::DanglingReference);
  CHECK(code_of("arg(a). att(r1,a,r2). att(r2,a,r1).") == FrameworkError::Code::DefinitionalCycle);
  CHECK(code_of("arg(1a).") == FrameworkError::Code::Syntax);
  CHECK(code_of("arg(a)") == FrameworkError::Code::Syntax);
  CHECK(code_of("foo(a).") == FrameworkError::Code::Syntax);
}

TEST_CASE("attack and support may share endpoints") {
  auto h = parse("arg(a). arg(b). att(r1,a,b). supp(t1,a,b).");
  CHECK(h.size() == 4);
  CHECK(h.attackers(idx(h, "b")).size() == 1);
  CHECK(h.supporters(idx(h, "b")).size() == 1);
}

TEST_CASE("parse reports line and column") {
  try {
    parse("arg(a).\narg(b)\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse("arg(a).\n  arg(b c).");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
  }
}

TEST_CASE("comments and whitespace") {
  auto h = parse("% header\narg( a ).  % trailing\n\tatt(r1, a , a).\n");
  CHECK(h.size() == 2);
}

TEST_CASE("higher-order references") {
  auto h = parse("arg(a). arg(b). att(r1,a,b). att(r2,b,r1). supp(t1,a,r2).");
  CHECK(h.attackers(idx(h, "r1")).size() == 1);
  CHECK(h.attackers(idx(h, "r1"))[0].relation == idx(h, "r2"));
  CHECK(h.supporters(idx(h, "r2"))[0].source == idx(h, "a"));
}

TEST_CASE("support acyclicity") {
  CHECK_FALSE(is_support_acyclic(parse(testing::kSelfSupport)));
  CHECK(is_support_acyclic(parse("arg(a). arg(b). supp(t1,a,b).")));
  CHECK_FALSE(is_support_acyclic(parse("arg(a). arg(b). arg(c). supp(t1,a,b). supp(t2,b,c). supp(t3,c,a).")));
  CHECK(is_support_acyclic(parse("arg(a). arg(b). arg(c). supp(t1,a,b). supp(t2,b,c). supp(t3,a,c).")));
  CHECK(is_support_acyclic(parse(testing::kMutual)));
}

TEST_CASE("random generation") {
  RandomOptions o;
  o.num_arguments = 1;
  o.seed = 7;
  o.support_acyclic = true;
  auto h = generate_random(o);
  CHECK(h.size() == 1);
  CHECK(h.num_attacks() == 0);

  RandomOptions p{3, 3, 2, 42, true, 0.5};
  auto g1 = generate_random(p);
  auto g2 = generate_random(p);
  CHECK(g1 == g2);
  CHECK(serialize(g1) == serialize(g2));
  CHECK(is_support_acyclic(g1));
  CHECK(g1.size() == 8);

  RandomOptions impossible{1, 0, 1, 0, true, 0.0};
  CHECK_THROWS_AS(generate_random(impossible), FrameworkError);
  RandomOptions none{0, 0, 0, 0, false, 0.0};
  CHECK_THROWS_AS(generate_random(none), FrameworkError);
}

TEST_CASE("random frameworks respect the requested acyclicity") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomOptions o{3, 2, 3, seed, true, 0.4};
    auto h = generate_random(o);
    CHECK(is_support_acyclic(h));
    CHECK(parse(serialize(h)) == h);
  }
}

TEST_CASE("serialize round trip and canonical form") {
  auto h = parse("supp(t1,a,a). arg(a).");
  CHECK(serialize(h) == "arg(a).\nsupp(t1,a,a).\n");
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto g = testing::random_framework(seed, 8);
    auto text = serialize(g);
    auto back = parse(text);
    CHECK(back == g);
    CHECK(serialize(back) == text);
    CHECK(digest(back) == digest(g));
  }
}

TEST_CASE("incoming index equals a naive scan") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto h = testing::random_framework(seed, 8);
    for (std::size_t a = 0; a < h.size(); ++a) {
      std::vector<std::pair<std::size_t, std::size_t>> att, sup, got_att, got_sup;
      for (std::size_t r = 0; r < h.size(); ++r) {
        if (h.element(r).kind == ElementKind::Argument) continue;
        auto [src, dst] = h.endpoints(r);
        if (dst != a) continue;
        (h.element(r).kind == ElementKind::Attack ? att : sup).emplace_back(src, r);
      }
      for (auto in : h.attackers(a)) got_att.emplace_back(in.source, in.relation);
      for (auto in : h.supporters(a)) got_sup.emplace_back(in.source, in.relation);
      std::sort(att.begin(), att.end(), [](auto x, auto y) { return x.second < y.second; });
      std::sort(sup.begin(), sup.end(), [](auto x, auto y) { return x.second < y.second; });
      CHECK(got_att == att);
      CHECK(got_sup == sup);
    }
  }
}

TEST_CASE("qualified ids") {
  auto id = ElementId::parse_qualified("att:r1");
  CHECK(id.kind == ElementKind::Attack);
  CHECK(id.name == "r1");
  CHECK(id.qualified() == "att:r1");
  CHECK_THROWS(ElementId::parse_qualified("foo:r1"));
  CHECK_THROWS(ElementId::parse_qualified("r1"));
  CHECK(ElementId{ElementKind::Argument, "z"} < ElementId{ElementKind::Attack, "a"});
  CHECK(is_valid_name("_x9"));
  CHECK_FALSE(is_valid_name("9x"));
  CHECK_FALSE(is_valid_name(""));
}

}  // TEST_SUITE
