#include <doctest.h>

#include <random>

#include "malcev/algebra.hpp"
#include "malcev/algebra_io.hpp"
#include "malcev/error.hpp"
#include "malcev/fixtures.hpp"
#include "malcev/presets.hpp"
#include "../support/oracles.hpp"

using namespace malcev;

TEST_CASE("algebra construction validates tables") {
  const auto sig = presets::groupoid_signature();
  CHECK_THROWS_AS(FiniteAlgebra(sig, 2, {{0, 1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(FiniteAlgebra(sig, 2, {{0, 1, 1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(FiniteAlgebra(sig, 0, {{}}), InvalidArgument);
  CHECK_THROWS_AS(FiniteAlgebra(sig, 2, {}), InvalidArgument);
}

TEST_CASE("groupoid_a table") {
  auto a = fixtures::groupoid_a();
  const Element rows[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 0}, {2, 2, 2, 2}, {2, 3, 2, 3}};
  for (Element i = 0; i < 4; ++i)
    for (Element j = 0; j < 4; ++j) CHECK(a.apply(0, {i, j}) == rows[i][j]);
}

TEST_CASE("first counterexample in lexicographic order") {
  auto a = fixtures::groupoid_a();
  auto sig = a.signature();
  auto cex = find_counterexample(a, parse_identity("(· x y) = (· y x)", sig));
  REQUIRE(cex);
  CHECK(format_assignment(*cex) == "x=0 y=2");
  CHECK(satisfies(a, parse_identity("(· x x) = x", sig)));
  CHECK(satisfies(fixtures::left_zero2(), parse_identity("(· x y) = x", sig)));
  CHECK_FALSE(satisfies(fixtures::right_zero2(), parse_identity("(· x y) = x", sig)));
}

TEST_CASE("compiled evaluation agrees with recursive evaluation") {
  std::mt19937 rng(7);
  const auto sig = presets::group_signature();
  auto terms = enumerate_terms(sig, {"x", "y", "z"}, 5);
  for (int round = 0; round < 20; ++round) {
    auto a = testing::random_algebra(sig, 3, rng);
    for (const auto& t : terms) {
      CompiledTerm ct(t, sig, {"x", "y", "z"});
      for (Element x = 0; x < 3; ++x)
        for (Element z = 0; z < 3; ++z) {
          std::vector<Element> vals{x, 1, z};
          CHECK(ct(a, vals) == evaluate(t, a, {{"x", x}, {"y", 1}, {"z", z}}));
        }
    }
  }
}

TEST_CASE("satisfies agrees with the naive oracle") {
  std::mt19937 rng(11);
  const auto sig = presets::groupoid_signature();
  auto terms = enumerate_terms(sig, {"x", "y"}, 5);
  for (int round = 0; round < 10; ++round) {
    auto a = testing::random_algebra(sig, 3, rng);
    for (std::size_t i = 0; i < terms.size(); i += 3) {
      for (std::size_t j = 0; j < terms.size(); j += 5) {
        Identity id{terms[i], terms[j]};
        CHECK(satisfies(a, id) == testing::satisfies_naive(a, id));
      }
    }
  }
}

TEST_CASE("evaluate rejects unbound variables") {
  auto a = fixtures::left_zero2();
  CHECK_THROWS_AS(evaluate(parse_term("(· x y)", a.signature()), a, {{"x", 0}}), InvalidArgument);
}

TEST_CASE("algebra text format round trip") {
  for (const auto& b : fixtures::builtin_list()) {
    auto a = *fixtures::builtin(b.name);
    std::string text = format_algebra(a);
    auto back = parse_algebra(text);
    CHECK(back.algebra == a);
    CHECK(format_algebra(back.algebra) == text);
  }
}

TEST_CASE("algebra text format details") {
  auto text = parse_algebra(R"(# left-zero band on {p, q}
size 2
elements p q
op · 2
table ·
p p
q q
)");
  CHECK(text.names == std::vector<std::string>{"p", "q"});
  CHECK(text.algebra == fixtures::left_zero2());
  CHECK(format_algebra(fixtures::left_zero2()) == "size 2\nop · 2\ntable ·\n0 0\n1 1\n");
  CHECK_THROWS_AS(parse_algebra("size 2\nop · 2\ntable ·\n0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("size 2\nop · 2\ntable ·\n0 0 1 5\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("op · 2\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("size 2\nop · 2\ntable +\n0 0 1 1\n"), ParseError);
}

TEST_CASE("identity lists") {
  auto list = parse_identity_list("op u 1\n(u x) = x\n", presets::groupoid_signature());
  CHECK(list.declares_signature);
  CHECK(list.signature == presets::monounary_signature());
  REQUIRE(list.identities.size() == 1);
  auto fallback = parse_identity_list("# comment\n(· x y) = (· y x)\n\n", presets::groupoid_signature());
  CHECK_FALSE(fallback.declares_signature);
  CHECK(fallback.identities.size() == 1);
  CHECK(parse_signature(format_signature(presets::boolean_signature())) == presets::boolean_signature());
}
