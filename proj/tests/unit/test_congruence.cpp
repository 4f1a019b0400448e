#include <doctest.h>

#include <random>

#include "malcev/congruence.hpp"
#include "malcev/error.hpp"
#include "malcev/fixtures.hpp"
#include "malcev/presets.hpp"
#include "../support/oracles.hpp"

using namespace malcev;

TEST_CASE("congruences of the fixtures") {
  CHECK(all_congruences(fixtures::groupoid_b()).size() == 3);
  // Z3 is simple; the congruences of a chain cut it into intervals.
  CHECK(all_congruences(fixtures::cyclic_group(3)).size() == 2);
  CHECK(all_congruences(fixtures::lattice_chain(3)).size() == 4);
  CHECK(all_congruences(fixtures::left_zero2()).size() == 2);
  auto a_cons = all_congruences(fixtures::groupoid_a());
  CHECK(a_cons.front().is_total());
  CHECK(a_cons.back().is_discrete());
}

TEST_CASE("closure and enumeration agree with brute force on random algebras") {
  std::mt19937 rng(2024);
  const std::vector<Signature> sigs{presets::groupoid_signature(), presets::group_signature(),
                                    presets::monounary_signature(), Signature({{"f", 3}})};
  for (int round = 0; round < 60; ++round) {
    const auto& sig = sigs[round % sigs.size()];
    std::size_t n = 2 + round % 3;
    auto a = testing::random_algebra(sig, n, rng);
    auto naive = testing::congruences_naive(a);
    CHECK(all_congruences(a) == naive);
    CHECK(all_congruences_by_filter(a) == naive);
    for (Element u = 0; u < n; ++u)
      for (Element v = u + 1; v < n; ++v) {
        CHECK(principal_congruence(a, u, v) == testing::generated_naive(a, {{u, v}}));
        CHECK(congruence_generated(a, {{u, v}, {0, v}}) == testing::generated_naive(a, {{u, v}, {0, v}}));
      }
    CHECK(congruence_generated(a, {}).is_discrete());
  }
}

TEST_CASE("guard") {
  auto big = fixtures::lattice_chain(11);
  CHECK_THROWS_AS(all_congruences(big), GuardExceeded);
  CHECK(all_congruences(big, 11).size() == 1024);
}

TEST_CASE("quotient") {
  auto a = fixtures::groupoid_a();
  auto theta = parse_partition("{{0,2},{1},{3}}", 4);
  auto q = quotient(a, theta);
  CHECK(q.algebra == fixtures::groupoid_b());
  CHECK(q.class_map == std::vector<Element>{0, 1, 0, 2});
  CHECK(q.algebra == *testing::quotient_naive(a, theta));
  CHECK_THROWS_AS(quotient(a, parse_partition("{{0,1}}", 4)), InvalidArgument);
}

TEST_CASE("quotients of random algebras match the naive construction") {
  std::mt19937 rng(77);
  for (int round = 0; round < 40; ++round) {
    auto a = testing::random_algebra(round % 2 ? presets::groupoid_signature() : presets::group_signature(),
                                     3 + round % 2, rng);
    for (const auto& theta : all_congruences(a)) {
      auto naive = testing::quotient_naive(a, theta);
      REQUIRE(naive);
      CHECK(quotient(a, theta).algebra == *naive);
    }
  }
}

TEST_CASE("subuniverses and restriction") {
  auto a = fixtures::groupoid_a();
  CHECK(is_subuniverse(a, {0, 1}));
  CHECK(is_subuniverse(a, {2, 3}));
  CHECK_FALSE(is_subuniverse(a, {1, 3}));
  CHECK(subuniverse_closure(a, {1, 3}) == std::vector<Element>{0, 1, 2, 3});
  auto sub = restrict_to(a, {2, 3});
  CHECK(sub.elements == std::vector<Element>{2, 3});
  CHECK(sub.algebra == fixtures::semilattice2());
  CHECK_THROWS_AS(restrict_to(a, {1, 3}), InvalidArgument);
  CHECK(idempotent_elements(a) == std::vector<Element>{0, 1, 2, 3});
  CHECK(idempotent_elements(fixtures::cyclic_group(3)) == std::vector<Element>{0});
}

TEST_CASE("permutability") {
  // Congruences of a group permute.
  auto z = fixtures::cyclic_group(2);
  auto cons = all_congruences(z);
  for (const auto& a : cons)
    for (const auto& b : cons) CHECK(permutable(z, a, b));
  // Congruences {{0,1},{2}} and {{0},{1,2}} of the 3-chain do not permute but 3-permute.
  auto l3 = fixtures::lattice_chain(3);
  auto a = parse_partition("{{0,1},{2}}", 3);
  auto b = parse_partition("{{1,2},{0}}", 3);
  CHECK_FALSE(permutable(l3, a, b));
  CHECK(three_permutable(l3, a, b));
  CHECK(join(l3, a, b).is_total());
  CHECK_THROWS_AS(permutable(fixtures::groupoid_a(), parse_partition("{{0,1}}", 4), Partition::discrete(4)),
                  InvalidArgument);
}

TEST_CASE("Mal'tsev term on classes") {
  auto z3 = fixtures::cyclic_group(3);
  auto p = parse_term("(· (· x (inv y)) z)", z3.signature());
  CHECK(is_maltsev_on_classes(z3, Partition::total(3), p));
  auto l2 = fixtures::lattice_chain(2);
  auto q = parse_term("(+ x z)", l2.signature());
  CHECK_FALSE(is_maltsev_on_classes(l2, Partition::total(2), q));
  CHECK(is_maltsev_on_classes(l2, Partition::discrete(2), q));
}

TEST_CASE("band realization") {
  auto sig = presets::quasigroup_signature();
  auto a = band_algebra_from({0, 0, 1, 1}, 2, sig);
  for (std::size_t op = 0; op < 3; ++op) CHECK(a.apply(op, {1, 0}) == 1);
  CHECK_THROWS_AS(band_algebra_from({1, 0, 0, 1}, 2, sig), InvalidArgument);
  auto u = band_algebra_from({0, 0, 1, 1}, 2, Signature({{"·", 2}, {"u", 1}, {"t", 3}}));
  CHECK(u.apply(1, {1}) == 1);
  CHECK(u.apply(2, {1, 0, 0}) == 1);
}
