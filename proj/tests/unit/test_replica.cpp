#include <doctest.h>

#include <random>

#include <json.hpp>

#include "malcev/error.hpp"
#include "malcev/fixtures.hpp"
#include "malcev/identities.hpp"
#include "malcev/presets.hpp"
#include "malcev/replica.hpp"
#include "../support/oracles.hpp"

using namespace malcev;

TEST_CASE("replica of the four-element groupoid") {
  auto a = fixtures::groupoid_a();
  CHECK(replica_congruence(a, presets::left_zero_bands()).to_string() == "{{0,1},{2,3}}");
  CHECK(replica_congruence(a, presets::trivial_variety()).is_total());
  CHECK(replica_congruence(fixtures::semilattice2(), presets::semilattices()).is_discrete());
  CHECK_THROWS_AS(replica_congruence(a, presets::lattices()), SignatureMismatch);
  CHECK_THROWS_AS(replica_congruence(a, presets::generated_by(fixtures::left_zero2(), "gen")),
                  MissingPresentation);
}

TEST_CASE("replica is the least congruence with quotient in W") {
  std::mt19937 rng(99);
  const auto sig = presets::groupoid_signature();
  const std::vector<VarietySpec> ws{presets::semilattices(), presets::left_zero_bands(),
                                    presets::constant_semigroups(), presets::commutative_groupoids(),
                                    presets::rectangular_bands()};
  for (int round = 0; round < 80; ++round) {
    auto a = testing::random_algebra(sig, 2 + round % 3, rng);
    for (const auto& w : ws) {
      auto rho = replica_congruence(a, w);
      auto oracle = testing::replica_naive(a, w.base());
      REQUIRE(oracle);
      CHECK(rho == *oracle);
      CHECK(satisfies_all(quotient(a, rho).algebra, w.base()));
    }
  }
}

TEST_CASE("replica is monotone in the base") {
  std::mt19937 rng(3);
  const auto sig = presets::groupoid_signature();
  auto idem = presets::from_base("I", sig, {parse_identity("(· x x) = x", sig)});
  auto bands = presets::bands();
  auto rect = presets::rectangular_bands();
  for (int round = 0; round < 40; ++round) {
    auto a = testing::random_algebra(sig, 3 + round % 2, rng);
    auto r1 = replica_congruence(a, idem);
    auto r2 = replica_congruence(a, bands);
    auto r3 = replica_congruence(a, rect);
    CHECK(r1.refines(r2));
    CHECK(r2.refines(r3));
  }
}

TEST_CASE("Mal'tsev membership") {
  auto comm = presets::commutative_groupoids();
  auto lz = presets::left_zero_bands();
  auto ra = maltsev_member(fixtures::groupoid_a(), comm, lz);
  CHECK(ra.verdict == Verdict::member);
  REQUIRE(ra.blocks.size() == 2);
  CHECK(ra.blocks[0].is_subalgebra);
  CHECK(ra.blocks[1].checked_against_v);
  auto rb = maltsev_member(fixtures::groupoid_b(), comm, lz);
  CHECK(rb.verdict == Verdict::non_member);
  REQUIRE(rb.blocks.size() == 1);
  REQUIRE(rb.blocks[0].failing_identity);
  CHECK(format_assignment(rb.blocks[0].failing_assignment) == "x=1 y=2");
  CHECK(format_report(rb) ==
        "verdict: non-member\nreplica: {{0,1,2}}\nblock {0,1,2}: subalgebra, V fails (· x y) = (· y x) at x=1 y=2\n");
  auto j = nlohmann::json::parse(report_json(rb));
  CHECK(j["verdict"] == "non-member");
  CHECK(j["blocks"][0]["assignment"]["y"] == 2);
  auto trivial = presets::trivial_variety();
  CHECK(maltsev_member(fixtures::left_zero2(), trivial, lz).verdict == Verdict::member);
}

TEST_CASE("blocks that are not subalgebras are skipped") {
  // u = (0 -> 1, 1 -> 1, 2 -> 2) already satisfies u(u(x)) = u(x); of the
  // singleton blocks only {1} and {2} are subuniverses.
  FiniteAlgebra m(presets::monounary_signature(), 3, {{1, 1, 2}});
  auto rep = maltsev_member(m, presets::monounary_collapse(0), presets::monounary_cycle(1, 1));
  CHECK(rep.verdict == Verdict::member);
  REQUIRE(rep.blocks.size() == 3);
  CHECK_FALSE(rep.blocks[0].is_subalgebra);
  CHECK_FALSE(rep.blocks[0].checked_against_v);
  CHECK(rep.blocks[1].checked_against_v);
  // Z3 over the variety of all algebras: singleton blocks, only {0} closed.
  auto z3 = fixtures::cyclic_group(3);
  auto r = maltsev_member(z3, presets::trivial_variety(z3.signature()), presets::all_algebras(z3.signature()));
  CHECK(r.verdict == Verdict::member);
  CHECK(r.blocks[0].is_subalgebra);
  CHECK_FALSE(r.blocks[1].is_subalgebra);
}

TEST_CASE("relative membership") {
  auto s = presets::semilattices();
  CHECK(relative_member(fixtures::semilattice2(), s, s, s).verdict == Verdict::member);
  auto r = relative_member(fixtures::left_zero2(), presets::commutative_groupoids(), presets::left_zero_bands(), s);
  CHECK(r.verdict == Verdict::non_member);
  CHECK(r.k_failing_identity.has_value());
  auto all = presets::all_algebras();
  for (const auto& b : fixtures::builtin_list()) {
    auto a = *fixtures::builtin(b.name);
    if (!(a.signature() == presets::groupoid_signature())) continue;
    auto comm = presets::commutative_groupoids();
    auto lz = presets::left_zero_bands();
    CHECK(relative_member(a, comm, lz, all).verdict == maltsev_member(a, comm, lz).verdict);
  }
}

TEST_CASE("W-sum decomposition") {
  auto ws = w_sum_decomposition(fixtures::groupoid_a(), presets::left_zero_bands());
  REQUIRE(ws.blocks.size() == 2);
  for (const auto& b : ws.blocks) CHECK(b.algebra == fixtures::semilattice2());
  CHECK(ws.quotient.algebra == fixtures::left_zero2());
  auto sl = w_sum_decomposition(fixtures::semilattice2(), presets::semilattices());
  CHECK(sl.blocks.size() == 2);
  CHECK(sl.quotient.algebra == fixtures::semilattice2());
  CHECK_THROWS_AS(w_sum_decomposition(fixtures::groupoid_a(), presets::commutative_groupoids()), InvalidArgument);
}

TEST_CASE("H-closure probe") {
  auto comm = presets::commutative_groupoids();
  auto lz = presets::left_zero_bands();
  auto failures = h_closure_probe(fixtures::groupoid_a(), comm, lz);
  REQUIRE(failures.size() == 1);
  CHECK(failures[0].theta.to_string() == "{{0,2},{1},{3}}");
  auto s = presets::semilattices();
  CHECK(h_closure_probe(fixtures::semilattice2(), s, s).empty());
  CHECK_THROWS_AS(h_closure_probe(fixtures::groupoid_b(), comm, lz), InvalidArgument);
  CHECK_THROWS_AS(h_closure_probe(fixtures::groupoid_a(), comm, lz, 3), GuardExceeded);
}

TEST_CASE("idempotent W: blocks are subuniverses") {
  std::mt19937 rng(41);
  const auto sig = presets::groupoid_signature();
  for (const auto& w : {presets::semilattices(), presets::left_zero_bands(), presets::bands()}) {
    for (int round = 0; round < 30; ++round) {
      auto a = testing::random_algebra(sig, 3 + round % 2, rng);
      auto rho = replica_congruence(a, w);
      auto q = quotient(a, rho);
      for (const auto& block : rho.blocks()) {
        bool sub = is_subuniverse(a, block);
        auto idem = idempotent_elements(q.algebra);
        bool idempotent_class = std::find(idem.begin(), idem.end(), q.class_map[block[0]]) != idem.end();
        CHECK(sub == idempotent_class);
        CHECK(idempotent_class);
      }
    }
  }
}

TEST_CASE("members satisfy the generated identities") {
  std::mt19937 rng(17);
  const auto sig = presets::groupoid_signature();
  auto comm = presets::commutative_groupoids();
  auto lz = presets::left_zero_bands();
  auto ids = sigma_p_generate(comm.base(), lz, {2, 5, 2000, true});
  int members = 0;
  for (int round = 0; round < 400 && members < 25; ++round) {
    auto a = testing::random_algebra(sig, 2 + round % 3, rng);
    if (maltsev_member(a, comm, lz).verdict != Verdict::member) continue;
    ++members;
    CHECK(sigma_p_holds_in(a, ids).all_hold);
  }
  CHECK(members > 0);
}
