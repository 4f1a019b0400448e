#include <benchmark/benchmark.h>

#include <random>

#include "malcev/congruence.hpp"
#include "malcev/fixtures.hpp"
#include "malcev/identities.hpp"
#include "malcev/presets.hpp"
#include "malcev/replica.hpp"
#include "malcev/words.hpp"

using namespace malcev;

namespace {

FiniteAlgebra random_groupoid(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  std::vector<Element> table(n * n);
  for (auto& e : table) e = pick(rng);
  return FiniteAlgebra(presets::groupoid_signature(), n, {table});
}

}  // namespace

static void BM_PrincipalCongruence(benchmark::State& state) {
  auto a = random_groupoid(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(principal_congruence(a, 0, 1));
}
BENCHMARK(BM_PrincipalCongruence)->Arg(8)->Arg(32)->Arg(128);

static void BM_AllCongruences(benchmark::State& state) {
  auto a = fixtures::lattice_chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_congruences(a));
}
BENCHMARK(BM_AllCongruences)->Arg(4)->Arg(6)->Arg(8);

static void BM_AllCongruencesByFilter(benchmark::State& state) {
  auto a = fixtures::lattice_chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_congruences_by_filter(a));
}
BENCHMARK(BM_AllCongruencesByFilter)->Arg(4)->Arg(6)->Arg(8);

static void BM_ReplicaBands(benchmark::State& state) {
  auto a = random_groupoid(static_cast<std::size_t>(state.range(0)), 2);
  auto w = presets::bands();
  for (auto _ : state) benchmark::DoNotOptimize(replica_congruence(a, w));
}
BENCHMARK(BM_ReplicaBands)->Arg(4)->Arg(16)->Arg(32);

static void BM_MaltsevMember(benchmark::State& state) {
  auto a = fixtures::groupoid_a();
  auto v = presets::commutative_groupoids();
  auto w = presets::left_zero_bands();
  for (auto _ : state) benchmark::DoNotOptimize(maltsev_member(a, v, w));
}
BENCHMARK(BM_MaltsevMember);

static void BM_SigmaP(benchmark::State& state) {
  auto sig = presets::groupoid_signature();
  std::vector<Identity> base{parse_identity("(· x y) = x", sig)};
  auto w = presets::bands();
  SigmaPConfig cfg{2, static_cast<std::size_t>(state.range(0)), 100000, true};
  for (auto _ : state) benchmark::DoNotOptimize(sigma_p_generate(base, w, cfg));
}
BENCHMARK(BM_SigmaP)->Arg(5)->Arg(7);

static void BM_FgSearchGroups(benchmark::State& state) {
  auto gp = presets::groups();
  auto b = presets::bands(gp.signature());
  for (auto _ : state) benchmark::DoNotOptimize(fg_search(gp, b, 6));
}
BENCHMARK(BM_FgSearchGroups);

static void BM_FreeBandNormalForm(benchmark::State& state) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> letter(0, 3);
  const char* names[] = {"x", "y", "z", "w"};
  Word w;
  for (int i = 0; i < state.range(0); ++i) w.push_back(names[letter(rng)]);
  for (auto _ : state) benchmark::DoNotOptimize(free_band_normal_form(w));
}
BENCHMARK(BM_FreeBandNormalForm)->Arg(16)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
