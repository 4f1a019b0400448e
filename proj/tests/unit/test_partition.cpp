#include <doctest.h>

#include <set>

#include "malcev/error.hpp"
#include "malcev/partition.hpp"
#include "../support/oracles.hpp"

using namespace malcev;

TEST_CASE("bell numbers and enumeration") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (std::size_t n = 0; n < 8; ++n) {
    CHECK(bell_number(n) == bell[n]);
    std::set<std::vector<std::size_t>> seen;
    for_each_partition(n, [&](const Partition& p) {
      seen.insert(p.labels());
      return true;
    });
    CHECK(seen.size() == bell[n]);
  }
}

TEST_CASE("canonical labels and printing") {
  Partition p({7, 3, 7, 9});
  CHECK(p.labels() == std::vector<std::size_t>{0, 1, 0, 2});
  CHECK(p.to_string() == "{{0,2},{1},{3}}");
  CHECK(p.block_count() == 3);
  CHECK(p.representative(1) == 1);
  CHECK(parse_partition("{{0,2},{1},{3}}", 4) == p);
  CHECK(parse_partition("0,2|1", 4) == p);
  CHECK(parse_partition("{{0,2}}", 4) == p);
  CHECK_THROWS(parse_partition("{{0,5}}", 4));
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), InvalidArgument);
}

TEST_CASE("meet, join, refinement") {
  auto a = parse_partition("{{0,1},{2},{3}}", 4);
  auto b = parse_partition("{{1,2},{0},{3}}", 4);
  CHECK(join_equivalences(a, b) == parse_partition("{{0,1,2},{3}}", 4));
  CHECK(meet(a, b).is_discrete());
  CHECK(a.refines(join_equivalences(a, b)));
  CHECK_FALSE(a.refines(b));
  CHECK(Partition::discrete(4).refines(a));
  CHECK(a.refines(Partition::total(4)));
}

TEST_CASE("composition matches the definition") {
  std::vector<Partition> all;
  for_each_partition(4, [&](const Partition& p) {
    all.push_back(p);
    return true;
  });
  for (const auto& a : all) {
    for (const auto& b : all) {
      Relation r = compose(a, b);
      auto naive = testing::compose_naive(a, b);
      for (Element x = 0; x < 4; ++x)
        for (Element y = 0; y < 4; ++y) CHECK(r.contains(x, y) == naive[x][y]);
    }
  }
}

TEST_CASE("composition is associative") {
  std::vector<Relation> rels;
  for_each_partition(3, [&](const Partition& p) {
    rels.push_back(Relation::from_partition(p));
    return true;
  });
  std::vector<Relation> products;
  for (const auto& a : rels)
    for (const auto& b : rels) products.push_back(compose(a, b));
  rels.insert(rels.end(), products.begin(), products.end());
  for (const auto& r : rels)
    for (const auto& s : rels)
      for (const auto& t : rels) CHECK(compose(compose(r, s), t) == compose(r, compose(s, t)));
}

TEST_CASE("relations") {
  Relation id = Relation::identity(3);
  CHECK(id.pair_count() == 3);
  CHECK(id.is_subset_of(Relation::from_partition(Partition::total(3))));
  CHECK(compose(id, id) == id);
}
