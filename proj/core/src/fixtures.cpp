#include "malcev/fixtures.hpp"

#include <algorithm>

#include "malcev/congruence.hpp"
#include "malcev/presets.hpp"

namespace malcev::fixtures {

namespace {
FiniteAlgebra groupoid(std::size_t n, std::vector<Element> table) {
  return FiniteAlgebra(presets::groupoid_signature(), n, {std::move(table)});
}
}  // namespace

FiniteAlgebra groupoid_a() {
  return groupoid(4, {0, 0, 0, 0,  //
                      0, 1, 0, 0,  //
                      2, 2, 2, 2,  //
                      2, 3, 2, 3});
}

FiniteAlgebra groupoid_b() {
  return quotient(groupoid_a(), Partition::from_blocks(4, {{0, 2}, {1}, {3}})).algebra;
}

FiniteAlgebra left_zero2() { return groupoid(2, {0, 0, 1, 1}); }
FiniteAlgebra right_zero2() { return groupoid(2, {0, 1, 0, 1}); }
FiniteAlgebra semilattice2() { return groupoid(2, {0, 0, 0, 1}); }

FiniteAlgebra cyclic_group(std::size_t n) {
  std::vector<Element> mul(n * n);
  std::vector<Element> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    inv[a] = static_cast<Element>((n - a) % n);
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteAlgebra(presets::group_signature(), n, {std::move(mul), std::move(inv)});
}

namespace {
FiniteAlgebra lattice_from_order(std::size_t n, const std::vector<Element>& join_table,
                                 const std::vector<Element>& meet_table) {
  return FiniteAlgebra(presets::lattice_signature(), n, {join_table, meet_table});
}
}  // namespace

FiniteAlgebra lattice_chain(std::size_t n) {
  std::vector<Element> j(n * n);
  std::vector<Element> m(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      j[a * n + b] = static_cast<Element>(std::max(a, b));
      m[a * n + b] = static_cast<Element>(std::min(a, b));
    }
  }
  return lattice_from_order(n, j, m);
}

FiniteAlgebra lattice_square() {
  std::vector<Element> j(16);
  std::vector<Element> m(16);
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) {
      j[a * 4 + b] = a | b;
      m[a * 4 + b] = a & b;
    }
  }
  return lattice_from_order(4, j, m);
}

FiniteAlgebra boolean_two() {
  return FiniteAlgebra(presets::boolean_signature(), 2,
                       {{0, 1, 1, 1}, {0, 0, 0, 1}, {1, 0}});
}

FiniteAlgebra trivial_groupoid() { return trivial_algebra(presets::groupoid_signature()); }

std::vector<Builtin> builtin_list() {
  return {
      {"A_paper", "4-element groupoid in the commutative-groupoid ∘ LZ product"},
      {"B_paper", "A_paper modulo {{0,2},{1},{3}}; not in the product"},
      {"LZ2", "2-element left-zero band"},
      {"RZ2", "2-element right-zero band"},
      {"SL2", "2-element semilattice"},
      {"Z2", "cyclic group of order 2 as (·, inv)"},
      {"Z3", "cyclic group of order 3 as (·, inv)"},
      {"L2", "2-element lattice (+, ·)"},
      {"L3", "3-element chain (+, ·)"},
      {"L2x2", "4-element Boolean lattice (+, ·)"},
      {"BA2", "2-element Boolean algebra (+, ·, ')"},
      {"T1", "one-element groupoid"},
  };
}

std::optional<FiniteAlgebra> builtin(const std::string& name) {
  if (name == "A_paper") return groupoid_a();
  if (name == "B_paper") return groupoid_b();
  if (name == "LZ2") return left_zero2();
  if (name == "RZ2") return right_zero2();
  if (name == "SL2") return semilattice2();
  if (name == "Z2") return cyclic_group(2);
  if (name == "Z3") return cyclic_group(3);
  if (name == "L2") return lattice_chain(2);
  if (name == "L3") return lattice_chain(3);
  if (name == "L2x2") return lattice_square();
  if (name == "BA2") return boolean_two();
  if (name == "T1") return trivial_groupoid();
  return std::nullopt;
}

}  // namespace malcev::fixtures
