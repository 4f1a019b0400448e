#pragma once

#include <optional>
#include <string>
#include <vector>

#include "malcev/algebra.hpp"

namespace malcev::fixtures {

// Four-element groupoid whose LZ-replica has classes {0,1}, {2,3}:
//
//   · | 0 1 2 3
//   --+--------
//   0 | 0 0 0 0
//   1 | 0 1 0 0
//   2 | 2 2 2 2
//   3 | 2 3 2 3
FiniteAlgebra groupoid_a();
// groupoid_a() modulo {{0,2},{1},{3}}; elements 0 = {0,2}, 1 = {1}, 2 = {3}.
FiniteAlgebra groupoid_b();

FiniteAlgebra left_zero2();
FiniteAlgebra right_zero2();
// Meet semilattice on {0,1}: 0·x = 0.
FiniteAlgebra semilattice2();
// Z_n as (·, inv).
FiniteAlgebra cyclic_group(std::size_t n);
// Chain 0 < 1 < ... < n-1 as (+, ·) = (max, min).
FiniteAlgebra lattice_chain(std::size_t n);
// 2 x 2 Boolean lattice (bits as subsets) as (+, ·).
FiniteAlgebra lattice_square();
// Two-element Boolean algebra as (+, ·, ').
FiniteAlgebra boolean_two();
FiniteAlgebra trivial_groupoid();

struct Builtin {
  std::string name;
  std::string description;
};
std::vector<Builtin> builtin_list();
// Looks up a compiled-in fixture by name (`A_paper`, `B_paper`, `LZ2`, `RZ2`,
// `SL2`, `Z2`, `Z3`, `L2`, `L3`, `L2x2`, `BA2`, `T1`).
std::optional<FiniteAlgebra> builtin(const std::string& name);

}  // namespace malcev::fixtures
