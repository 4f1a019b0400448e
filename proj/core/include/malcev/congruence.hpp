#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/partition.hpp"

namespace malcev {

inline constexpr std::size_t kDefaultCongruenceGuard = 10;

using ElementPair = std::pair<Element, Element>;

bool is_congruence(const FiniteAlgebra& a, const Partition& p);

// Least congruence containing `pairs`. Union-find over the carrier with a
// worklist of merged pairs; every merge of (u, v) enqueues the pairs
// (ω(.., u, ..), ω(.., v, ..)) for each operation, argument position and
// choice of the remaining arguments.
Partition congruence_generated(const FiniteAlgebra& a, const std::vector<ElementPair>& pairs);
Partition principal_congruence(const FiniteAlgebra& a, Element u, Element v);

// Every congruence, sorted by canonical labels (total first, discrete last).
// Built as the join-closure of principal congruences. Throws GuardExceeded
// when the carrier is larger than `guard`.
std::vector<Partition> all_congruences(const FiniteAlgebra& a,
                                       std::size_t guard = kDefaultCongruenceGuard);
// Same result by filtering all Bell(n) partitions; kept as an oracle.
std::vector<Partition> all_congruences_by_filter(const FiniteAlgebra& a,
                                                 std::size_t guard = kDefaultCongruenceGuard);

struct Quotient {
  FiniteAlgebra algebra;
  std::vector<Element> class_map;  // element -> block index
};

// Blocks are numbered by least element; tables induced via those
// representatives. Throws InvalidArgument if `theta` is not a congruence.
Quotient quotient(const FiniteAlgebra& a, const Partition& theta);

std::vector<Element> subuniverse_closure(const FiniteAlgebra& a, std::vector<Element> generators);
bool is_subuniverse(const FiniteAlgebra& a, const std::vector<Element>& set);

struct Subalgebra {
  FiniteAlgebra algebra;
  std::vector<Element> elements;  // new index -> original element, ascending
};
Subalgebra restrict_to(const FiniteAlgebra& a, std::vector<Element> set);

std::vector<Element> idempotent_elements(const FiniteAlgebra& a);

// Relation algebra on congruences; each throws InvalidArgument when an
// argument is not a congruence of `a`.
Partition join(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta);
bool permutable(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta);
bool three_permutable(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta);

// P(a,b,b) = a and P(a,a,b) = b for all a, b in each block of `theta`.
// `vars` names the three argument positions of `p`.
bool is_maltsev_on_classes(const FiniteAlgebra& a, const Partition& theta, const Term& p,
                           const std::vector<std::string>& vars = {"x", "y", "z"});

// Realizes a band (idempotent semigroup given by its n x n table) as an
// algebra of signature `sig`: unary symbols act as the identity, an n-ary
// symbol as the left-associated product of its arguments.
FiniteAlgebra band_algebra_from(const std::vector<Element>& band_table, std::size_t n,
                                const Signature& sig);

}  // namespace malcev
