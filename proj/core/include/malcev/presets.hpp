#pragma once

#include <string>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/variety.hpp"

namespace malcev::presets {

Signature groupoid_signature();    // ·/2
Signature group_signature();       // ·/2 inv/1
Signature lattice_signature();     // +/2 ·/2
Signature boolean_signature();     // +/2 ·/2 '/1
Signature quasigroup_signature();  // ·/2 //2 \/2
Signature monounary_signature();   // u/1

// Band varieties realized in a plural signature: an n-ary symbol acts as the
// product of its arguments, a unary one as the identity. Decided through the
// band word of a term.
VarietySpec semilattices(const Signature& sig = groupoid_signature());
VarietySpec left_zero_bands(const Signature& sig = groupoid_signature());
VarietySpec right_zero_bands(const Signature& sig = groupoid_signature());
VarietySpec rectangular_bands(const Signature& sig = groupoid_signature());
VarietySpec bands(const Signature& sig = groupoid_signature());

VarietySpec trivial_variety(const Signature& sig = groupoid_signature());
// Every algebra of the signature: only syntactically equal terms are equal.
VarietySpec all_algebras(const Signature& sig = groupoid_signature());

// x·y = z·t. Equal iff the same variable or both non-variables.
VarietySpec constant_semigroups();
VarietySpec commutative_groupoids();

// Groups as (·, inv), decided by free reduction.
VarietySpec groups();
// Groups as (·, /, \) with x/y = x·y⁻¹ and x\y = x⁻¹·y.
VarietySpec groups_with_divisions();
// Identities of `inner` whose sides have equal variable sets.
VarietySpec regularized(const VarietySpec& inner);

// Lattices as (+, ·), decided by Whitman's algorithm.
VarietySpec lattices();
// Boolean algebras as (+, ·, '), decided by evaluation in the 2-element
// algebra.
VarietySpec boolean_algebras();

// Quasigroups / loops as (·, /, \), decided by normal forms of the oriented
// axioms. Sound only.
VarietySpec quasigroups();
VarietySpec loops();
// Normal form used by the quasigroup oracle; `with_unit` adds the loop rules.
Term quasigroup_normal_form(const Term& t, bool with_unit);

// u^k(x) = u^k(y).
VarietySpec monounary_collapse(std::size_t k);
// u^{n+k}(x) = u^k(x), n >= 1.
VarietySpec monounary_cycle(std::size_t n, std::size_t k);

// Variety generated by a finite algebra: W ⊨ s = t iff A ⊨ s = t.
VarietySpec generated_by(const FiniteAlgebra& a, std::string name);
// Base-only variety (no decision procedure).
VarietySpec from_base(std::string name, Signature sig, std::vector<Identity> base);
// Base plus the decision procedure of the variety generated by `a`.
VarietySpec from_base_generated_by(std::string name, std::vector<Identity> base, const FiniteAlgebra& a);

struct PresetInfo {
  std::string name;
  std::string description;
};
std::vector<PresetInfo> preset_list();

// Resolves a preset name. Band-family presets (S, LZ, RZ, RB, B, trivial,
// all) are realized over `context` when it is plural, else over the groupoid
// signature. Accepts `U<k>`, `U<n>,<k>` and `reg(<name>)`. Throws
// InvalidArgument for unknown names.
VarietySpec make_preset(const std::string& name, const Signature& context = {});

}  // namespace malcev::presets
