#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/congruence.hpp"
#include "malcev/partition.hpp"
#include "malcev/variety.hpp"

namespace malcev {

// Least congruence of `a` whose quotient satisfies W.base: generated by the
// pairs (p(d), q(d)) over every base identity p = q and assignment d.
Partition replica_congruence(const FiniteAlgebra& a, const VarietySpec& w);

enum class Verdict { member, non_member };
std::string to_string(Verdict v);

struct BlockRecord {
  std::vector<Element> elements;
  bool is_subalgebra = false;
  bool checked_against_v = false;
  // First V-base identity failing on the block, with an assignment in the
  // elements of `a`.
  std::optional<Identity> failing_identity;
  Assignment failing_assignment;
};

struct MembershipReport {
  Verdict verdict = Verdict::member;
  Partition replica;
  std::vector<BlockRecord> blocks;
  // Set by relative_member only.
  bool relative = false;
  std::optional<Identity> k_failing_identity;
  Assignment k_failing_assignment;
};

// A ∈ V ∘ W: every replica block that is a subuniverse satisfies V.base.
// Throws SignatureMismatch if the signatures differ, MissingPresentation
// without bases, and InvalidArgument when W is flagged idempotent but a
// block is not a subuniverse.
MembershipReport maltsev_member(const FiniteAlgebra& a, const VarietySpec& v, const VarietySpec& w);
// A ∈ V ∘_K W: A ⊨ K.base and A ∈ V ∘ W.
MembershipReport relative_member(const FiniteAlgebra& a, const VarietySpec& v, const VarietySpec& w,
                                 const VarietySpec& k);

struct WSum {
  Partition replica;
  std::vector<Subalgebra> blocks;
  Quotient quotient;
};
// Blocks of the replica congruence together with the replica. Requires W to
// be idempotent; throws InvalidArgument if a block is not a subuniverse.
WSum w_sum_decomposition(const FiniteAlgebra& a, const VarietySpec& w);

struct ProbeFailure {
  Partition theta;
  MembershipReport report;  // for quotient(a, theta)
};
// Every congruence θ with A/θ ∉ V ∘ W, in congruence order. Requires
// A ∈ V ∘ W (InvalidArgument otherwise).
std::vector<ProbeFailure> h_closure_probe(const FiniteAlgebra& a, const VarietySpec& v, const VarietySpec& w,
                                          std::size_t guard = kDefaultCongruenceGuard);

// Line-oriented report:
//   verdict: member
//   replica: {{0,1},{2,3}}
//   block {0,1}: subalgebra, V holds
std::string format_report(const MembershipReport& r);
// The same content as a JSON object.
std::string report_json(const MembershipReport& r);

}  // namespace malcev
