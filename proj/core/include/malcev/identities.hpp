#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/variety.hpp"

namespace malcev {

struct SigmaPConfig {
  std::size_t pool = 2;            // substitution variables x, y, ...
  std::size_t max_term_size = 4;   // nodes per substituted term
  std::size_t max_results = 1000;
  bool dedup = true;
};

// Prefix of Σ^p for a base ΣV of V and a variety W. Terms over the pool up to
// `max_term_size` are sorted (TermOrder), split into W-classes (by normal
// key, else pairwise decision) and, unless W is idempotent, restricted to
// classes of term idempotents. Each σ ∈ ΣV with k variables is then
// instantiated by every k-tuple drawn from one class, in the order: σ, class
// (by least member), tuple (lexicographic over the class members).
class SigmaPStream {
 public:
  // Throws MissingPresentation if W has neither decision nor normal form and
  // SignatureMismatch if an identity is not over W's signature.
  SigmaPStream(std::vector<Identity> sigma_v, const VarietySpec& w, SigmaPConfig cfg);

  std::optional<Identity> next();

  // W-classes used for substitution, each sorted by TermOrder.
  const std::vector<std::vector<Term>>& classes() const { return classes_; }

 private:
  bool advance();

  std::vector<Identity> sigma_;
  std::vector<std::vector<std::string>> sigma_vars_;
  std::vector<std::vector<Term>> classes_;
  SigmaPConfig cfg_;
  std::size_t emitted_ = 0;
  std::size_t sigma_index_ = 0;
  std::size_t class_index_ = 0;
  std::vector<std::size_t> tuple_;
  bool started_ = false;
  bool done_ = false;
  std::unordered_set<std::string> seen_;
};

std::vector<Identity> sigma_p_generate(const std::vector<Identity>& sigma_v, const VarietySpec& w,
                                       const SigmaPConfig& cfg);

struct SatisfactionEntry {
  Identity identity;
  bool holds = true;
  Assignment witness;  // first failing assignment
};
struct SatisfactionReport {
  bool all_hold = true;
  std::vector<SatisfactionEntry> entries;
};
// Throws SignatureMismatch when an identity is not over `a`'s signature.
SatisfactionReport sigma_p_holds_in(const FiniteAlgebra& a, const std::vector<Identity>& ids);

enum class WitnessStatus { verified, candidate_sound_only, refuted };
std::string to_string(WitnessStatus s);

struct ConditionCheck {
  std::string name;     // "V |= f = x", "V |= g = y", "W |= f = g"
  Identity identity;
  bool holds = false;
  OracleStrength strength = OracleStrength::complete;
};

struct FGWitness {
  Term f;
  Term g;
  WitnessStatus status = WitnessStatus::refuted;
  std::vector<ConditionCheck> checks;
};

// Evaluates V ⊨ f(x,y) = x, V ⊨ g(x,y) = y and W ⊨ f = g. Status: refuted
// if a check answers false; otherwise verified when both oracles are
// complete, candidate-sound-only when one is sound-only. Throws
// InvalidArgument if f or g uses a variable other than x, y and
// SignatureMismatch if V and W differ in signature.
FGWitness fg_verify(const VarietySpec& v, const VarietySpec& w, const Term& f, const Term& g);

// Least pair (f, g) of terms over {x, y} with at most `max_size` nodes each
// satisfying all three conditions, ordered by size(f) + size(g), then f, then
// g under TermOrder.
std::optional<FGWitness> fg_search(const VarietySpec& v, const VarietySpec& w, std::size_t max_size);

// Both band words contain x and y, start with the same variable and end with
// the same variable.
bool bands_fg_shortcut(const Term& f, const Term& g);

// For a strongly irregular identity t(x,y) = x (either orientation; the
// variable side is renamed to x and the other variable to y) returns
// f = t(x,y), g = t(y,x). Nullopt when the identity is not of that shape.
std::optional<std::pair<Term, Term>> strongly_irregular_pair(const Identity& id);

}  // namespace malcev
