#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "malcev/term.hpp"

namespace malcev {

enum class OracleStrength {
  complete,    // decides W ⊨ s = t exactly
  sound_only,  // a `true` answer is a proof; `false` may be wrong
};

std::string to_string(OracleStrength s);

struct VarietyDefinition {
  std::string name;
  Signature signature;
  std::optional<std::vector<Identity>> base;
  // W ⊨ id. May be empty when `normal_key` is given (keys are compared) or
  // when the variety is known only through its base.
  std::function<bool(const Identity&)> decision;
  // Canonical key per term: W ⊨ s = t iff key(s) == key(t) (for sound-only
  // oracles, equal keys still imply W ⊨ s = t).
  std::function<std::string(const Term&)> normal_key;
  OracleStrength strength = OracleStrength::complete;
  bool idempotent = false;
};

// A variety given by a finite equational base and/or a decision procedure.
// Construction validates the idempotence claim: with a decision procedure
// every ω(x,...,x) = x must be decided true; with only a base, each such law
// must appear in it verbatim (up to renaming and orientation).
class VarietySpec {
 public:
  explicit VarietySpec(VarietyDefinition def);

  const std::string& name() const { return def_.name; }
  const Signature& signature() const { return def_.signature; }
  bool has_base() const { return def_.base.has_value(); }
  // Throws MissingPresentation when there is no base.
  const std::vector<Identity>& base() const;
  bool has_decision() const { return static_cast<bool>(def_.decision); }
  bool has_normal_key() const { return static_cast<bool>(def_.normal_key); }
  OracleStrength strength() const { return def_.strength; }
  bool is_idempotent() const { return def_.idempotent; }

  // Throws MissingPresentation without a decision procedure and
  // SignatureMismatch when `id` is not over this signature.
  bool models(const Identity& id) const;
  // Throws MissingPresentation when no normal key is available.
  std::string key(const Term& t) const;

 private:
  VarietyDefinition def_;
};

bool models(const VarietySpec& w, const Identity& id);

// W ⊨ ω(t, ..., t) = t for every symbol ω.
bool is_term_idempotent(const VarietySpec& w, const Term& t);
// Smallest unary term (variable x) that is a term idempotent, within
// `max_size` nodes, under TermOrder.
std::optional<Term> find_term_idempotent(const VarietySpec& w, std::size_t max_size);
// Smallest unary term idempotent t with W ⊨ t(x) = t(y).
std::optional<Term> is_polarized(const VarietySpec& w, std::size_t max_size);

// s ≤ t in the free lattice (Whitman's conditions).
bool whitman_leq(const Term& s, const Term& t, const std::string& join = "+",
                 const std::string& meet = "·");

}  // namespace malcev
