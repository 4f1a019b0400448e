#include "malcev/variety.hpp"

#include "malcev/error.hpp"

namespace malcev {

std::string to_string(OracleStrength s) {
  return s == OracleStrength::complete ? "complete" : "sound-only";
}

namespace {

Term idempotent_law_lhs(const OpSymbol& op, const Term& t) {
  return Term::apply(op.name, std::vector<Term>(op.arity, t));
}

// ω(v, ..., v) = v for a single variable v, either orientation.
bool is_idempotent_law_for(const Identity& id, const OpSymbol& op) {
  auto matches = [&](const Term& app, const Term& var) {
    if (!var.is_variable() || app.is_variable() || app.head() != op.name) return false;
    for (const auto& c : app.children()) {
      if (!(c == var)) return false;
    }
    return true;
  };
  return matches(id.lhs, id.rhs) || matches(id.rhs, id.lhs);
}

}  // namespace

VarietySpec::VarietySpec(VarietyDefinition def) : def_(std::move(def)) {
  if (!def_.base && !def_.decision && !def_.normal_key) {
    throw InvalidArgument("variety '" + def_.name + "' needs a base or a decision procedure");
  }
  if (def_.base) {
    for (const auto& id : *def_.base) check_identity(id, def_.signature);
  }
  if (def_.idempotent) {
    const Term x = Term::variable("x");
    for (const auto& op : def_.signature.ops()) {
      if (has_decision() || has_normal_key()) {
        if (!models({idempotent_law_lhs(op, x), x})) {
          throw InvalidArgument("variety '" + def_.name + "' is flagged idempotent but '" + op.name +
                                "' is not idempotent");
        }
      } else {
        bool listed = false;
        for (const auto& id : *def_.base) listed = listed || is_idempotent_law_for(id, op);
        if (!listed) {
          throw InvalidArgument("variety '" + def_.name + "' is flagged idempotent but its base lacks " +
                                "the idempotent law for '" + op.name + "'");
        }
      }
    }
  }
}

const std::vector<Identity>& VarietySpec::base() const {
  if (!def_.base) throw MissingPresentation("variety '" + def_.name + "' has no equational base");
  return *def_.base;
}

bool VarietySpec::models(const Identity& id) const {
  check_identity(id, def_.signature);
  if (def_.decision) return def_.decision(id);
  if (def_.normal_key) return def_.normal_key(id.lhs) == def_.normal_key(id.rhs);
  throw MissingPresentation("variety '" + def_.name + "' has no decision procedure");
}

std::string VarietySpec::key(const Term& t) const {
  if (!def_.normal_key) throw MissingPresentation("variety '" + def_.name + "' has no normal form");
  return def_.normal_key(t);
}

bool models(const VarietySpec& w, const Identity& id) { return w.models(id); }

bool is_term_idempotent(const VarietySpec& w, const Term& t) {
  for (const auto& op : w.signature().ops()) {
    if (!w.models({idempotent_law_lhs(op, t), t})) return false;
  }
  return true;
}

std::optional<Term> find_term_idempotent(const VarietySpec& w, std::size_t max_size) {
  for (const auto& t : enumerate_terms(w.signature(), {"x"}, max_size)) {
    if (is_term_idempotent(w, t)) return t;
  }
  return std::nullopt;
}

std::optional<Term> is_polarized(const VarietySpec& w, std::size_t max_size) {
  const Substitution to_y{{"x", Term::variable("y")}};
  for (const auto& t : enumerate_terms(w.signature(), {"x"}, max_size)) {
    if (is_term_idempotent(w, t) && w.models({t, substitute(t, to_y)})) return t;
  }
  return std::nullopt;
}

bool whitman_leq(const Term& s, const Term& t, const std::string& join, const std::string& meet) {
  auto kind = [&](const Term& u) {
    if (u.is_variable()) return 0;
    if (u.head() == join && u.children().size() == 2) return 1;
    if (u.head() == meet && u.children().size() == 2) return 2;
    throw SignatureMismatch("'" + u.head() + "' is not a lattice operation");
  };
  const int ks = kind(s);
  const int kt = kind(t);
  if (ks == 1) return whitman_leq(s.child(0), t, join, meet) && whitman_leq(s.child(1), t, join, meet);
  if (kt == 2) return whitman_leq(s, t.child(0), join, meet) && whitman_leq(s, t.child(1), join, meet);
  if (ks == 0 && kt == 0) return s.head() == t.head();
  if (ks == 0) return whitman_leq(s, t.child(0), join, meet) || whitman_leq(s, t.child(1), join, meet);
  if (kt == 0) return whitman_leq(s.child(0), t, join, meet) || whitman_leq(s.child(1), t, join, meet);
  return whitman_leq(s.child(0), t, join, meet) || whitman_leq(s.child(1), t, join, meet) ||
         whitman_leq(s, t.child(0), join, meet) || whitman_leq(s, t.child(1), join, meet);
}

}  // namespace malcev
