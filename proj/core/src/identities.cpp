#include "malcev/identities.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "malcev/error.hpp"
#include "malcev/words.hpp"

namespace malcev {

namespace {

std::vector<std::vector<Term>> w_classes(const std::vector<Term>& terms, const VarietySpec& w) {
  std::vector<std::vector<Term>> classes;
  if (w.has_normal_key()) {
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& t : terms) {
      auto [it, fresh] = index.try_emplace(w.key(t), classes.size());
      if (fresh) classes.emplace_back();
      classes[it->second].push_back(t);
    }
    return classes;
  }
  for (const auto& t : terms) {
    auto hit = std::find_if(classes.begin(), classes.end(),
                            [&](const std::vector<Term>& c) { return w.models({c.front(), t}); });
    if (hit == classes.end()) {
      classes.push_back({t});
    } else {
      hit->push_back(t);
    }
  }
  return classes;
}

}  // namespace

SigmaPStream::SigmaPStream(std::vector<Identity> sigma_v, const VarietySpec& w, SigmaPConfig cfg)
    : sigma_(std::move(sigma_v)), cfg_(cfg) {
  if (cfg_.pool == 0 || cfg_.max_term_size == 0 || cfg_.max_results == 0) {
    throw InvalidArgument("Σ^p bounds must be positive");
  }
  if (!w.has_decision() && !w.has_normal_key()) {
    throw MissingPresentation("variety '" + w.name() + "' has no decision procedure");
  }
  for (const auto& id : sigma_) {
    check_identity(id, w.signature());
    sigma_vars_.push_back(variable_sequence(id));
  }
  auto terms = enumerate_terms(w.signature(), pool_variables(cfg_.pool), cfg_.max_term_size);
  for (auto& c : w_classes(terms, w)) {
    if (w.is_idempotent() || is_term_idempotent(w, c.front())) classes_.push_back(std::move(c));
  }
  done_ = classes_.empty() || sigma_.empty();
}

// Moves to the next (σ, class, tuple) position; false when exhausted.
bool SigmaPStream::advance() {
  if (!started_) {
    started_ = true;
    tuple_.assign(sigma_vars_[0].size(), 0);
    return true;
  }
  const std::size_t m = classes_[class_index_].size();
  for (std::size_t i = tuple_.size(); i-- > 0;) {
    if (++tuple_[i] < m) return true;
    tuple_[i] = 0;
  }
  if (++class_index_ < classes_.size()) return true;
  class_index_ = 0;
  if (++sigma_index_ < sigma_.size()) {
    tuple_.assign(sigma_vars_[sigma_index_].size(), 0);
    return true;
  }
  return false;
}

std::optional<Identity> SigmaPStream::next() {
  while (!done_ && emitted_ < cfg_.max_results) {
    if (!advance()) {
      done_ = true;
      break;
    }
    const auto& vars = sigma_vars_[sigma_index_];
    const auto& cls = classes_[class_index_];
    Substitution s;
    for (std::size_t i = 0; i < vars.size(); ++i) s.insert_or_assign(vars[i], cls[tuple_[i]]);
    const Identity& sigma = sigma_[sigma_index_];
    Identity out{substitute(sigma.lhs, s), substitute(sigma.rhs, s)};
    if (cfg_.dedup && !seen_.insert(format_identity(out)).second) continue;
    ++emitted_;
    return out;
  }
  return std::nullopt;
}

std::vector<Identity> sigma_p_generate(const std::vector<Identity>& sigma_v, const VarietySpec& w,
                                       const SigmaPConfig& cfg) {
  SigmaPStream stream(sigma_v, w, cfg);
  std::vector<Identity> out;
  while (auto id = stream.next()) out.push_back(std::move(*id));
  return out;
}

SatisfactionReport sigma_p_holds_in(const FiniteAlgebra& a, const std::vector<Identity>& ids) {
  SatisfactionReport report;
  for (const auto& id : ids) {
    check_identity(id, a.signature());
    SatisfactionEntry e{id, true, {}};
    if (auto cex = find_counterexample(a, id)) {
      e.holds = false;
      e.witness = std::move(*cex);
      report.all_hold = false;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::verified: return "verified";
    case WitnessStatus::candidate_sound_only: return "candidate-sound-only";
    case WitnessStatus::refuted: return "refuted";
  }
  return "";
}

namespace {

void require_binary(const Term& t) {
  for (const auto& v : variables_of(t).variables) {
    if (v != "x" && v != "y") throw InvalidArgument("'" + format_term(t) + "' is not a term in x, y");
  }
}

}  // namespace

FGWitness fg_verify(const VarietySpec& v, const VarietySpec& w, const Term& f, const Term& g) {
  if (!(v.signature() == w.signature())) {
    throw SignatureMismatch("varieties '" + v.name() + "' and '" + w.name() + "' differ in signature");
  }
  require_binary(f);
  require_binary(g);
  check_term(f, v.signature());
  check_term(g, v.signature());
  const Term x = Term::variable("x");
  const Term y = Term::variable("y");
  FGWitness out{f, g, WitnessStatus::verified, {}};
  out.checks.push_back({"V |= f = x", {f, x}, v.models({f, x}), v.strength()});
  out.checks.push_back({"V |= g = y", {g, y}, v.models({g, y}), v.strength()});
  out.checks.push_back({"W |= f = g", {f, g}, w.models({f, g}), w.strength()});
  for (const auto& c : out.checks) {
    if (!c.holds) {
      out.status = WitnessStatus::refuted;
      return out;
    }
    if (c.strength == OracleStrength::sound_only) out.status = WitnessStatus::candidate_sound_only;
  }
  return out;
}

std::optional<FGWitness> fg_search(const VarietySpec& v, const VarietySpec& w, std::size_t max_size) {
  if (!(v.signature() == w.signature())) {
    throw SignatureMismatch("varieties '" + v.name() + "' and '" + w.name() + "' differ in signature");
  }
  if ((!v.has_decision() && !v.has_normal_key()) || (!w.has_decision() && !w.has_normal_key())) {
    throw MissingPresentation("f/g search needs decision procedures for both varieties");
  }
  const Term x = Term::variable("x");
  const Term y = Term::variable("y");
  auto terms = enumerate_terms(v.signature(), {"x", "y"}, max_size);
  // Candidates for f and g, grouped by size, each in TermOrder.
  std::map<std::size_t, std::vector<Term>> fs;
  std::map<std::size_t, std::vector<Term>> gs;
  for (const auto& t : terms) {
    if (v.models({t, x})) fs[t.size()].push_back(t);
    if (v.models({t, y})) gs[t.size()].push_back(t);
  }
  std::unordered_map<Term, std::string, TermHash> keys;
  auto w_equal = [&](const Term& f, const Term& g) {
    if (!w.has_normal_key()) return w.models({f, g});
    auto key = [&](const Term& t) -> const std::string& {
      auto it = keys.find(t);
      if (it == keys.end()) it = keys.emplace(t, w.key(t)).first;
      return it->second;
    };
    return key(f) == key(g);
  };
  for (std::size_t total = 2; total <= 2 * max_size; ++total) {
    for (const auto& [fsize, flist] : fs) {
      if (fsize >= total) break;
      auto git = gs.find(total - fsize);
      if (git == gs.end()) continue;
      for (const auto& f : flist) {
        for (const auto& g : git->second) {
          if (w_equal(f, g)) return fg_verify(v, w, f, g);
        }
      }
    }
  }
  return std::nullopt;
}

bool bands_fg_shortcut(const Term& f, const Term& g) {
  Word fw = band_word(f);
  Word gw = band_word(g);
  auto has_xy = [](const Word& w) {
    return std::find(w.begin(), w.end(), "x") != w.end() && std::find(w.begin(), w.end(), "y") != w.end();
  };
  return has_xy(fw) && has_xy(gw) && fw.front() == gw.front() && fw.back() == gw.back();
}

std::optional<std::pair<Term, Term>> strongly_irregular_pair(const Identity& id) {
  const Term* var_side = &id.rhs;
  const Term* t = &id.lhs;
  if (!var_side->is_variable()) std::swap(var_side, t);
  if (!var_side->is_variable() || t->is_variable()) return std::nullopt;
  auto vars = variables_of(*t).variables;
  if (vars.size() != 2 || !vars.contains(var_side->head())) return std::nullopt;
  vars.erase(var_side->head());
  const std::string other = *vars.begin();
  const Term x = Term::variable("x");
  const Term y = Term::variable("y");
  Term f = substitute(*t, {{var_side->head(), x}, {other, y}});
  Term g = substitute(*t, {{var_side->head(), y}, {other, x}});
  return std::make_pair(std::move(f), std::move(g));
}

}  // namespace malcev
