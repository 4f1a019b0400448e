#include "malcev/presets.hpp"

#include <algorithm>
#include <set>

#include "malcev/error.hpp"
#include "malcev/fixtures.hpp"
#include "malcev/words.hpp"

namespace malcev::presets {

namespace {

Term var(const std::string& name) { return Term::variable(name); }
Term app(const std::string& sym, std::vector<Term> kids) { return Term::apply(sym, std::move(kids)); }
Identity eq(Term l, Term r) { return {std::move(l), std::move(r)}; }

const Term& X() {
  static const Term t = var("x");
  return t;
}
const Term& Y() {
  static const Term t = var("y");
  return t;
}
const Term& Z() {
  static const Term t = var("z");
  return t;
}

}  // namespace

Signature groupoid_signature() { return Signature({{"·", 2}}); }
Signature group_signature() { return Signature({{"·", 2}, {"inv", 1}}); }
Signature lattice_signature() { return Signature({{"+", 2}, {"·", 2}}); }
Signature boolean_signature() { return Signature({{"+", 2}, {"·", 2}, {"'", 1}}); }
Signature quasigroup_signature() { return Signature({{"·", 2}, {"/", 2}, {"\\", 2}}); }
Signature monounary_signature() { return Signature({{"u", 1}}); }

// ---------------------------------------------------------------------------
// Band family

namespace {

enum class BandKind { semilattice, left_zero, right_zero, rectangular, band };

const char* band_name(BandKind k) {
  switch (k) {
    case BandKind::semilattice: return "S";
    case BandKind::left_zero: return "LZ";
    case BandKind::right_zero: return "RZ";
    case BandKind::rectangular: return "RB";
    case BandKind::band: return "B";
  }
  return "";
}

std::string band_key(BandKind kind, const Term& t) {
  Word w = band_word(t);
  switch (kind) {
    case BandKind::semilattice: {
      std::set<std::string> content(w.begin(), w.end());
      std::string out;
      for (const auto& v : content) out += v + ",";
      return out;
    }
    case BandKind::left_zero: return w.front();
    case BandKind::right_zero: return w.back();
    case BandKind::rectangular: return w.front() + "|" + w.back();
    case BandKind::band: {
      std::string out;
      for (const auto& v : free_band_normal_form(w)) out += v + ",";
      return out;
    }
  }
  return {};
}

// Binary product of the band realized in `sig`: p(x, y) = ω(x, y, ..., y)
// for the first symbol ω of arity >= 2.
struct BandProduct {
  std::string symbol;
  std::size_t arity;
  Term operator()(const Term& a, const Term& b) const {
    std::vector<Term> kids{a};
    for (std::size_t i = 1; i < arity; ++i) kids.push_back(b);
    return Term::apply(symbol, std::move(kids));
  }
};

BandProduct band_product(const Signature& sig) {
  for (const auto& op : sig.ops()) {
    if (op.arity >= 2) return {op.name, op.arity};
  }
  throw InvalidArgument("band varieties need a plural signature");
}

std::vector<Identity> band_base(BandKind kind, const Signature& sig) {
  const BandProduct p = band_product(sig);
  std::vector<Identity> base;
  auto add = [&](Identity id) {
    if (!(id.lhs == id.rhs)) base.push_back(std::move(id));
  };
  for (const auto& op : sig.ops()) {
    if (op.arity == 1) {
      add(eq(app(op.name, {X()}), X()));
      continue;
    }
    auto vars = pool_variables(op.arity);
    std::vector<Term> kids;
    for (const auto& v : vars) kids.push_back(var(v));
    Term product = kids[0];
    for (std::size_t i = 1; i < kids.size(); ++i) product = p(product, kids[i]);
    add(eq(app(op.name, kids), product));
  }
  add(eq(p(X(), X()), X()));
  add(eq(p(p(X(), Y()), Z()), p(X(), p(Y(), Z()))));
  switch (kind) {
    case BandKind::semilattice: add(eq(p(X(), Y()), p(Y(), X()))); break;
    case BandKind::left_zero: add(eq(p(X(), Y()), X())); break;
    case BandKind::right_zero: add(eq(p(X(), Y()), Y())); break;
    case BandKind::rectangular: add(eq(p(p(X(), Y()), Z()), p(X(), Z()))); break;
    case BandKind::band: break;
  }
  return base;
}

Signature plural_or_groupoid(const Signature& sig) {
  return sig.is_plural() ? sig : groupoid_signature();
}

VarietySpec band_family(BandKind kind, const Signature& sig) {
  VarietyDefinition def;
  def.name = band_name(kind);
  def.signature = sig;
  def.base = band_base(kind, sig);
  def.normal_key = [kind](const Term& t) { return band_key(kind, t); };
  def.idempotent = true;
  return VarietySpec(std::move(def));
}

}  // namespace

VarietySpec semilattices(const Signature& sig) { return band_family(BandKind::semilattice, sig); }
VarietySpec left_zero_bands(const Signature& sig) { return band_family(BandKind::left_zero, sig); }
VarietySpec right_zero_bands(const Signature& sig) { return band_family(BandKind::right_zero, sig); }
VarietySpec rectangular_bands(const Signature& sig) { return band_family(BandKind::rectangular, sig); }
VarietySpec bands(const Signature& sig) { return band_family(BandKind::band, sig); }

VarietySpec trivial_variety(const Signature& sig) {
  VarietyDefinition def;
  def.name = "trivial";
  def.signature = sig;
  def.base = std::vector<Identity>{eq(X(), Y())};
  def.normal_key = [](const Term&) { return std::string(); };
  def.idempotent = true;
  return VarietySpec(std::move(def));
}

VarietySpec all_algebras(const Signature& sig) {
  VarietyDefinition def;
  def.name = "all";
  def.signature = sig;
  def.base = std::vector<Identity>{};
  def.normal_key = [](const Term& t) { return format_term(t); };
  return VarietySpec(std::move(def));
}

// ---------------------------------------------------------------------------
// Groupoid presets

VarietySpec constant_semigroups() {
  VarietyDefinition def;
  def.name = "CS";
  def.signature = groupoid_signature();
  def.base = std::vector<Identity>{eq(app("·", {X(), Y()}), app("·", {Z(), var("t")}))};
  def.normal_key = [](const Term& t) { return t.is_variable() ? "var " + t.head() : std::string("*"); };
  return VarietySpec(std::move(def));
}

namespace {
std::string commutative_key(const Term& t) {
  if (t.is_variable()) return t.head();
  std::vector<std::string> kids;
  for (const auto& c : t.children()) kids.push_back(commutative_key(c));
  std::sort(kids.begin(), kids.end());
  std::string out = "(" + t.head();
  for (const auto& k : kids) out += " " + k;
  return out + ")";
}
}  // namespace

VarietySpec commutative_groupoids() {
  VarietyDefinition def;
  def.name = "comm";
  def.signature = groupoid_signature();
  def.base = std::vector<Identity>{eq(app("·", {X(), Y()}), app("·", {Y(), X()}))};
  def.normal_key = commutative_key;
  return VarietySpec(std::move(def));
}

// ---------------------------------------------------------------------------
// Groups

VarietySpec groups() {
  auto mul = [](Term a, Term b) { return app("·", {std::move(a), std::move(b)}); };
  auto inv = [](Term a) { return app("inv", {std::move(a)}); };
  const Term e = mul(X(), inv(X()));
  const Term f = mul(Y(), inv(Y()));
  VarietyDefinition def;
  def.name = "GP";
  def.signature = group_signature();
  def.base = std::vector<Identity>{
      eq(mul(mul(X(), Y()), Z()), mul(X(), mul(Y(), Z()))),
      eq(e, f),
      eq(mul(X(), f), X()),
      eq(mul(f, X()), X()),
      eq(mul(inv(X()), X()), f),
  };
  def.normal_key = [](const Term& t) { return format_group_word(free_group_reduce(t)); };
  return VarietySpec(std::move(def));
}

namespace {
std::vector<Identity> quasigroup_axioms() {
  auto mul = [](Term a, Term b) { return app("·", {std::move(a), std::move(b)}); };
  auto rdiv = [](Term a, Term b) { return app("/", {std::move(a), std::move(b)}); };
  auto ldiv = [](Term a, Term b) { return app("\\", {std::move(a), std::move(b)}); };
  return {
      eq(ldiv(X(), mul(X(), Y())), Y()),
      eq(rdiv(mul(X(), Y()), Y()), X()),
      eq(mul(X(), ldiv(X(), Y())), Y()),
      eq(mul(rdiv(X(), Y()), Y()), X()),
  };
}
}  // namespace

VarietySpec groups_with_divisions() {
  auto base = quasigroup_axioms();
  base.push_back(eq(app("·", {app("·", {X(), Y()}), Z()}), app("·", {X(), app("·", {Y(), Z()})})));
  VarietyDefinition def;
  def.name = "GP3";
  def.signature = quasigroup_signature();
  def.base = std::move(base);
  def.normal_key = [](const Term& t) {
    return format_group_word(free_group_reduce(t, GroupSyntax{"·", "", "/", "\\"}));
  };
  return VarietySpec(std::move(def));
}

VarietySpec regularized(const VarietySpec& inner) {
  VarietyDefinition def;
  def.name = "reg(" + inner.name() + ")";
  def.signature = inner.signature();
  def.strength = inner.strength();
  def.idempotent = inner.is_idempotent();
  def.decision = [inner](const Identity& id) { return is_regular(id) && inner.models(id); };
  if (inner.has_normal_key()) {
    def.normal_key = [inner](const Term& t) {
      std::string out = inner.key(t) + "|";
      for (const auto& v : variables_of(t).variables) out += v + ",";
      return out;
    };
  }
  return VarietySpec(std::move(def));
}

// ---------------------------------------------------------------------------
// Lattices and Boolean algebras

namespace {
std::vector<Identity> lattice_axioms() {
  auto j = [](Term a, Term b) { return app("+", {std::move(a), std::move(b)}); };
  auto m = [](Term a, Term b) { return app("·", {std::move(a), std::move(b)}); };
  return {
      eq(j(X(), Y()), j(Y(), X())),
      eq(m(X(), Y()), m(Y(), X())),
      eq(j(j(X(), Y()), Z()), j(X(), j(Y(), Z()))),
      eq(m(m(X(), Y()), Z()), m(X(), m(Y(), Z()))),
      eq(j(X(), m(X(), Y())), X()),
      eq(m(X(), j(X(), Y())), X()),
  };
}
}  // namespace

VarietySpec lattices() {
  VarietyDefinition def;
  def.name = "L";
  def.signature = lattice_signature();
  def.base = lattice_axioms();
  def.decision = [](const Identity& id) { return whitman_leq(id.lhs, id.rhs) && whitman_leq(id.rhs, id.lhs); };
  def.idempotent = true;
  return VarietySpec(std::move(def));
}

namespace {
// Key of the term operation of `t` on `a`, restricted to its essential
// variables: equal keys iff `a` satisfies the identity between the terms.
std::string term_function_key(const FiniteAlgebra& a, const Term& t) {
  auto vars_set = variables_of(t).variables;
  std::vector<std::string> vars(vars_set.begin(), vars_set.end());
  CompiledTerm ct(t, a.signature(), vars);
  const std::size_t k = vars.size();
  const auto n = static_cast<Element>(a.size());
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= n;
  std::vector<Element> table(count);
  std::vector<Element> values(k);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t c = idx;
    for (std::size_t i = k; i-- > 0;) {
      values[i] = static_cast<Element>(c % n);
      c /= n;
    }
    table[idx] = ct(a, values);
  }
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * n;
  std::vector<bool> essential(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t idx = 0; idx < count && !essential[i]; ++idx) {
      std::size_t digit = (idx / stride[i]) % n;
      if (digit != 0) continue;
      for (std::size_t d = 1; d < n; ++d) {
        if (table[idx + d * stride[i]] != table[idx]) {
          essential[i] = true;
          break;
        }
      }
    }
  }
  std::string key;
  for (std::size_t i = 0; i < k; ++i) {
    if (essential[i]) key += vars[i] + ",";
  }
  key += ":";
  // Entries with every non-essential variable fixed to 0.
  for (std::size_t idx = 0; idx < count; ++idx) {
    bool keep = true;
    for (std::size_t i = 0; i < k && keep; ++i) {
      if (!essential[i] && (idx / stride[i]) % n != 0) keep = false;
    }
    if (keep) key += std::to_string(table[idx]) + " ";
  }
  return key;
}
}  // namespace

VarietySpec generated_by(const FiniteAlgebra& a, std::string name) {
  VarietyDefinition def;
  def.name = std::move(name);
  def.signature = a.signature();
  def.decision = [a](const Identity& id) { return satisfies(a, id); };
  def.normal_key = [a](const Term& t) { return term_function_key(a, t); };
  def.idempotent = std::all_of(a.signature().ops().begin(), a.signature().ops().end(), [&](const OpSymbol& op) {
    return satisfies(a, {Term::apply(op.name, std::vector<Term>(op.arity, X())), X()});
  });
  return VarietySpec(std::move(def));
}

VarietySpec boolean_algebras() {
  auto j = [](Term a, Term b) { return app("+", {std::move(a), std::move(b)}); };
  auto m = [](Term a, Term b) { return app("·", {std::move(a), std::move(b)}); };
  auto c = [](Term a) { return app("'", {std::move(a)}); };
  auto base = lattice_axioms();
  base.push_back(eq(m(X(), j(Y(), Z())), j(m(X(), Y()), m(X(), Z()))));
  base.push_back(eq(m(X(), c(X())), m(Y(), c(Y()))));
  base.push_back(eq(j(X(), c(X())), j(Y(), c(Y()))));
  base.push_back(eq(j(X(), m(Y(), c(Y()))), X()));
  base.push_back(eq(m(X(), j(Y(), c(Y()))), X()));
  const FiniteAlgebra two = fixtures::boolean_two();
  VarietyDefinition def;
  def.name = "BA";
  def.signature = boolean_signature();
  def.base = std::move(base);
  def.decision = [two](const Identity& id) { return satisfies(two, id); };
  def.normal_key = [two](const Term& t) { return term_function_key(two, t); };
  return VarietySpec(std::move(def));
}

// ---------------------------------------------------------------------------
// Quasigroups and loops

namespace {
const std::string kUnit = "1";  // not a valid variable name, so never user input

bool is_unit(const Term& t) { return t.is_variable() && t.head() == kUnit; }

Term rewrite_root(const Term& t, bool with_unit) {
  if (t.is_variable()) return t;
  const auto& h = t.head();
  const Term& a = t.child(0);
  const Term& b = t.child(1);
  if (h == "\\") {
    if (!b.is_variable() && b.head() == "·" && b.child(0) == a) return b.child(1);     // x\(x·y) = y
    if (!a.is_variable() && a.head() == "/" && a.child(0) == b) return a.child(1);     // (x/y)\x = y
    if (with_unit && a == b) return Term::variable(kUnit);                                 // x\x = 1
    if (with_unit && is_unit(a)) return b;                                                 // 1\x = x
  } else if (h == "/") {
    if (!a.is_variable() && a.head() == "·" && a.child(1) == b) return a.child(0);     // (x·y)/y = x
    if (!b.is_variable() && b.head() == "\\" && b.child(1) == a) return b.child(0);    // x/(y\x) = y
    if (with_unit && a == b) return Term::variable(kUnit);                                 // x/x = 1
    if (with_unit && is_unit(b)) return a;                                                 // x/1 = x
  } else if (h == "·") {
    if (!b.is_variable() && b.head() == "\\" && b.child(0) == a) return b.child(1);    // x·(x\y) = y
    if (!a.is_variable() && a.head() == "/" && a.child(1) == b) return a.child(0);     // (x/y)·y = x
    if (with_unit && is_unit(a)) return b;
    if (with_unit && is_unit(b)) return a;
  }
  return t;
}
}  // namespace

Term quasigroup_normal_form(const Term& t, bool with_unit) {
  if (t.is_variable()) return t;
  std::vector<Term> kids;
  for (const auto& c : t.children()) kids.push_back(quasigroup_normal_form(c, with_unit));
  // Every rule returns a subterm of already normalized children (or the
  // unit), so one step at the root suffices.
  return rewrite_root(Term::apply(t.head(), std::move(kids)), with_unit);
}

VarietySpec quasigroups() {
  VarietyDefinition def;
  def.name = "QG";
  def.signature = quasigroup_signature();
  def.base = quasigroup_axioms();
  def.normal_key = [](const Term& t) { return format_term(quasigroup_normal_form(t, false)); };
  def.strength = OracleStrength::sound_only;
  return VarietySpec(std::move(def));
}

VarietySpec loops() {
  auto base = quasigroup_axioms();
  const Term one = app("/", {X(), X()});
  base.push_back(eq(one, app("\\", {Y(), Y()})));
  base.push_back(eq(app("·", {one, Y()}), Y()));
  base.push_back(eq(app("·", {Y(), one}), Y()));
  VarietyDefinition def;
  def.name = "LOOP";
  def.signature = quasigroup_signature();
  def.base = std::move(base);
  def.normal_key = [](const Term& t) { return format_term(quasigroup_normal_form(t, true)); };
  def.strength = OracleStrength::sound_only;
  return VarietySpec(std::move(def));
}

// ---------------------------------------------------------------------------
// Monounary

namespace {
struct Power {
  std::size_t exponent = 0;
  std::string variable;
};

Power power_of(const Term& t) {
  Power p;
  const Term* cur = &t;
  while (!cur->is_variable()) {
    if (cur->head() != "u" || cur->children().size() != 1) {
      throw SignatureMismatch("'" + cur->head() + "' is not the monounary symbol u");
    }
    ++p.exponent;
    cur = &cur->child(0);
  }
  p.variable = cur->head();
  return p;
}

Term power(std::size_t m, const Term& x) {
  Term t = x;
  for (std::size_t i = 0; i < m; ++i) t = app("u", {t});
  return t;
}
}  // namespace

VarietySpec monounary_collapse(std::size_t k) {
  VarietyDefinition def;
  def.name = "U" + std::to_string(k);
  def.signature = monounary_signature();
  def.base = std::vector<Identity>{eq(power(k, X()), power(k, Y()))};
  def.normal_key = [k](const Term& t) {
    auto p = power_of(t);
    if (p.exponent >= k) return std::string("*");
    return p.variable + "^" + std::to_string(p.exponent);
  };
  def.idempotent = k == 0;
  return VarietySpec(std::move(def));
}

VarietySpec monounary_cycle(std::size_t n, std::size_t k) {
  if (n == 0) throw InvalidArgument("U_{n,k} needs n >= 1");
  VarietyDefinition def;
  def.name = "U" + std::to_string(n) + "," + std::to_string(k);
  def.signature = monounary_signature();
  def.base = std::vector<Identity>{eq(power(n + k, X()), power(k, X()))};
  def.normal_key = [n, k](const Term& t) {
    auto p = power_of(t);
    std::size_t e = p.exponent < k ? p.exponent : k + (p.exponent - k) % n;
    return p.variable + "^" + std::to_string(e);
  };
  def.idempotent = n == 1 && k == 0;
  return VarietySpec(std::move(def));
}

// ---------------------------------------------------------------------------

VarietySpec from_base(std::string name, Signature sig, std::vector<Identity> base) {
  VarietyDefinition def;
  def.name = std::move(name);
  def.signature = std::move(sig);
  def.base = std::move(base);
  return VarietySpec(std::move(def));
}

VarietySpec from_base_generated_by(std::string name, std::vector<Identity> base, const FiniteAlgebra& a) {
  for (const auto& id : base) {
    if (!satisfies(a, id)) {
      throw InvalidArgument("generating algebra violates base identity " + format_identity(id));
    }
  }
  VarietySpec generated = generated_by(a, name);
  VarietyDefinition def;
  def.name = std::move(name);
  def.signature = a.signature();
  def.base = std::move(base);
  def.decision = [generated](const Identity& id) { return generated.models(id); };
  def.normal_key = [generated](const Term& t) { return generated.key(t); };
  return VarietySpec(std::move(def));
}

std::vector<PresetInfo> preset_list() {
  return {
      {"S", "semilattices (any plural signature)"},
      {"LZ", "left-zero bands (any plural signature)"},
      {"RZ", "right-zero bands (any plural signature)"},
      {"RB", "rectangular bands (any plural signature)"},
      {"B", "bands (any plural signature)"},
      {"trivial", "one-element algebras"},
      {"all", "all algebras of the signature"},
      {"CS", "constant semigroups x·y = z·t"},
      {"comm", "commutative groupoids x·y = y·x"},
      {"GP", "groups as (·, inv)"},
      {"GP3", "groups as (·, /, \\)"},
      {"regGP", "regularization of GP"},
      {"L", "lattices as (+, ·)"},
      {"BA", "Boolean algebras as (+, ·, ')"},
      {"QG", "quasigroups as (·, /, \\), sound-only oracle"},
      {"LOOP", "loops as (·, /, \\), sound-only oracle"},
      {"U<k>", "monounary u^k(x) = u^k(y)"},
      {"U<n>,<k>", "monounary u^(n+k)(x) = u^k(x)"},
      {"reg(<name>)", "regularization of another preset"},
  };
}

VarietySpec make_preset(const std::string& name, const Signature& context) {
  const Signature band_sig = plural_or_groupoid(context);
  if (name == "S") return semilattices(band_sig);
  if (name == "LZ") return left_zero_bands(band_sig);
  if (name == "RZ") return right_zero_bands(band_sig);
  if (name == "RB") return rectangular_bands(band_sig);
  if (name == "B") return bands(band_sig);
  if (name == "trivial") return trivial_variety(context.op_count() ? context : groupoid_signature());
  if (name == "all") return all_algebras(context.op_count() ? context : groupoid_signature());
  if (name == "CS") return constant_semigroups();
  if (name == "comm") return commutative_groupoids();
  if (name == "GP") return groups();
  if (name == "GP3") return groups_with_divisions();
  if (name == "regGP") return regularized(groups());
  if (name == "L") return lattices();
  if (name == "BA") return boolean_algebras();
  if (name == "QG") return quasigroups();
  if (name == "LOOP") return loops();
  if (name.size() > 5 && name.starts_with("reg(") && name.back() == ')') {
    return regularized(make_preset(name.substr(4, name.size() - 5), context));
  }
  if (name.size() >= 2 && name[0] == 'U') {
    auto rest = name.substr(1);
    auto comma = rest.find(',');
    try {
      if (comma == std::string::npos) {
        std::size_t used = 0;
        auto k = std::stoul(rest, &used);
        if (used == rest.size()) return monounary_collapse(k);
      } else {
        auto n = std::stoul(rest.substr(0, comma));
        auto k = std::stoul(rest.substr(comma + 1));
        return monounary_cycle(n, k);
      }
    } catch (const std::logic_error&) {
      // fall through to the unknown-name error
    }
  }
  throw InvalidArgument("unknown variety preset '" + name + "'");
}

}  // namespace malcev::presets
