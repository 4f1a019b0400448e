#include "paper_checks.hpp"

#include <algorithm>
#include <set>

#include "malcev/congruence.hpp"
#include "malcev/error.hpp"
#include "malcev/fixtures.hpp"
#include "malcev/identities.hpp"
#include "malcev/presets.hpp"
#include "malcev/replica.hpp"
#include "malcev/words.hpp"

namespace malcev::cli {

namespace {

CheckResult ok(std::string detail = {}) { return {true, std::move(detail)}; }
CheckResult fail(std::string detail) { return {false, std::move(detail)}; }

bool contains(const std::vector<Identity>& ids, const std::string& text, const Signature& sig) {
  Identity target = parse_identity(text, sig);
  return std::find(ids.begin(), ids.end(), target) != ids.end();
}


CheckResult verify_pair(const VarietySpec& v, const char* f, const char* g, bool allow_sound_only) {
  const VarietySpec w = presets::bands(v.signature());
  FGWitness r = fg_verify(v, w, parse_term(f, v.signature()), parse_term(g, v.signature()));
  std::string detail = to_string(r.status);
  if (r.status == WitnessStatus::verified) return ok(detail);
  if (allow_sound_only && r.status == WitnessStatus::candidate_sound_only) return ok(detail);
  return fail(detail);
}

}  // namespace

std::vector<PaperCheck> paper_checks(const FiniteAlgebra& a_in) {
  // Shared across the checks; copied into each closure.
  const FiniteAlgebra a = a_in;
  const Signature sig = presets::groupoid_signature();
  const Partition theta = Partition::from_blocks(4, {{0, 2}});

  std::vector<PaperCheck> checks;
  auto add = [&](std::string name, std::string anchor, std::function<CheckResult()> run) {
    checks.push_back({std::move(name), std::move(anchor), std::move(run)});
  };

  add("groupoid-replica", "four-element groupoid, LZ-replica classes {0,1} and {2,3}", [a] {
    auto rho = replica_congruence(a, presets::left_zero_bands());
    if (rho == parse_partition("{{0,1},{2,3}}", 4)) return ok(rho.to_string());
    return fail("replica is " + rho.to_string());
  });
  add("groupoid-blocks-semilattices", "four-element groupoid, replica classes are semilattices", [a] {
    auto rho = replica_congruence(a, presets::left_zero_bands());
    for (const auto& block : rho.blocks()) {
      if (!is_subuniverse(a, block)) return fail("block is not a subalgebra");
      auto sub = restrict_to(a, block);
      if (!satisfies_all(sub.algebra, presets::semilattices().base())) return fail("block is not a semilattice");
    }
    return ok();
  });
  add("groupoid-member", "four-element groupoid is in V ∘ LZ for commutative V", [a] {
    auto r = maltsev_member(a, presets::commutative_groupoids(), presets::left_zero_bands());
    return r.verdict == Verdict::member ? ok() : fail(format_report(r));
  });
  add("groupoid-quotient", "quotient by {{0,2},{1},{3}} is the three-element groupoid B", [a, theta] {
    if (!is_congruence(a, theta)) return fail("{{0,2},{1},{3}} is not a congruence");
    auto q = quotient(a, theta);
    return q.algebra == fixtures::groupoid_b() ? ok() : fail("quotient differs from B");
  });
  add("quotient-congruences", "B has exactly one proper nontrivial congruence {{0,2},{1}}", [a, theta] {
    if (!is_congruence(a, theta)) return fail("no quotient");
    auto b = quotient(a, theta).algebra;
    std::vector<Partition> proper;
    for (const auto& c : all_congruences(b)) {
      if (!c.is_discrete() && !c.is_total()) proper.push_back(c);
    }
    if (proper.size() == 1 && proper[0] == parse_partition("{{0,2},{1}}", 3)) return ok();
    return fail(std::to_string(proper.size()) + " proper nontrivial congruences");
  });
  add("quotient-non-member", "B is not in V ∘ LZ", [a, theta] {
    if (!is_congruence(a, theta)) return fail("no quotient");
    auto b = quotient(a, theta).algebra;
    auto r = maltsev_member(b, presets::commutative_groupoids(), presets::left_zero_bands());
    return r.verdict == Verdict::non_member ? ok() : fail("B reported as a member");
  });
  add("quotient-not-lz", "B/α is not a left-zero band", [a, theta] {
    if (!is_congruence(a, theta)) return fail("no quotient");
    auto b = quotient(a, theta).algebra;
    auto ba = quotient(b, parse_partition("{{0,2},{1}}", 3)).algebra;
    bool lz = satisfies_all(ba, presets::left_zero_bands().base());
    return lz ? fail("B/α satisfies x·y = x") : ok();
  });
  add("probe-finds-quotient", "H-closure probe of the groupoid finds {{0,2},{1},{3}}", [a, theta] {
    auto failures = h_closure_probe(a, presets::commutative_groupoids(), presets::left_zero_bands());
    bool found = std::any_of(failures.begin(), failures.end(), [&](const ProbeFailure& f) { return f.theta == theta; });
    return found ? ok(std::to_string(failures.size()) + " failing quotients") : fail("θ not reported");
  });
  add("relative-s-s-s", "S ∘_S S is S", [] {
    auto s = presets::semilattices();
    auto r = relative_member(fixtures::semilattice2(), s, s, s);
    return r.verdict == Verdict::member ? ok() : fail("SL2 not a member");
  });
  add("lz-first-variable", "LZ identities are decided by the first variable", [sig] {
    auto lz = presets::left_zero_bands();
    bool a1 = lz.models(parse_identity("(· x y) = (· x z)", sig));
    bool a2 = lz.models(parse_identity("(· x y) = (· y x)", sig));
    return a1 && !a2 ? ok() : fail("wrong LZ decisions");
  });
  add("sigma-p-semilattice", "Σ^p for x·y = x over S contains x·x = x and (x·y)·(y·x) = x·y", [sig] {
    auto ids = sigma_p_generate({parse_identity("(· x y) = x", sig)}, presets::semilattices(), {2, 4, 1000, true});
    if (!contains(ids, "(· x x) = x", sig)) return fail("missing x·x = x");
    if (!contains(ids, "(· (· x y) (· y x)) = (· x y)", sig)) return fail("missing (x·y)·(y·x) = x·y");
    return ok(std::to_string(ids.size()) + " identities");
  });
  add("sigma-p-not-commutative", "Σ^p for x·y = x over S holds in LZ2, commutativity does not", [sig] {
    auto ids = sigma_p_generate({parse_identity("(· x y) = x", sig)}, presets::semilattices(), {2, 5, 1000, true});
    auto lz2 = fixtures::left_zero2();
    if (!sigma_p_holds_in(lz2, ids).all_hold) return fail("LZ2 violates Σ^p");
    if (satisfies(lz2, parse_identity("(· x y) = (· y x)", sig))) return fail("LZ2 is commutative");
    return ok();
  });
  add("sigma-p-constant", "Σ^p for x·y = x over CS has the form (r1·r2)·(s1·s2) = r1·r2", [sig] {
    auto ids = sigma_p_generate({parse_identity("(· x y) = x", sig)}, presets::constant_semigroups(), {2, 5, 500, true});
    if (ids.empty()) return fail("empty");
    for (const auto& id : ids) {
      bool shape = !id.lhs.is_variable() && !id.rhs.is_variable() && !id.lhs.child(0).is_variable() &&
                   !id.lhs.child(1).is_variable() && id.lhs.child(0) == id.rhs;
      if (!shape) return fail(format_identity(id));
    }
    return ok(std::to_string(ids.size()) + " identities");
  });
  add("sigma-p-monounary-empty", "Σ^p over U_{2,0} is empty", [] {
    auto w = presets::monounary_cycle(2, 0);
    auto ids = sigma_p_generate({parse_identity("(u x) = x", w.signature())}, w, {2, 6, 100, true});
    return ids.empty() ? ok() : fail(std::to_string(ids.size()) + " identities");
  });
  add("sigma-p-lz-first", "Σ^p for x·y = x over LZ contains (x·y)·(x·z) = x·y", [sig] {
    auto ids = sigma_p_generate({parse_identity("(· x y) = x", sig)}, presets::left_zero_bands(), {3, 3, 5000, true});
    return contains(ids, "(· (· x y) (· x z)) = (· x y)", sig) ? ok() : fail("missing");
  });
  add("free-band-two-generators", "free band on x, y has six elements", [] {
    std::set<Word> forms;
    for (std::size_t len = 1; len <= 6; ++len) {
      for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
        Word w;
        for (std::size_t i = 0; i < len; ++i) w.push_back((bits >> (len - 1 - i)) & 1 ? "y" : "x");
        forms.insert(free_band_normal_form(w));
      }
    }
    return forms.size() == 6 ? ok() : fail(std::to_string(forms.size()) + " normal forms");
  });
  add("fg-lattices", "lattices with bands: f = x + x·y, g = x·y + y", [] {
    return verify_pair(presets::lattices(), "(+ x (· x y))", "(+ (· x y) y)", false);
  });
  add("fg-boolean", "Boolean algebras with bands: f = x + x·y, g = x·y + y", [] {
    return verify_pair(presets::boolean_algebras(), "(+ x (· x y))", "(+ (· x y) y)", false);
  });
  add("fg-quasigroups", "quasigroups with bands: f = (x·y)/y, g = x\\(x·y)", [] {
    return verify_pair(presets::quasigroups(), "(/ (· x y) y)", "(\\ x (· x y))", true);
  });
  add("fg-groups-divisions", "groups as (·,/,\\) with bands: f = (x·y)/y, g = x\\(x·y)", [] {
    return verify_pair(presets::groups_with_divisions(), "(/ (· x y) y)", "(\\ x (· x y))", false);
  });
  add("fg-groups", "groups with bands: f = x·y⁻¹·y, g = x·x⁻¹·y", [] {
    return verify_pair(presets::groups(), "(· (· x (inv y)) y)", "(· (· x (inv x)) y)", false);
  });
  add("fg-search-groups", "search rediscovers a group/band witness within size 6", [] {
    auto gp = presets::groups();
    auto r = fg_search(gp, presets::bands(gp.signature()), 6);
    if (!r) return fail("none found");
    std::string detail = format_term(r->f) + " , " + format_term(r->g);
    return r->status == WitnessStatus::verified ? ok(detail) : fail(detail);
  });
  add("fg-search-semilattices", "no witness for S ∘ S", [] {
    auto r = fg_search(presets::semilattices(), presets::semilattices(), 8);
    return r ? fail(format_term(r->f) + " , " + format_term(r->g)) : ok();
  });
  add("groups-polarized", "groups are polarized with pole x·x⁻¹", [] {
    auto t = is_polarized(presets::groups(), 4);
    if (!t) return fail("no witness");
    return format_term(*t) == "(· x (inv x))" ? ok(format_term(*t)) : fail(format_term(*t));
  });
  return checks;
}

}  // namespace malcev::cli
