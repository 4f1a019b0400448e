#include "malcev/replica.hpp"

#include <sstream>

#include <json.hpp>

#include "malcev/error.hpp"

namespace malcev {

namespace {

void require_signature(const Signature& expected, const VarietySpec& v) {
  if (!(v.signature() == expected)) {
    throw SignatureMismatch("variety '" + v.name() + "' is over a different signature");
  }
}

// Calls `visit` with every assignment of `vars` into {0..n-1}.
template <typename Visit>
void for_each_assignment(std::size_t vars, std::size_t n, Visit&& visit) {
  std::vector<Element> values(vars, 0);
  while (true) {
    visit(std::span<const Element>(values));
    std::size_t i = vars;
    while (i > 0) {
      --i;
      if (++values[i] < n) break;
      values[i] = 0;
      if (i == 0) return;
    }
    if (vars == 0) return;
  }
}

std::optional<std::pair<Identity, Assignment>> first_failure(const FiniteAlgebra& a,
                                                             const std::vector<Identity>& ids) {
  for (const auto& id : ids) {
    if (auto cex = find_counterexample(a, id)) return std::make_pair(id, *cex);
  }
  return std::nullopt;
}

}  // namespace

Partition replica_congruence(const FiniteAlgebra& a, const VarietySpec& w) {
  require_signature(a.signature(), w);
  std::vector<ElementPair> pairs;
  for (const auto& id : w.base()) {
    auto vars = variable_sequence(id);
    CompiledTerm lhs(id.lhs, a.signature(), vars);
    CompiledTerm rhs(id.rhs, a.signature(), vars);
    for_each_assignment(vars.size(), a.size(), [&](std::span<const Element> d) {
      Element p = lhs(a, d);
      Element q = rhs(a, d);
      if (p != q) pairs.emplace_back(p, q);
    });
  }
  return congruence_generated(a, pairs);
}

std::string to_string(Verdict v) { return v == Verdict::member ? "member" : "non-member"; }

MembershipReport maltsev_member(const FiniteAlgebra& a, const VarietySpec& v, const VarietySpec& w) {
  require_signature(a.signature(), v);
  require_signature(a.signature(), w);
  const auto& v_base = v.base();
  MembershipReport report;
  report.replica = replica_congruence(a, w);
  for (auto& block : report.replica.blocks()) {
    BlockRecord rec;
    rec.elements = block;
    rec.is_subalgebra = is_subuniverse(a, block);
    if (!rec.is_subalgebra && w.is_idempotent()) {
      throw InvalidArgument("variety '" + w.name() + "' is flagged idempotent but replica block " +
                            Partition::from_blocks(a.size(), {block}).to_string() +
                            " is not a subuniverse");
    }
    if (rec.is_subalgebra) {
      rec.checked_against_v = true;
      Subalgebra sub = restrict_to(a, block);
      if (auto fail = first_failure(sub.algebra, v_base)) {
        rec.failing_identity = fail->first;
        for (auto [name, value] : fail->second) rec.failing_assignment.emplace_back(name, sub.elements[value]);
        report.verdict = Verdict::non_member;
      }
    }
    report.blocks.push_back(std::move(rec));
  }
  return report;
}

MembershipReport relative_member(const FiniteAlgebra& a, const VarietySpec& v, const VarietySpec& w,
                                 const VarietySpec& k) {
  require_signature(a.signature(), k);
  MembershipReport report = maltsev_member(a, v, w);
  report.relative = true;
  if (auto fail = first_failure(a, k.base())) {
    report.k_failing_identity = fail->first;
    report.k_failing_assignment = fail->second;
    report.verdict = Verdict::non_member;
  }
  return report;
}

WSum w_sum_decomposition(const FiniteAlgebra& a, const VarietySpec& w) {
  if (!w.is_idempotent()) {
    throw InvalidArgument("W-sum decomposition needs an idempotent variety; '" + w.name() + "' is not flagged");
  }
  Partition rho = replica_congruence(a, w);
  std::vector<Subalgebra> blocks;
  for (auto& block : rho.blocks()) {
    if (!is_subuniverse(a, block)) {
      throw InvalidArgument("replica block " + Partition::from_blocks(a.size(), {block}).to_string() +
                            " is not a subuniverse");
    }
    blocks.push_back(restrict_to(a, block));
  }
  Quotient q = quotient(a, rho);
  return {std::move(rho), std::move(blocks), std::move(q)};
}

std::vector<ProbeFailure> h_closure_probe(const FiniteAlgebra& a, const VarietySpec& v, const VarietySpec& w,
                                          std::size_t guard) {
  if (maltsev_member(a, v, w).verdict != Verdict::member) {
    throw InvalidArgument("the H-closure probe starts from a member of V ∘ W");
  }
  std::vector<ProbeFailure> failures;
  for (const auto& theta : all_congruences(a, guard)) {
    Quotient q = quotient(a, theta);
    MembershipReport r = maltsev_member(q.algebra, v, w);
    if (r.verdict == Verdict::non_member) failures.push_back({theta, std::move(r)});
  }
  return failures;
}

namespace {
std::string block_text(const std::vector<Element>& block) {
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(block[i]);
  }
  return out + "}";
}
}  // namespace

std::string format_report(const MembershipReport& r) {
  std::ostringstream out;
  out << "verdict: " << to_string(r.verdict) << "\n";
  out << "replica: " << r.replica.to_string() << "\n";
  for (const auto& b : r.blocks) {
    out << "block " << block_text(b.elements) << ": ";
    if (!b.is_subalgebra) {
      out << "not a subalgebra\n";
    } else if (!b.failing_identity) {
      out << "subalgebra, V holds\n";
    } else {
      out << "subalgebra, V fails " << format_identity(*b.failing_identity) << " at "
          << format_assignment(b.failing_assignment) << "\n";
    }
  }
  if (r.relative) {
    if (r.k_failing_identity) {
      out << "K fails " << format_identity(*r.k_failing_identity) << " at "
          << format_assignment(r.k_failing_assignment) << "\n";
    } else {
      out << "K holds\n";
    }
  }
  return out.str();
}

std::string report_json(const MembershipReport& r) {
  using nlohmann::json;
  auto assignment = [](const Assignment& asg) {
    json obj = json::object();
    for (const auto& [name, value] : asg) obj[name] = value;
    return obj;
  };
  json j;
  j["verdict"] = to_string(r.verdict);
  j["replica"] = r.replica.to_string();
  j["blocks"] = json::array();
  for (const auto& b : r.blocks) {
    json jb;
    jb["elements"] = b.elements;
    jb["is_subalgebra"] = b.is_subalgebra;
    jb["checked_against_v"] = b.checked_against_v;
    if (b.failing_identity) {
      jb["failing_identity"] = format_identity(*b.failing_identity);
      jb["assignment"] = assignment(b.failing_assignment);
    }
    j["blocks"].push_back(std::move(jb));
  }
  if (r.relative) {
    j["k_holds"] = !r.k_failing_identity.has_value();
    if (r.k_failing_identity) {
      j["k_failing_identity"] = format_identity(*r.k_failing_identity);
      j["k_assignment"] = assignment(r.k_failing_assignment);
    }
  }
  return j.dump();
}

}  // namespace malcev
