#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "malcev/algebra_io.hpp"
#include "malcev/congruence.hpp"
#include "malcev/error.hpp"
#include "malcev/fixtures.hpp"
#include "malcev/identities.hpp"
#include "malcev/presets.hpp"
#include "malcev/replica.hpp"
#include "paper_checks.hpp"
#include "resolve.hpp"

using nlohmann::json;

namespace malcev::cli {
namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

bool structured = false;
std::string generated_by;  // applies to every variety given as an identity file

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json assignment_json(const Assignment& asg) {
  json obj = json::object();
  for (const auto& [name, value] : asg) obj[name] = value;
  return obj;
}

int cmd_check(const std::string& alg, const std::string& identity) {
  auto a = load_algebra(alg);
  auto id = parse_identity(identity, a.signature());
  auto cex = find_counterexample(a, id);
  if (structured) {
    json j{{"identity", format_identity(id)}, {"holds", !cex}};
    if (cex) j["witness"] = assignment_json(*cex);
    emit(j);
  } else if (cex) {
    std::cout << "fail " << format_assignment(*cex) << "\n";
  } else {
    std::cout << "pass\n";
  }
  return cex ? kFail : kPass;
}

int cmd_replica(const std::string& alg, const std::string& variety) {
  auto a = load_algebra(alg);
  auto w = load_variety(variety, a.signature(), generated_by);
  auto rho = replica_congruence(a, w);
  if (structured) {
    emit({{"variety", w.name()}, {"replica", rho.to_string()}});
  } else {
    std::cout << rho.to_string() << "\n";
  }
  return kPass;
}

int cmd_member(const std::string& alg, const std::string& v_spec, const std::string& w_spec,
               const std::string& k_spec) {
  auto a = load_algebra(alg);
  auto v = load_variety(v_spec, a.signature(), generated_by);
  auto w = load_variety(w_spec, a.signature(), generated_by);
  MembershipReport r = k_spec.empty() ? maltsev_member(a, v, w)
                                      : relative_member(a, v, w, load_variety(k_spec, a.signature(), generated_by));
  if (structured) {
    emit(json::parse(report_json(r)));
  } else {
    std::cout << format_report(r);
  }
  return r.verdict == Verdict::member ? kPass : kFail;
}

int cmd_probe(const std::string& alg, const std::string& v_spec, const std::string& w_spec) {
  auto a = load_algebra(alg);
  auto v = load_variety(v_spec, a.signature(), generated_by);
  auto w = load_variety(w_spec, a.signature(), generated_by);
  auto failures = h_closure_probe(a, v, w, congruence_guard());
  if (structured) {
    json j = json::array();
    for (const auto& f : failures) j.push_back({{"theta", f.theta.to_string()}, {"report", json::parse(report_json(f.report))}});
    emit({{"failures", j}});
  } else {
    std::cout << failures.size() << " failing quotient(s)\n";
    for (const auto& f : failures) {
      std::cout << "theta: " << f.theta.to_string() << "\n";
      std::cout << format_report(f.report);
    }
  }
  return kPass;
}

int cmd_sigma_p(const std::string& base_file, const std::string& w_spec, const SigmaPConfig& cfg) {
  auto list = read_identity_file(base_file, presets::groupoid_signature());
  auto w = load_variety(w_spec, list.signature, generated_by);
  SigmaPStream stream(list.identities, w, cfg);
  json arr = json::array();
  while (auto id = stream.next()) {
    if (structured) {
      arr.push_back(format_identity(*id));
    } else {
      std::cout << format_identity(*id) << "\n";
    }
  }
  if (structured) emit({{"identities", arr}});
  return kPass;
}

void print_witness(const FGWitness& r) {
  if (structured) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"condition", c.name}, {"identity", format_identity(c.identity)}, {"holds", c.holds},
                        {"oracle", to_string(c.strength)}});
    }
    emit({{"f", format_term(r.f)}, {"g", format_term(r.g)}, {"status", to_string(r.status)}, {"checks", checks}});
    return;
  }
  std::cout << "f: " << format_term(r.f) << "\n";
  std::cout << "g: " << format_term(r.g) << "\n";
  std::cout << "status: " << to_string(r.status) << "\n";
  for (const auto& c : r.checks) {
    std::cout << "  " << c.name << ": " << (c.holds ? "yes" : "no") << " (" << to_string(c.strength) << ")\n";
  }
}

int cmd_find_fg(const std::string& v_spec, const std::string& w_spec, std::size_t max_size) {
  auto v = load_variety(v_spec, presets::groupoid_signature(), generated_by);
  auto w = load_variety(w_spec, v.signature(), generated_by);
  auto r = fg_search(v, w, max_size);
  if (!r) {
    if (structured) {
      emit({{"found", false}});
    } else {
      std::cout << "none within size " << max_size << "\n";
    }
    return kFail;
  }
  print_witness(*r);
  return kPass;
}

int cmd_verify_fg(const std::string& v_spec, const std::string& w_spec, const std::string& f,
                  const std::string& g) {
  auto v = load_variety(v_spec, presets::groupoid_signature(), generated_by);
  auto w = load_variety(w_spec, v.signature(), generated_by);
  auto r = fg_verify(v, w, parse_term(f, v.signature()), parse_term(g, v.signature()));
  print_witness(r);
  return r.status == WitnessStatus::refuted ? kFail : kPass;
}

int cmd_congruences(const std::string& alg) {
  auto a = load_algebra(alg);
  auto cons = all_congruences(a, congruence_guard());
  if (structured) {
    json arr = json::array();
    for (const auto& c : cons) arr.push_back(c.to_string());
    emit({{"congruences", arr}});
  } else {
    for (const auto& c : cons) std::cout << c.to_string() << "\n";
  }
  return kPass;
}

int cmd_show(const std::string& alg) {
  std::cout << format_algebra(load_algebra(alg));
  return kPass;
}

int cmd_list() {
  std::cout << "fixtures:\n";
  for (const auto& b : fixtures::builtin_list()) std::cout << "  " << b.name << "  " << b.description << "\n";
  std::cout << "presets:\n";
  for (const auto& p : presets::preset_list()) std::cout << "  " << p.name << "  " << p.description << "\n";
  return kPass;
}

int cmd_verify_paper(bool list_only, const std::string& a_file) {
  FiniteAlgebra a = a_file.empty() ? fixtures::groupoid_a() : load_algebra(a_file);
  auto checks = paper_checks(a);
  if (list_only) {
    for (const auto& c : checks) std::cout << c.name << "  " << c.anchor << "\n";
    return kPass;
  }
  int failed = 0;
  json arr = json::array();
  for (const auto& c : checks) {
    CheckResult r;
    try {
      r = c.run();
    } catch (const Error& e) {
      r = {false, e.what()};
    }
    if (!r.pass) ++failed;
    if (structured) {
      arr.push_back({{"name", c.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << c.name;
      if (!r.detail.empty()) std::cout << "  " << r.detail;
      std::cout << "\n";
    }
  }
  if (structured) {
    emit({{"checks", arr}, {"failed", failed}});
  } else {
    std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  }
  return failed == 0 ? kPass : kFail;
}

}  // namespace
}  // namespace malcev::cli

int main(int argc, char** argv) {
  using namespace malcev::cli;
  CLI::App app{"Replica congruences, Mal'tsev products and identity witnesses for finite algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--generated-by", generated_by,
                 "Algebra whose generated variety decides identities for varieties given as identity files");

  std::string alg, identity, v_spec, w_spec, k_spec, base_file, f_term, g_term, a_paper;
  std::size_t max_size = 6;
  malcev::SigmaPConfig sp;
  bool no_dedup = false;
  bool list_only = false;

  auto* check = app.add_subcommand("check", "Test an identity on an algebra");
  check->add_option("algebra", alg, "Algebra file or builtin name")->required();
  check->add_option("identity", identity, "\"lhs = rhs\" in prefix syntax")->required();

  auto* replica = app.add_subcommand("replica", "W-replica congruence");
  replica->add_option("algebra", alg)->required();
  replica->add_option("--variety,-w", w_spec, "Variety W")->required();

  auto* member = app.add_subcommand("member", "Membership in V ∘ W (relative to K with --k)");
  member->add_option("algebra", alg)->required();
  member->add_option("--v", v_spec)->required();
  member->add_option("--w", w_spec)->required();
  member->add_option("--k", k_spec);

  auto* probe = app.add_subcommand("probe-h", "Quotients of a member of V ∘ W that are not members");
  probe->add_option("algebra", alg)->required();
  probe->add_option("--v", v_spec)->required();
  probe->add_option("--w", w_spec)->required();

  auto* sigma = app.add_subcommand("sigma-p", "Prefix of the Σ^p identity set");
  sigma->add_option("--v-base", base_file, "Identity file with the base of V")->required();
  sigma->add_option("--w", w_spec)->required();
  sigma->add_option("--pool", sp.pool)->check(CLI::PositiveNumber);
  sigma->add_option("--max-size", sp.max_term_size)->check(CLI::PositiveNumber);
  sigma->add_option("--max-results", sp.max_results)->check(CLI::PositiveNumber);
  sigma->add_flag("--no-dedup", no_dedup);

  auto* find_fg = app.add_subcommand("find-fg", "Search for terms f, g");
  find_fg->add_option("--v", v_spec)->required();
  find_fg->add_option("--w", w_spec)->required();
  find_fg->add_option("--max-size", max_size)->check(CLI::PositiveNumber);

  auto* verify_fg = app.add_subcommand("verify-fg", "Check a given pair f, g");
  verify_fg->add_option("--v", v_spec)->required();
  verify_fg->add_option("--w", w_spec)->required();
  verify_fg->add_option("--f", f_term)->required();
  verify_fg->add_option("--g", g_term)->required();

  auto* congruences = app.add_subcommand("congruences", "All congruences of an algebra");
  congruences->add_option("algebra", alg)->required();

  auto* show = app.add_subcommand("show", "Print an algebra in canonical text form");
  show->add_option("algebra", alg)->required();

  auto* list = app.add_subcommand("list", "Builtin fixtures and variety presets");

  auto* paper = app.add_subcommand("verify-paper", "Replay the worked examples");
  paper->add_flag("--list", list_only, "Print check names without running them");
  paper->add_option("--a-paper", a_paper, "Replacement table for the four-element groupoid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  structured = format == "structured";
  sp.dedup = !no_dedup;

  try {
    if (*check) return cmd_check(alg, identity);
    if (*replica) return cmd_replica(alg, w_spec);
    if (*member) return cmd_member(alg, v_spec, w_spec, k_spec);
    if (*probe) return cmd_probe(alg, v_spec, w_spec);
    if (*sigma) return cmd_sigma_p(base_file, w_spec, sp);
    if (*find_fg) return cmd_find_fg(v_spec, w_spec, max_size);
    if (*verify_fg) return cmd_verify_fg(v_spec, w_spec, f_term, g_term);
    if (*congruences) return cmd_congruences(alg);
    if (*show) return cmd_show(alg);
    if (*list) return cmd_list();
    if (*paper) return cmd_verify_paper(list_only, a_paper);
  } catch (const malcev::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
