#include "malcev/algebra.hpp"

#include <algorithm>

#include "malcev/error.hpp"

namespace malcev {

FiniteAlgebra::FiniteAlgebra(Signature sig, std::size_t n, std::vector<std::vector<Element>> tables)
    : sig_(std::move(sig)), n_(n), tables_(std::move(tables)) {
  if (n_ == 0) throw InvalidArgument("carrier must be nonempty");
  if (tables_.size() != sig_.op_count()) {
    throw InvalidArgument("expected " + std::to_string(sig_.op_count()) + " operation tables, got " +
                          std::to_string(tables_.size()));
  }
  for (std::size_t op = 0; op < tables_.size(); ++op) {
    std::size_t expected = 1;
    for (std::size_t i = 0; i < sig_.op(op).arity; ++i) expected *= n_;
    if (tables_[op].size() != expected) {
      throw InvalidArgument("table for '" + sig_.op(op).name + "' has " +
                            std::to_string(tables_[op].size()) + " entries, expected " +
                            std::to_string(expected));
    }
    for (Element e : tables_[op]) {
      if (e >= n_) {
        throw InvalidArgument("table for '" + sig_.op(op).name + "' contains " + std::to_string(e) +
                              " outside the carrier");
      }
    }
  }
}

Element FiniteAlgebra::apply(std::size_t op, std::span<const Element> args) const {
  std::size_t index = 0;
  for (Element e : args) index = index * n_ + e;
  return tables_[op][index];
}

void FiniteAlgebra::decode(std::size_t op, std::size_t index, std::vector<Element>& args) const {
  std::size_t k = sig_.op(op).arity;
  args.resize(k);
  for (std::size_t i = k; i-- > 0;) {
    args[i] = static_cast<Element>(index % n_);
    index /= n_;
  }
}

FiniteAlgebra trivial_algebra(const Signature& sig) {
  std::vector<std::vector<Element>> tables(sig.op_count(), std::vector<Element>{0});
  return FiniteAlgebra(sig, 1, std::move(tables));
}

namespace {
Element eval_rec(const Term& t, const FiniteAlgebra& a, const Environment& env) {
  if (t.is_variable()) {
    auto it = env.find(t.head());
    if (it == env.end()) throw InvalidArgument("no binding for variable '" + t.head() + "'");
    if (it->second >= a.size()) throw InvalidArgument("binding outside the carrier");
    return it->second;
  }
  auto idx = a.signature().find(t.head());
  if (!idx) throw SignatureMismatch("algebra has no operation '" + t.head() + "'");
  if (a.signature().op(*idx).arity != t.children().size()) {
    throw SignatureMismatch("arity of '" + t.head() + "' differs from the algebra's");
  }
  std::vector<Element> args;
  args.reserve(t.children().size());
  for (const auto& c : t.children()) args.push_back(eval_rec(c, a, env));
  return a.apply(*idx, args);
}
}  // namespace

Element evaluate(const Term& t, const FiniteAlgebra& a, const Environment& env) {
  return eval_rec(t, a, env);
}

CompiledTerm::CompiledTerm(const Term& t, const Signature& sig,
                           const std::vector<std::string>& vars) {
  check_term(t, sig);
  std::size_t depth = 0;
  auto emit = [&](auto&& self, const Term& u) -> void {
    if (u.is_variable()) {
      auto it = std::find(vars.begin(), vars.end(), u.head());
      if (it == vars.end()) throw InvalidArgument("no slot for variable '" + u.head() + "'");
      program_.push_back({true, static_cast<std::size_t>(it - vars.begin()), 0});
      ++depth;
    } else {
      for (const auto& c : u.children()) self(self, c);
      program_.push_back({false, *sig.find(u.head()), u.children().size()});
      depth -= u.children().size();
      ++depth;
    }
    max_stack_ = std::max(max_stack_, depth);
  };
  emit(emit, t);
}

Element CompiledTerm::operator()(const FiniteAlgebra& a, std::span<const Element> values) const {
  std::vector<Element> stack;
  stack.reserve(max_stack_);
  for (const auto& step : program_) {
    if (step.is_var) {
      stack.push_back(values[step.index]);
    } else {
      std::span<const Element> args(stack.data() + stack.size() - step.arity, step.arity);
      Element r = a.apply(step.index, args);
      stack.resize(stack.size() - step.arity);
      stack.push_back(r);
    }
  }
  return stack.back();
}

std::optional<Assignment> find_counterexample(const FiniteAlgebra& a, const Identity& id) {
  check_identity(id, a.signature());
  auto vars = variable_sequence(id);
  CompiledTerm lhs(id.lhs, a.signature(), vars);
  CompiledTerm rhs(id.rhs, a.signature(), vars);
  std::vector<Element> values(vars.size(), 0);
  const auto n = static_cast<Element>(a.size());
  while (true) {
    if (lhs(a, values) != rhs(a, values)) {
      Assignment asg;
      for (std::size_t i = 0; i < vars.size(); ++i) asg.emplace_back(vars[i], values[i]);
      return asg;
    }
    std::size_t i = values.size();
    while (i > 0 && values[i - 1] + 1 == n) values[--i] = 0;
    if (i == 0) return std::nullopt;
    ++values[i - 1];
  }
}

bool satisfies(const FiniteAlgebra& a, const Identity& id) {
  return !find_counterexample(a, id).has_value();
}

bool satisfies_all(const FiniteAlgebra& a, std::span<const Identity> ids) {
  for (const auto& id : ids) {
    if (!satisfies(a, id)) return false;
  }
  return true;
}

std::string format_assignment(const Assignment& asg) {
  std::string out;
  for (const auto& [name, value] : asg) {
    if (!out.empty()) out += ' ';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

}  // namespace malcev
