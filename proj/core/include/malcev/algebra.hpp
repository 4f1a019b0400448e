#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "malcev/term.hpp"

namespace malcev {

using Element = std::uint32_t;

// Finite Ω-algebra on the carrier {0, ..., n-1}. Each operation table is
// stored row-major over argument tuples in lexicographic order, the first
// argument being the most significant.
class FiniteAlgebra {
 public:
  FiniteAlgebra(Signature sig, std::size_t n, std::vector<std::vector<Element>> tables);

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return n_; }

  std::span<const Element> table(std::size_t op) const { return tables_.at(op); }
  Element apply(std::size_t op, std::span<const Element> args) const;
  Element apply(std::size_t op, std::initializer_list<Element> args) const {
    return apply(op, std::span<const Element>(args.begin(), args.size()));
  }

  // Number of argument tuples of operation `op` (n^arity).
  std::size_t table_size(std::size_t op) const { return tables_.at(op).size(); }
  // Decodes a table index into its argument tuple.
  void decode(std::size_t op, std::size_t index, std::vector<Element>& args) const;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  Signature sig_;
  std::size_t n_;
  std::vector<std::vector<Element>> tables_;
};

FiniteAlgebra trivial_algebra(const Signature& sig);

using Environment = std::map<std::string, Element>;

Element evaluate(const Term& t, const FiniteAlgebra& a, const Environment& env);

// Term compiled against an algebra's signature for repeated evaluation with
// positional variable bindings.
class CompiledTerm {
 public:
  CompiledTerm(const Term& t, const Signature& sig, const std::vector<std::string>& vars);
  Element operator()(const FiniteAlgebra& a, std::span<const Element> values) const;

 private:
  struct Step {
    bool is_var;
    std::size_t index;  // variable slot or operation index
    std::size_t arity;
  };
  std::vector<Step> program_;  // postfix
  std::size_t max_stack_ = 0;
};

using Assignment = std::vector<std::pair<std::string, Element>>;

// First assignment (lexicographic over variables in first-occurrence order)
// that separates the two sides, or nullopt if `a` satisfies the identity.
std::optional<Assignment> find_counterexample(const FiniteAlgebra& a, const Identity& id);
bool satisfies(const FiniteAlgebra& a, const Identity& id);
bool satisfies_all(const FiniteAlgebra& a, std::span<const Identity> ids);

std::string format_assignment(const Assignment& asg);

}  // namespace malcev
