#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace malcev {

struct OpSymbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

// Ordered list of operation symbols. Nullary symbols are rejected: every
// term contains at least one variable.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSymbol> ops);

  // Appends a symbol; throws InvalidArgument on arity 0 or a duplicate name.
  void add(std::string name, std::size_t arity);

  const std::vector<OpSymbol>& ops() const { return ops_; }
  std::size_t op_count() const { return ops_.size(); }
  const OpSymbol& op(std::size_t index) const { return ops_.at(index); }
  std::optional<std::size_t> find(std::string_view name) const;

  // At least one symbol of arity >= 2.
  bool is_plural() const;
  std::size_t max_arity() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<OpSymbol> ops_;
};

// Immutable term tree with shared structure. Cheap to copy.
class Term {
 public:
  static Term variable(std::string name);
  // Does not consult a signature; use Signature-aware parse or check_term to
  // validate arities.
  static Term apply(std::string symbol, std::vector<Term> children);

  bool is_variable() const { return node_->is_var; }
  // Variable name or operation symbol.
  const std::string& head() const { return node_->head; }
  std::span<const Term> children() const { return node_->children; }
  const Term& child(std::size_t i) const { return node_->children.at(i); }

  std::size_t size() const { return node_->size; }
  std::size_t depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    bool is_var = false;
    std::string head;
    std::vector<Term> children;
    std::size_t size = 1;
    std::size_t depth = 0;
    std::size_t hash = 0;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

struct Identity {
  Term lhs;
  Term rhs;

  friend bool operator==(const Identity&, const Identity&) = default;
};

using Substitution = std::map<std::string, Term>;

struct VariableInfo {
  std::set<std::string> variables;
  std::string first;
  std::string last;
};

// Throws SignatureMismatch if `t` uses an undeclared symbol or wrong arity.
void check_term(const Term& t, const Signature& sig);
void check_identity(const Identity& id, const Signature& sig);

// Prefix syntax: `(op child ...)`; bare identifiers are variables. The ASCII
// `*` is accepted for `·` when the signature declares `·` but not `*`.
Term parse_term(std::string_view text, const Signature& sig);
// `lhs = rhs`.
Identity parse_identity(std::string_view text, const Signature& sig);
std::string format_term(const Term& t);
std::string format_identity(const Identity& id);

Term substitute(const Term& t, const Substitution& s);
VariableInfo variables_of(const Term& t);
// Variables in order of first occurrence (left to right).
std::vector<std::string> variable_sequence(const Term& t);
// First occurrence order across lhs then rhs.
std::vector<std::string> variable_sequence(const Identity& id);
bool is_regular(const Identity& id);

// Variable names of the canonical pool: x, y, z, w, then x5, x6, ...
std::string pool_variable(std::size_t index);
std::vector<std::string> pool_variables(std::size_t count);

// Total order used by every search: by size, then lexicographically on the
// pre-order token sequence where variables rank by position in `vars`
// (unknown variables after those, by name) and precede all operation
// symbols, which rank by signature position.
class TermOrder {
 public:
  TermOrder(const Signature& sig, std::vector<std::string> vars);
  bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
  int compare(const Term& a, const Term& b) const;

 private:
  void tokens(const Term& t, std::vector<std::pair<int, std::string>>& out) const;

  const Signature* sig_;
  std::vector<std::string> vars_;
};

// Every term over `sig` with variables drawn from `vars` and at most
// `max_size` nodes, sorted by TermOrder.
std::vector<Term> enumerate_terms(const Signature& sig,
                                  const std::vector<std::string>& vars,
                                  std::size_t max_size);

}  // namespace malcev
