#include "malcev/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "malcev/error.hpp"

namespace malcev {

Signature::Signature(std::vector<OpSymbol> ops) {
  for (auto& op : ops) add(std::move(op.name), op.arity);
}

void Signature::add(std::string name, std::size_t arity) {
  if (arity == 0) {
    throw InvalidArgument("nullary operation symbol '" + name +
                          "' is not supported; use a unary symbol constant on the variety");
  }
  if (name.empty()) throw InvalidArgument("empty operation symbol");
  if (find(name)) throw InvalidArgument("duplicate operation symbol '" + name + "'");
  ops_.push_back({std::move(name), arity});
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name == name) return i;
  }
  return std::nullopt;
}

bool Signature::is_plural() const {
  return std::any_of(ops_.begin(), ops_.end(), [](const OpSymbol& o) { return o.arity >= 2; });
}

std::size_t Signature::max_arity() const {
  std::size_t m = 0;
  for (const auto& o : ops_) m = std::max(m, o.arity);
  return m;
}

Term Term::variable(std::string name) {
  auto node = std::make_shared<Node>();
  node->is_var = true;
  node->hash = std::hash<std::string>{}(name) * 31 + 7;
  node->head = std::move(name);
  return Term(std::move(node));
}

Term Term::apply(std::string symbol, std::vector<Term> children) {
  auto node = std::make_shared<Node>();
  std::size_t h = std::hash<std::string>{}(symbol);
  std::size_t size = 1;
  std::size_t depth = 0;
  for (const auto& c : children) {
    size += c.size();
    depth = std::max(depth, c.depth() + 1);
    h = h * 1000003u ^ c.hash();
  }
  node->head = std::move(symbol);
  node->children = std::move(children);
  node->size = size;
  node->depth = depth;
  node->hash = h;
  return Term(std::move(node));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.is_variable() != b.is_variable() ||
      a.head() != b.head()) {
    return false;
  }
  auto ca = a.children();
  auto cb = b.children();
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

void check_term(const Term& t, const Signature& sig) {
  if (t.is_variable()) return;
  auto idx = sig.find(t.head());
  if (!idx) throw SignatureMismatch("unknown operation symbol '" + t.head() + "'");
  if (sig.op(*idx).arity != t.children().size()) {
    throw SignatureMismatch("operation '" + t.head() + "' expects " +
                            std::to_string(sig.op(*idx).arity) + " arguments, got " +
                            std::to_string(t.children().size()));
  }
  for (const auto& c : t.children()) check_term(c, sig);
}

void check_identity(const Identity& id, const Signature& sig) {
  check_term(id.lhs, sig);
  check_term(id.rhs, sig);
}

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto c0 = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(c0) && c0 != '_') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_';
  });
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      out.emplace_back(1, c);
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
             text[j] != '(' && text[j] != ')') {
        ++j;
      }
      out.emplace_back(text.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

class TermParser {
 public:
  TermParser(const std::vector<std::string>& tokens, std::size_t begin, std::size_t end,
             const Signature& sig)
      : tokens_(tokens), pos_(begin), end_(end), sig_(sig) {}

  Term parse_all() {
    if (pos_ >= end_) throw ParseError("empty term");
    Term t = parse();
    if (pos_ != end_) throw ParseError("unexpected trailing token '" + tokens_[pos_] + "'");
    return t;
  }

 private:
  Term parse() {
    if (pos_ >= end_) throw ParseError("unexpected end of term");
    const std::string& tok = tokens_[pos_++];
    if (tok == ")") throw ParseError("unexpected ')'");
    if (tok != "(") {
      if (resolve(tok)) throw ParseError("operation symbol '" + tok + "' used without parentheses");
      if (!is_identifier(tok)) throw ParseError("invalid variable name '" + tok + "'");
      return Term::variable(tok);
    }
    if (pos_ >= end_) throw ParseError("unexpected end after '('");
    const std::string& sym = tokens_[pos_++];
    if (sym == "(" || sym == ")") throw ParseError("expected operation symbol after '('");
    auto idx = resolve(sym);
    if (!idx) throw ParseError("unknown operation symbol '" + sym + "'");
    const OpSymbol& op = sig_.op(*idx);
    std::vector<Term> children;
    while (pos_ < end_ && tokens_[pos_] != ")") children.push_back(parse());
    if (pos_ >= end_) throw ParseError("missing ')'");
    ++pos_;
    if (children.size() != op.arity) {
      throw ParseError("arity mismatch: '" + op.name + "' expects " + std::to_string(op.arity) +
                       " arguments, got " + std::to_string(children.size()));
    }
    return Term::apply(op.name, std::move(children));
  }

  std::optional<std::size_t> resolve(const std::string& sym) const {
    if (auto idx = sig_.find(sym)) return idx;
    if (sym == "*") return sig_.find("·");
    return std::nullopt;
  }

  const std::vector<std::string>& tokens_;
  std::size_t pos_;
  std::size_t end_;
  const Signature& sig_;
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) {
  auto tokens = tokenize(text);
  return TermParser(tokens, 0, tokens.size(), sig).parse_all();
}

Identity parse_identity(std::string_view text, const Signature& sig) {
  auto tokens = tokenize(text);
  std::optional<std::size_t> eq;
  int depth = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == "(") ++depth;
    if (tokens[i] == ")") --depth;
    if (tokens[i] == "=" && depth == 0) {
      if (eq) throw ParseError("more than one '=' in identity");
      eq = i;
    }
  }
  if (!eq) throw ParseError("identity must have the form 'lhs = rhs'");
  Term lhs = TermParser(tokens, 0, *eq, sig).parse_all();
  Term rhs = TermParser(tokens, *eq + 1, tokens.size(), sig).parse_all();
  return {std::move(lhs), std::move(rhs)};
}

namespace {
void format_into(const Term& t, std::string& out) {
  if (t.is_variable()) {
    out += t.head();
    return;
  }
  out += '(';
  out += t.head();
  for (const auto& c : t.children()) {
    out += ' ';
    format_into(c, out);
  }
  out += ')';
}
}  // namespace

std::string format_term(const Term& t) {
  std::string out;
  format_into(t, out);
  return out;
}

std::string format_identity(const Identity& id) {
  return format_term(id.lhs) + " = " + format_term(id.rhs);
}

Term substitute(const Term& t, const Substitution& s) {
  if (t.is_variable()) {
    auto it = s.find(t.head());
    return it == s.end() ? t : it->second;
  }
  std::vector<Term> kids;
  kids.reserve(t.children().size());
  bool changed = false;
  for (const auto& c : t.children()) {
    kids.push_back(substitute(c, s));
    changed = changed || !(kids.back() == c);
  }
  if (!changed) return t;
  return Term::apply(t.head(), std::move(kids));
}

namespace {
void collect_sequence(const Term& t, std::vector<std::string>& seq) {
  if (t.is_variable()) {
    if (std::find(seq.begin(), seq.end(), t.head()) == seq.end()) seq.push_back(t.head());
    return;
  }
  for (const auto& c : t.children()) collect_sequence(c, seq);
}

const Term& leftmost_leaf(const Term& t) {
  return t.is_variable() ? t : leftmost_leaf(t.children().front());
}
const Term& rightmost_leaf(const Term& t) {
  return t.is_variable() ? t : rightmost_leaf(t.children().back());
}
}  // namespace

VariableInfo variables_of(const Term& t) {
  VariableInfo info;
  for (auto& v : variable_sequence(t)) info.variables.insert(std::move(v));
  info.first = leftmost_leaf(t).head();
  info.last = rightmost_leaf(t).head();
  return info;
}

std::vector<std::string> variable_sequence(const Term& t) {
  std::vector<std::string> seq;
  collect_sequence(t, seq);
  return seq;
}

std::vector<std::string> variable_sequence(const Identity& id) {
  std::vector<std::string> seq;
  collect_sequence(id.lhs, seq);
  collect_sequence(id.rhs, seq);
  return seq;
}

bool is_regular(const Identity& id) {
  return variables_of(id.lhs).variables == variables_of(id.rhs).variables;
}

std::string pool_variable(std::size_t index) {
  static const char* kNames[] = {"x", "y", "z", "w"};
  if (index < 4) return kNames[index];
  return "x" + std::to_string(index + 1);
}

std::vector<std::string> pool_variables(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(pool_variable(i));
  return out;
}

TermOrder::TermOrder(const Signature& sig, std::vector<std::string> vars)
    : sig_(&sig), vars_(std::move(vars)) {}

void TermOrder::tokens(const Term& t, std::vector<std::pair<int, std::string>>& out) const {
  constexpr int kOpBase = 1 << 20;
  if (t.is_variable()) {
    auto it = std::find(vars_.begin(), vars_.end(), t.head());
    if (it != vars_.end()) {
      out.emplace_back(static_cast<int>(it - vars_.begin()), std::string());
    } else {
      out.emplace_back(static_cast<int>(vars_.size()), t.head());
    }
    return;
  }
  auto idx = sig_->find(t.head());
  if (idx) {
    out.emplace_back(kOpBase + static_cast<int>(*idx), std::string());
  } else {
    out.emplace_back(2 * kOpBase, t.head());
  }
  for (const auto& c : t.children()) tokens(c, out);
}

int TermOrder::compare(const Term& a, const Term& b) const {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a == b) return 0;
  std::vector<std::pair<int, std::string>> ta;
  std::vector<std::pair<int, std::string>> tb;
  tokens(a, ta);
  tokens(b, tb);
  if (ta < tb) return -1;
  if (tb < ta) return 1;
  return 0;
}

namespace {
// Appends to `out` every tuple of children whose sizes sum to `budget`.
void distribute(const std::vector<std::vector<Term>>& by_size, std::size_t slots,
                std::size_t budget, std::vector<Term>& prefix,
                const std::string& symbol, std::vector<Term>& out) {
  if (slots == 0) {
    if (budget == 0) out.push_back(Term::apply(symbol, prefix));
    return;
  }
  if (budget < slots) return;
  for (std::size_t s = 1; s + (slots - 1) <= budget; ++s) {
    for (const auto& t : by_size[s]) {
      prefix.push_back(t);
      distribute(by_size, slots - 1, budget - s, prefix, symbol, out);
      prefix.pop_back();
    }
  }
}
}  // namespace

std::vector<Term> enumerate_terms(const Signature& sig, const std::vector<std::string>& vars,
                                  std::size_t max_size) {
  std::vector<std::vector<Term>> by_size(max_size + 1);
  if (max_size >= 1) {
    for (const auto& v : vars) by_size[1].push_back(Term::variable(v));
  }
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const auto& op : sig.ops()) {
      std::vector<Term> prefix;
      distribute(by_size, op.arity, s - 1, prefix, op.name, by_size[s]);
    }
  }
  TermOrder order(sig, vars);
  std::vector<Term> all;
  for (auto& bucket : by_size) {
    std::sort(bucket.begin(), bucket.end(), order);
    all.insert(all.end(), bucket.begin(), bucket.end());
  }
  return all;
}

}  // namespace malcev
