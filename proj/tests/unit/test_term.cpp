#include <doctest.h>

#include <set>

#include "malcev/error.hpp"
#include "malcev/presets.hpp"
#include "malcev/term.hpp"

using namespace malcev;

namespace {
const Signature kGroupoid = presets::groupoid_signature();
const Signature kGroup = presets::group_signature();

// Number of binary trees with `s` nodes over `v` variables, sizes odd.
std::size_t binary_terms(std::size_t s, std::size_t v) {
  if (s == 1) return v;
  std::size_t total = 0;
  for (std::size_t l = 1; l + 1 < s; l += 2) {
    std::size_t r = s - 1 - l;
    if (r % 2 == 1) total += binary_terms(l, v) * binary_terms(r, v);
  }
  return total;
}
}  // namespace

TEST_CASE("signature rejects nullary and duplicate symbols") {
  Signature sig;
  sig.add("·", 2);
  CHECK_THROWS_AS(sig.add("e", 0), InvalidArgument);
  CHECK_THROWS_AS(sig.add("·", 1), InvalidArgument);
  CHECK(sig.is_plural());
  CHECK_FALSE(presets::monounary_signature().is_plural());
  CHECK(presets::quasigroup_signature().max_arity() == 2);
  CHECK(sig.find("·") == std::size_t{0});
  CHECK_FALSE(sig.find("+").has_value());
}

TEST_CASE("parse and format round trip") {
  for (const char* text : {"x", "(· x y)", "(· (· x y) (· y x))", "(· x (inv (· y z)))"}) {
    const auto& sig = std::string(text).find("inv") != std::string::npos ? kGroup : kGroupoid;
    Term t = parse_term(text, sig);
    CHECK(format_term(t) == text);
    CHECK(parse_term(format_term(t), sig) == t);
  }
  CHECK(parse_term("(* x y)", kGroupoid) == parse_term("(· x y)", kGroupoid));
  Identity id = parse_identity("(· x y) = x", kGroupoid);
  CHECK(format_identity(id) == "(· x y) = x");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_term("(· x)", kGroupoid), Error);
  CHECK_THROWS_AS(parse_term("(+ x y)", kGroupoid), Error);
  CHECK_THROWS_AS(parse_term("(· x y", kGroupoid), ParseError);
  CHECK_THROWS_AS(parse_term("(· x y) z", kGroupoid), ParseError);
  CHECK_THROWS_AS(parse_term("·", kGroupoid), ParseError);
  CHECK_THROWS_AS(parse_identity("(· x y)", kGroupoid), ParseError);
  CHECK_THROWS_AS(parse_term("", kGroupoid), ParseError);
}

TEST_CASE("check_term validates arity") {
  Term bad = Term::apply("·", {Term::variable("x")});
  CHECK_THROWS_AS(check_term(bad, kGroupoid), SignatureMismatch);
  CHECK_NOTHROW(check_term(parse_term("(· x x)", kGroupoid), kGroupoid));
}

TEST_CASE("size, depth, structural equality") {
  Term t = parse_term("(· (· x y) z)", kGroupoid);
  CHECK(t.size() == 5);
  CHECK(t.depth() == 2);
  CHECK(t == parse_term("(· (· x y) z)", kGroupoid));
  CHECK_FALSE(t == parse_term("(· x (· y z))", kGroupoid));
  CHECK(t.hash() == parse_term("(· (· x y) z)", kGroupoid).hash());
}

TEST_CASE("variables, regularity, substitution") {
  Identity id = parse_identity("(· (· y x) z) = (· x y)", kGroupoid);
  CHECK(variable_sequence(id) == std::vector<std::string>{"y", "x", "z"});
  CHECK_FALSE(is_regular(id));
  CHECK(is_regular(parse_identity("(· x y) = (· y x)", kGroupoid)));
  auto info = variables_of(parse_term("(· (· y x) z)", kGroupoid));
  CHECK(info.first == "y");
  CHECK(info.last == "z");
  CHECK(info.variables.size() == 3);
  Term s = substitute(parse_term("(· x y)", kGroupoid),
                      {{"x", parse_term("(· y y)", kGroupoid)}, {"y", Term::variable("x")}});
  CHECK(format_term(s) == "(· (· y y) x)");
}

TEST_CASE("variable pool") {
  CHECK(pool_variables(6) == std::vector<std::string>{"x", "y", "z", "w", "x5", "x6"});
}

TEST_CASE("term enumeration matches the binary-tree count") {
  const std::vector<std::string> vars{"x", "y"};
  auto terms = enumerate_terms(kGroupoid, vars, 7);
  std::size_t expected = binary_terms(1, 2) + binary_terms(3, 2) + binary_terms(5, 2) + binary_terms(7, 2);
  CHECK(terms.size() == expected);
  std::set<std::string> unique;
  for (const auto& t : terms) unique.insert(format_term(t));
  CHECK(unique.size() == terms.size());
  TermOrder order(kGroupoid, vars);
  for (std::size_t i = 1; i < terms.size(); ++i) CHECK(order.compare(terms[i - 1], terms[i]) < 0);
}

TEST_CASE("term order: size, then variables before operations") {
  TermOrder order(kGroup, {"x", "y"});
  auto p = [](const char* s) { return parse_term(s, kGroup); };
  CHECK(order(p("x"), p("y")));
  CHECK(order(p("y"), p("(inv x)")));
  CHECK(order(p("(· x y)"), p("(inv (inv x))")));
  CHECK(order(p("(· x (inv y))"), p("(· (inv x) y)")));
  CHECK(order.compare(p("(· x y)"), p("(· x y)")) == 0);
}
