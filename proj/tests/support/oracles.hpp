#pragma once

// Independent brute-force oracles and generators shared by the unit and
// acceptance suites. Nothing here calls the closure algorithms under test.

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/partition.hpp"
#include "malcev/term.hpp"

namespace malcev::testing {

// Uniformly random operation tables.
inline FiniteAlgebra random_algebra(const Signature& sig, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  std::vector<std::vector<Element>> tables;
  for (const auto& op : sig.ops()) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < op.arity; ++i) size *= n;
    std::vector<Element> t(size);
    for (auto& e : t) e = pick(rng);
    tables.push_back(std::move(t));
  }
  return FiniteAlgebra(sig, n, std::move(tables));
}

// Compatibility checked on every pair of argument tuples, not via block
// representatives.
inline bool is_congruence_naive(const FiniteAlgebra& a, const Partition& p) {
  std::vector<Element> args_a;
  std::vector<Element> args_b;
  for (std::size_t op = 0; op < a.signature().op_count(); ++op) {
    for (std::size_t i = 0; i < a.table_size(op); ++i) {
      a.decode(op, i, args_a);
      for (std::size_t j = 0; j < a.table_size(op); ++j) {
        a.decode(op, j, args_b);
        bool related = true;
        for (std::size_t k = 0; k < args_a.size() && related; ++k) related = p.same(args_a[k], args_b[k]);
        if (related && !p.same(a.table(op)[i], a.table(op)[j])) return false;
      }
    }
  }
  return true;
}

inline std::vector<Partition> congruences_naive(const FiniteAlgebra& a) {
  std::vector<Partition> out;
  for_each_partition(a.size(), [&](const Partition& p) {
    if (is_congruence_naive(a, p)) out.push_back(p);
    return true;
  });
  return out;
}

// Intersection of every congruence containing `pairs`.
inline Partition generated_naive(const FiniteAlgebra& a, const std::vector<std::pair<Element, Element>>& pairs) {
  Partition result = Partition::total(a.size());
  for (const auto& p : congruences_naive(a)) {
    bool contains = true;
    for (auto [u, v] : pairs) contains = contains && p.same(u, v);
    if (contains) result = meet(result, p);
  }
  return result;
}

inline bool satisfies_naive(const FiniteAlgebra& a, const Identity& id) {
  auto vars = variable_sequence(id);
  std::vector<Element> values(vars.size(), 0);
  while (true) {
    Environment env;
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = values[i];
    if (evaluate(id.lhs, a, env) != evaluate(id.rhs, a, env)) return false;
    std::size_t i = vars.size();
    while (i > 0 && ++values[i - 1] == a.size()) values[--i] = 0;
    if (i == 0) return true;
  }
}

// Quotient tables computed from every member of each block.
inline std::optional<FiniteAlgebra> quotient_naive(const FiniteAlgebra& a, const Partition& p) {
  if (!is_congruence_naive(a, p)) return std::nullopt;
  std::vector<std::vector<Element>> tables;
  std::vector<Element> args;
  for (std::size_t op = 0; op < a.signature().op_count(); ++op) {
    std::size_t arity = a.signature().op(op).arity;
    std::size_t size = 1;
    for (std::size_t i = 0; i < arity; ++i) size *= p.block_count();
    std::vector<Element> t(size);
    for (std::size_t i = 0; i < a.table_size(op); ++i) {
      a.decode(op, i, args);
      std::size_t idx = 0;
      for (auto e : args) idx = idx * p.block_count() + p.block_of(e);
      t[idx] = static_cast<Element>(p.block_of(a.table(op)[i]));
    }
    tables.push_back(std::move(t));
  }
  return FiniteAlgebra(a.signature(), p.block_count(), std::move(tables));
}

inline bool satisfies_all_naive(const FiniteAlgebra& a, const std::vector<Identity>& ids) {
  for (const auto& id : ids) {
    if (!satisfies_naive(a, id)) return false;
  }
  return true;
}

// Least congruence whose quotient satisfies `base`, by exhaustive search.
// Nullopt if the qualifying congruences have no least element.
inline std::optional<Partition> replica_naive(const FiniteAlgebra& a, const std::vector<Identity>& base) {
  std::vector<Partition> qualifying;
  for (const auto& p : congruences_naive(a)) {
    if (satisfies_all_naive(*quotient_naive(a, p), base)) qualifying.push_back(p);
  }
  for (const auto& c : qualifying) {
    bool least = true;
    for (const auto& d : qualifying) least = least && c.refines(d);
    if (least) return c;
  }
  return std::nullopt;
}

// Composition a ∘ b as a set of pairs, straight from the definition.
inline std::vector<std::vector<bool>> compose_naive(const Partition& a, const Partition& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (a.same(x, y) && b.same(y, z)) r[x][z] = true;
  return r;
}

// Equivalence classes of nonempty words of length <= max_len under the
// moves uu <-> u that stay within the length bound.
inline std::vector<std::vector<std::string>> all_words(const std::vector<std::string>& letters, std::size_t max_len) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::vector<std::string>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto& w : layer) {
      for (const auto& l : letters) {
        auto v = w;
        v.push_back(l);
        next.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace malcev::testing
