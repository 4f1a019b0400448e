#include "malcev/congruence.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

#include "malcev/error.hpp"

namespace malcev {

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  if (p.size() != a.size()) return false;
  std::vector<Element> args;
  std::vector<Element> reps;
  for (std::size_t op = 0; op < a.signature().op_count(); ++op) {
    for (std::size_t idx = 0; idx < a.table_size(op); ++idx) {
      a.decode(op, idx, args);
      reps.resize(args.size());
      for (std::size_t i = 0; i < args.size(); ++i) {
        reps[i] = p.representative(p.block_of(args[i]));
      }
      if (!p.same(a.table(op)[idx], a.apply(op, reps))) return false;
    }
  }
  return true;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    return true;
  }
  Partition partition() {
    std::vector<std::size_t> labels(parent_.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = find(i);
    return Partition(labels);
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

}  // namespace

Partition congruence_generated(const FiniteAlgebra& a, const std::vector<ElementPair>& pairs) {
  const std::size_t n = a.size();
  UnionFind uf(n);
  std::deque<ElementPair> work;
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) throw InvalidArgument("pair outside the carrier");
    work.emplace_back(u, v);
  }
  std::vector<Element> args;
  std::vector<Element> other;
  while (!work.empty()) {
    auto [u, v] = work.front();
    work.pop_front();
    if (!uf.unite(u, v)) continue;
    // Translations of the newly merged pair under every basic operation.
    for (std::size_t op = 0; op < a.signature().op_count(); ++op) {
      const std::size_t k = a.signature().op(op).arity;
      std::size_t rest = 1;
      for (std::size_t i = 1; i < k; ++i) rest *= n;
      args.resize(k);
      for (std::size_t pos = 0; pos < k; ++pos) {
        for (std::size_t code = 0; code < rest; ++code) {
          std::size_t c = code;
          for (std::size_t i = k; i-- > 0;) {
            if (i == pos) continue;
            args[i] = static_cast<Element>(c % n);
            c /= n;
          }
          args[pos] = u;
          Element lu = a.apply(op, args);
          args[pos] = v;
          Element lv = a.apply(op, args);
          if (lu != lv && uf.find(lu) != uf.find(lv)) work.emplace_back(lu, lv);
        }
      }
    }
  }
  return uf.partition();
}

Partition principal_congruence(const FiniteAlgebra& a, Element u, Element v) {
  return congruence_generated(a, {{u, v}});
}

namespace {
void check_guard(const FiniteAlgebra& a, std::size_t guard) {
  if (a.size() > guard) {
    throw GuardExceeded("congruence enumeration limited to carriers of size <= " +
                        std::to_string(guard) + " (got " + std::to_string(a.size()) + ")");
  }
}
}  // namespace

std::vector<Partition> all_congruences(const FiniteAlgebra& a, std::size_t guard) {
  check_guard(a, guard);
  const auto n = static_cast<Element>(a.size());
  std::vector<Partition> principals;
  for (Element u = 0; u < n; ++u) {
    for (Element v = u + 1; v < n; ++v) {
      auto p = principal_congruence(a, u, v);
      if (std::find(principals.begin(), principals.end(), p) == principals.end()) {
        principals.push_back(std::move(p));
      }
    }
  }
  std::set<Partition> found{Partition::discrete(n)};
  std::vector<Partition> frontier{Partition::discrete(n)};
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& c : frontier) {
      for (const auto& p : principals) {
        // Joins of congruences are the equivalence joins.
        auto j = join_equivalences(c, p);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::vector<Partition> all_congruences_by_filter(const FiniteAlgebra& a, std::size_t guard) {
  check_guard(a, guard);
  std::vector<Partition> out;
  for_each_partition(a.size(), [&](const Partition& p) {
    if (is_congruence(a, p)) out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

Quotient quotient(const FiniteAlgebra& a, const Partition& theta) {
  if (!is_congruence(a, theta)) throw InvalidArgument("quotient by a partition that is not a congruence");
  const std::size_t m = theta.block_count();
  std::vector<std::vector<Element>> tables;
  std::vector<Element> args;
  for (std::size_t op = 0; op < a.signature().op_count(); ++op) {
    const std::size_t k = a.signature().op(op).arity;
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= m;
    std::vector<Element> table(count);
    args.resize(k);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t c = idx;
      for (std::size_t i = k; i-- > 0;) {
        args[i] = theta.representative(c % m);
        c /= m;
      }
      table[idx] = static_cast<Element>(theta.block_of(a.apply(op, args)));
    }
    tables.push_back(std::move(table));
  }
  std::vector<Element> class_map(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    class_map[i] = static_cast<Element>(theta.block_of(static_cast<Element>(i)));
  }
  return {FiniteAlgebra(a.signature(), m, std::move(tables)), std::move(class_map)};
}

namespace {
// Calls `visit(args)` for every tuple of `arity` elements drawn from `set`.
template <typename Visit>
bool for_each_tuple(const std::vector<Element>& set, std::size_t arity, Visit visit) {
  std::vector<std::size_t> idx(arity, 0);
  std::vector<Element> args(arity);
  if (set.empty()) return true;
  while (true) {
    for (std::size_t i = 0; i < arity; ++i) args[i] = set[idx[i]];
    if (!visit(args)) return false;
    std::size_t i = arity;
    while (i > 0 && idx[i - 1] + 1 == set.size()) idx[--i] = 0;
    if (i == 0) return true;
    ++idx[i - 1];
  }
}
}  // namespace

std::vector<Element> subuniverse_closure(const FiniteAlgebra& a, std::vector<Element> generators) {
  std::vector<char> in(a.size(), 0);
  std::vector<Element> set;
  for (Element g : generators) {
    if (g >= a.size()) throw InvalidArgument("generator outside the carrier");
    if (!in[g]) {
      in[g] = 1;
      set.push_back(g);
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = set;
    for (std::size_t op = 0; op < a.signature().op_count(); ++op) {
      for_each_tuple(snapshot, a.signature().op(op).arity, [&](const std::vector<Element>& args) {
        Element r = a.apply(op, args);
        if (!in[r]) {
          in[r] = 1;
          set.push_back(r);
          grew = true;
        }
        return true;
      });
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

bool is_subuniverse(const FiniteAlgebra& a, const std::vector<Element>& set) {
  std::vector<char> in(a.size(), 0);
  for (Element e : set) {
    if (e >= a.size()) return false;
    in[e] = 1;
  }
  for (std::size_t op = 0; op < a.signature().op_count(); ++op) {
    bool closed = for_each_tuple(set, a.signature().op(op).arity,
                                 [&](const std::vector<Element>& args) { return in[a.apply(op, args)] != 0; });
    if (!closed) return false;
  }
  return true;
}

Subalgebra restrict_to(const FiniteAlgebra& a, std::vector<Element> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty()) throw InvalidArgument("cannot restrict to the empty set");
  if (!is_subuniverse(a, set)) throw InvalidArgument("set is not closed under the operations");
  std::vector<Element> index_of(a.size(), 0);
  for (std::size_t i = 0; i < set.size(); ++i) index_of[set[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> tables;
  for (std::size_t op = 0; op < a.signature().op_count(); ++op) {
    std::vector<Element> table;
    for_each_tuple(set, a.signature().op(op).arity, [&](const std::vector<Element>& args) {
      table.push_back(index_of[a.apply(op, args)]);
      return true;
    });
    tables.push_back(std::move(table));
  }
  return {FiniteAlgebra(a.signature(), set.size(), std::move(tables)), std::move(set)};
}

std::vector<Element> idempotent_elements(const FiniteAlgebra& a) {
  std::vector<Element> out;
  for (Element e = 0; e < a.size(); ++e) {
    if (is_subuniverse(a, {e})) out.push_back(e);
  }
  return out;
}

namespace {
void require_congruences(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta) {
  if (!is_congruence(a, alpha) || !is_congruence(a, beta)) {
    throw InvalidArgument("argument is not a congruence of the algebra");
  }
}
}  // namespace

Partition join(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta) {
  require_congruences(a, alpha, beta);
  return join_equivalences(alpha, beta);
}

bool permutable(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta) {
  require_congruences(a, alpha, beta);
  return compose(alpha, beta) == compose(beta, alpha);
}

bool three_permutable(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta) {
  require_congruences(a, alpha, beta);
  auto ra = Relation::from_partition(alpha);
  auto rb = Relation::from_partition(beta);
  return compose(compose(ra, rb), ra) == compose(compose(rb, ra), rb);
}

bool is_maltsev_on_classes(const FiniteAlgebra& a, const Partition& theta, const Term& p,
                           const std::vector<std::string>& vars) {
  if (vars.size() != 3) throw InvalidArgument("a Mal'tsev term needs exactly three variables");
  if (!is_congruence(a, theta)) throw InvalidArgument("partition is not a congruence");
  for (const auto& v : variable_sequence(p)) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
      throw InvalidArgument("term is not ternary in " + vars[0] + "," + vars[1] + "," + vars[2]);
    }
  }
  CompiledTerm term(p, a.signature(), vars);
  for (const auto& block : theta.blocks()) {
    for (Element u : block) {
      for (Element v : block) {
        std::array<Element, 3> ubb{u, v, v};
        std::array<Element, 3> uub{u, u, v};
        if (term(a, ubb) != u || term(a, uub) != v) return false;
      }
    }
  }
  return true;
}

FiniteAlgebra band_algebra_from(const std::vector<Element>& band_table, std::size_t n,
                                const Signature& sig) {
  if (band_table.size() != n * n) throw InvalidArgument("band table must be n x n");
  auto mul = [&](Element u, Element v) { return band_table[u * n + v]; };
  for (Element e : band_table) {
    if (e >= n) throw InvalidArgument("table entry outside the carrier");
  }
  for (Element u = 0; u < n; ++u) {
    if (mul(u, u) != u) throw InvalidArgument("table is not idempotent");
    for (Element v = 0; v < n; ++v) {
      for (Element w = 0; w < n; ++w) {
        if (mul(mul(u, v), w) != mul(u, mul(v, w))) throw InvalidArgument("table is not associative");
      }
    }
  }
  std::vector<std::vector<Element>> tables;
  std::vector<Element> args;
  for (std::size_t op = 0; op < sig.op_count(); ++op) {
    const std::size_t k = sig.op(op).arity;
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= n;
    std::vector<Element> table(count);
    args.resize(k);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t c = idx;
      for (std::size_t i = k; i-- > 0;) {
        args[i] = static_cast<Element>(c % n);
        c /= n;
      }
      Element acc = args[0];
      for (std::size_t i = 1; i < k; ++i) acc = mul(acc, args[i]);
      table[idx] = acc;
    }
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(sig, n, std::move(tables));
}

}  // namespace malcev
