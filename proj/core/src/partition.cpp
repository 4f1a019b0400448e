#include "malcev/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "malcev/error.hpp"

namespace malcev {

Partition::Partition(const std::vector<std::size_t>& labels) {
  block_of_.resize(labels.size());
  std::vector<std::pair<std::size_t, std::size_t>> seen;  // label -> canonical id
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], seen.size());
      reps_.push_back(static_cast<Element>(i));
      block_of_[i] = seen.size() - 1;
    } else {
      block_of_[i] = it->second;
    }
  }
  block_count_ = seen.size();
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return Partition(labels);
}

Partition Partition::total(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(n, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Element e : blocks[b]) {
      if (e >= n) throw InvalidArgument("element " + std::to_string(e) + " outside the carrier");
      if (labels[e] != kUnset) {
        throw InvalidArgument("element " + std::to_string(e) + " listed in two blocks");
      }
      labels[e] = b;
    }
  }
  std::size_t next = blocks.size();
  for (auto& l : labels) {
    if (l == kUnset) l = next++;
  }
  return Partition(labels);
}

std::vector<std::vector<Element>> Partition::blocks() const {
  std::vector<std::vector<Element>> out(block_count_);
  for (std::size_t i = 0; i < block_of_.size(); ++i) {
    out[block_of_[i]].push_back(static_cast<Element>(i));
  }
  return out;
}

std::vector<Element> Partition::block(std::size_t index) const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < block_of_.size(); ++i) {
    if (block_of_[i] == index) out.push_back(static_cast<Element>(i));
  }
  return out;
}

bool Partition::refines(const Partition& other) const {
  if (other.size() != size()) throw InvalidArgument("partitions of different carriers");
  // Each block must map into a single block of `other`.
  std::vector<std::size_t> target(block_count_, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < size(); ++i) {
    auto& t = target[block_of_[i]];
    if (t == static_cast<std::size_t>(-1)) {
      t = other.block_of_[i];
    } else if (t != other.block_of_[i]) {
      return false;
    }
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '{';
  auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) out << ',';
    out << '{';
    for (std::size_t i = 0; i < bs[b].size(); ++i) {
      if (i) out << ',';
      out << bs[b][i];
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw InvalidArgument("partitions of different carriers");
  std::vector<std::size_t> labels(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    labels[i] = a.block_of(static_cast<Element>(i)) * b.block_count() + b.block_of(static_cast<Element>(i));
  }
  return Partition(labels);
}

namespace {
std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}
}  // namespace

Partition join_equivalences(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw InvalidArgument("partitions of different carriers");
  std::vector<std::size_t> parent(a.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto unite_blocks = [&](const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto r = find_root(parent, p.representative(p.block_of(static_cast<Element>(i))));
      auto s = find_root(parent, i);
      if (r != s) parent[s] = r;
    }
  };
  unite_blocks(a);
  unite_blocks(b);
  std::vector<std::size_t> labels(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) labels[i] = find_root(parent, i);
  return Partition(labels);
}

Partition parse_partition(const std::string& text, std::size_t n) {
  std::vector<std::vector<Element>> blocks;
  std::vector<Element> current;
  std::string number;
  int depth = 0;
  bool bar_syntax = text.find('{') == std::string::npos;
  auto flush_number = [&] {
    if (number.empty()) return;
    current.push_back(static_cast<Element>(std::stoul(number)));
    number.clear();
  };
  auto flush_block = [&] {
    flush_number();
    if (!current.empty()) blocks.push_back(current);
    current.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      number += c;
    } else if (c == ',' || c == ' ') {
      flush_number();
    } else if (c == '{') {
      ++depth;
      if (depth > 2) throw ParseError("partition nested too deeply");
    } else if (c == '}') {
      if (depth == 2) flush_block();
      --depth;
      if (depth < 0) throw ParseError("unbalanced '}' in partition");
    } else if (c == '|' && bar_syntax) {
      flush_block();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in partition");
    }
  }
  if (depth != 0) throw ParseError("unbalanced braces in partition");
  flush_block();
  return Partition::from_blocks(n, blocks);
}

void for_each_partition(std::size_t n, const std::function<bool(const Partition&)>& visit) {
  if (n == 0) {
    visit(Partition(std::vector<std::size_t>{}));
    return;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    if (!visit(Partition(a))) return;
    std::size_t i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::size_t bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<std::size_t> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

Relation Relation::from_partition(const Partition& p) {
  Relation r(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.same(static_cast<Element>(a), static_cast<Element>(b))) {
        r.insert(static_cast<Element>(a), static_cast<Element>(b));
      }
    }
  }
  return r;
}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t a = 0; a < n; ++a) r.insert(static_cast<Element>(a), static_cast<Element>(a));
  return r;
}

bool Relation::is_subset_of(const Relation& other) const {
  if (other.n_ != n_) throw InvalidArgument("relations on different carriers");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

std::size_t Relation::pair_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

Relation compose(const Relation& r, const Relation& s) {
  if (r.size() != s.size()) throw InvalidArgument("relations on different carriers");
  const std::size_t n = r.size();
  Relation out(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!r.contains(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (s.contains(b, c)) out.insert(a, c);
      }
    }
  }
  return out;
}

Relation compose(const Partition& a, const Partition& b) {
  return compose(Relation::from_partition(a), Relation::from_partition(b));
}

}  // namespace malcev
