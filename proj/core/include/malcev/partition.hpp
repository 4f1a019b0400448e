#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "malcev/algebra.hpp"

namespace malcev {

// Equivalence relation on {0, ..., n-1}, stored in canonical form: blocks are
// numbered 0, 1, ... in order of their least element.
class Partition {
 public:
  Partition() = default;
  // Any labelling; renumbered canonically.
  explicit Partition(const std::vector<std::size_t>& labels);

  static Partition discrete(std::size_t n);
  static Partition total(std::size_t n);
  // Elements missing from `blocks` become singletons. Throws InvalidArgument
  // on overlap or out-of-range elements.
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks);

  std::size_t size() const { return block_of_.size(); }
  std::size_t block_count() const { return block_count_; }
  std::size_t block_of(Element e) const { return block_of_.at(e); }
  const std::vector<std::size_t>& labels() const { return block_of_; }
  bool same(Element a, Element b) const { return block_of_.at(a) == block_of_.at(b); }
  std::vector<std::vector<Element>> blocks() const;
  std::vector<Element> block(std::size_t index) const;
  Element representative(std::size_t block_index) const { return reps_.at(block_index); }

  bool is_discrete() const { return block_count_ == size(); }
  bool is_total() const { return block_count_ == 1; }
  // this ⊆ other as relations.
  bool refines(const Partition& other) const;

  // `{{0,1},{2,3}}`
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.block_of_ == b.block_of_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.block_of_ < b.block_of_;
  }

 private:
  std::vector<std::size_t> block_of_;
  std::vector<Element> reps_;
  std::size_t block_count_ = 0;
};

Partition meet(const Partition& a, const Partition& b);
// Join as equivalence relations (transitive closure of the union).
Partition join_equivalences(const Partition& a, const Partition& b);

// Parses `{{0,1},{2,3}}` or `0,1|2|3`; unlisted elements become singletons.
Partition parse_partition(const std::string& text, std::size_t n);

// Calls `visit` with every partition of an n-element set (restricted-growth
// order). Stops early when `visit` returns false.
void for_each_partition(std::size_t n, const std::function<bool(const Partition&)>& visit);
std::size_t bell_number(std::size_t n);

// Binary relation on {0, ..., n-1} as a dense boolean matrix.
class Relation {
 public:
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}
  static Relation from_partition(const Partition& p);
  static Relation identity(std::size_t n);

  std::size_t size() const { return n_; }
  bool contains(Element a, Element b) const { return bits_[a * n_ + b] != 0; }
  void insert(Element a, Element b) { bits_[a * n_ + b] = 1; }
  bool is_subset_of(const Relation& other) const;
  std::size_t pair_count() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_;
  std::vector<unsigned char> bits_;
};

Relation compose(const Relation& r, const Relation& s);
Relation compose(const Partition& a, const Partition& b);

}  // namespace malcev
