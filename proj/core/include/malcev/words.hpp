#pragma once

#include <string>
#include <vector>

#include "malcev/term.hpp"

namespace malcev {

// Word over variable names.
using Word = std::vector<std::string>;

// Band translation of a term: unary symbols are transparent, an n-ary symbol
// concatenates the words of its arguments.
Word band_word(const Term& t);

// Canonical representative in the free band: two nonempty words get the same
// form iff they are equal in every band. Throws InvalidArgument on an empty
// word.
Word free_band_normal_form(const Word& w);

// Letters concatenated when all are single characters, otherwise joined by
// `·`.
std::string format_word(const Word& w);
Word parse_letters(const std::string& letters);  // "xyx" -> {x, y, x}

struct GroupLetter {
  std::string name;
  bool inverse = false;
  friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
};
using GroupWord = std::vector<GroupLetter>;

// How group operations are spelled in a signature. Empty strings mark absent
// symbols. `/` is x·y⁻¹ and `\` is x⁻¹·y.
struct GroupSyntax {
  std::string multiply = "·";
  std::string inverse = "inv";
  std::string right_division;
  std::string left_division;
};

// Flattens to letters and cancels adjacent inverse pairs; the empty word is
// the group identity.
GroupWord free_group_reduce(const Term& t, const GroupSyntax& syntax = {});
std::string format_group_word(const GroupWord& w);  // `x y^-1`, `e` when empty

}  // namespace malcev
