#include "malcev/words.hpp"

#include <algorithm>
#include <set>

#include "malcev/error.hpp"

namespace malcev {

namespace {
void band_word_into(const Term& t, Word& out) {
  if (t.is_variable()) {
    out.push_back(t.head());
    return;
  }
  for (const auto& c : t.children()) band_word_into(c, out);
}
}  // namespace

Word band_word(const Term& t) {
  Word out;
  band_word_into(t, out);
  return out;
}

Word free_band_normal_form(const Word& w) {
  if (w.empty()) throw InvalidArgument("free band normal form of the empty word");
  const std::set<std::string> content(w.begin(), w.end());
  if (content.size() == 1) return {w.front()};

  // Longest prefix missing exactly one letter, and the letter completing it.
  std::set<std::string> seen;
  std::size_t i = 0;
  for (; i < w.size(); ++i) {
    seen.insert(w[i]);
    if (seen.size() == content.size()) break;
  }
  Word left = free_band_normal_form(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)));
  left.push_back(w[i]);

  seen.clear();
  std::size_t j = w.size();
  while (j-- > 0) {
    seen.insert(w[j]);
    if (seen.size() == content.size()) break;
  }
  Word right{w[j]};
  Word tail = free_band_normal_form(Word(w.begin() + static_cast<std::ptrdiff_t>(j) + 1, w.end()));
  right.insert(right.end(), tail.begin(), tail.end());

  // u·u = u lets the longest overlap at the seam collapse.
  std::size_t overlap = std::min(left.size(), right.size());
  for (; overlap > 0; --overlap) {
    if (std::equal(left.end() - static_cast<std::ptrdiff_t>(overlap), left.end(), right.begin())) break;
  }
  left.insert(left.end(), right.begin() + static_cast<std::ptrdiff_t>(overlap), right.end());
  return left;
}

std::string format_word(const Word& w) {
  bool single = std::all_of(w.begin(), w.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !single) out += "·";
    out += w[i];
  }
  return out;
}

Word parse_letters(const std::string& letters) {
  Word w;
  for (char c : letters) w.emplace_back(1, c);
  return w;
}

namespace {
void flatten_group(const Term& t, const GroupSyntax& syn, bool invert, GroupWord& out) {
  if (t.is_variable()) {
    out.push_back({t.head(), invert});
    return;
  }
  const auto& h = t.head();
  auto kids = t.children();
  // Each case lists factors left to right with their inversion flag, then
  // the factors are emitted reversed when the whole product is inverted.
  std::vector<std::pair<const Term*, bool>> factors;
  if (h == syn.multiply && kids.size() == 2) {
    factors = {{&kids[0], false}, {&kids[1], false}};
  } else if (!syn.inverse.empty() && h == syn.inverse && kids.size() == 1) {
    factors = {{&kids[0], true}};
  } else if (!syn.right_division.empty() && h == syn.right_division && kids.size() == 2) {
    factors = {{&kids[0], false}, {&kids[1], true}};
  } else if (!syn.left_division.empty() && h == syn.left_division && kids.size() == 2) {
    factors = {{&kids[0], true}, {&kids[1], false}};
  } else {
    throw SignatureMismatch("'" + h + "' is not a group operation");
  }
  if (invert) std::reverse(factors.begin(), factors.end());
  for (const auto& [term, inv] : factors) flatten_group(*term, syn, invert != inv, out);
}
}  // namespace

GroupWord free_group_reduce(const Term& t, const GroupSyntax& syntax) {
  GroupWord flat;
  flatten_group(t, syntax, false, flat);
  GroupWord stack;
  for (auto& letter : flat) {
    if (!stack.empty() && stack.back().name == letter.name && stack.back().inverse != letter.inverse) {
      stack.pop_back();
    } else {
      stack.push_back(std::move(letter));
    }
  }
  return stack;
}

std::string format_group_word(const GroupWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].name;
    if (w[i].inverse) out += "^-1";
  }
  return out;
}

}  // namespace malcev
