#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "malcev/algebra.hpp"

namespace malcev {

// Algebra text format (line oriented, `#` starts a comment):
//
//   size 4
//   elements a b c d        optional external names
//   op · 2
//   table ·
//   0 0 0 0
//   ...
//
// A `table` block lists n^arity entries in row-major order of argument tuples
// (first argument most significant); line breaks inside a block are free.
// Entries are indices or, if `elements` was given, names.
struct AlgebraText {
  FiniteAlgebra algebra;
  std::vector<std::string> names;  // empty when elements are plain indices
};

AlgebraText parse_algebra(std::string_view text);
AlgebraText read_algebra_file(const std::string& path);
// Canonical printing: `size`, optional `elements`, all `op` lines, then one
// table block per symbol with n entries per line (one line for unary ops).
std::string format_algebra(const FiniteAlgebra& a, const std::vector<std::string>& names = {});

// One `op <symbol> <arity>` line per symbol.
Signature parse_signature(std::string_view text);
std::string format_signature(const Signature& sig);

// Identity list: optional `op` lines followed by one `lhs = rhs` per line.
struct IdentityList {
  Signature signature;
  std::vector<Identity> identities;
  bool declares_signature = false;
};
// Identities are parsed against the declared `op` lines, or `fallback` when
// the text declares none.
IdentityList parse_identity_list(std::string_view text, const Signature& fallback);
IdentityList read_identity_file(const std::string& path, const Signature& fallback);

std::string read_text_file(const std::string& path);

}  // namespace malcev
