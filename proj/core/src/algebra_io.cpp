#include "malcev/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "malcev/error.hpp"

namespace malcev {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string strip_comment(std::string line) {
  auto pos = line.find('#');
  if (pos != std::string::npos) line.erase(pos);
  return line;
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    auto v = std::stoul(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid " + what + " '" + s + "'");
  }
}

}  // namespace

AlgebraText parse_algebra(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<std::size_t> n;
  std::vector<std::string> names;
  Signature sig;
  std::vector<std::optional<std::vector<Element>>> tables;
  std::optional<std::size_t> current;  // op whose table is being read
  std::string line;
  std::size_t lineno = 0;

  auto element_of = [&](const std::string& tok) -> Element {
    if (!names.empty()) {
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == tok) return static_cast<Element>(i);
      }
    }
    auto v = parse_count(tok, "element");
    if (v >= *n) throw ParseError("element " + tok + " outside the carrier");
    return static_cast<Element>(v);
  };
  auto expected_entries = [&](std::size_t op) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < sig.op(op).arity; ++i) c *= *n;
    return c;
  };
  auto finish_table = [&] {
    if (current && tables[*current]->size() != expected_entries(*current)) {
      throw ParseError("table '" + sig.op(*current).name + "' has " +
                       std::to_string(tables[*current]->size()) + " entries, expected " +
                       std::to_string(expected_entries(*current)));
    }
    current.reset();
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto words = split_words(strip_comment(line));
    if (words.empty()) continue;
    const std::string& kw = words[0];
    try {
      if (kw == "size") {
        if (n) throw ParseError("duplicate 'size'");
        if (words.size() != 2) throw ParseError("expected 'size <n>'");
        n = parse_count(words[1], "size");
        if (*n == 0) throw ParseError("carrier size must be positive");
      } else if (kw == "elements") {
        if (!n) throw ParseError("'elements' before 'size'");
        names.assign(words.begin() + 1, words.end());
        if (names.size() != *n) throw ParseError("'elements' must list exactly size names");
      } else if (kw == "op") {
        finish_table();
        if (words.size() != 3) throw ParseError("expected 'op <symbol> <arity>'");
        try {
          sig.add(words[1], parse_count(words[2], "arity"));
        } catch (const InvalidArgument& e) {
          throw ParseError(e.what());
        }
        tables.emplace_back();
      } else if (kw == "table") {
        finish_table();
        if (!n) throw ParseError("'table' before 'size'");
        if (words.size() != 2) throw ParseError("expected 'table <symbol>'");
        auto idx = sig.find(words[1]);
        if (!idx) throw ParseError("table for undeclared symbol '" + words[1] + "'");
        if (tables[*idx]) throw ParseError("duplicate table for '" + words[1] + "'");
        tables[*idx].emplace();
        current = *idx;
      } else {
        if (!current) throw ParseError("unexpected '" + kw + "'");
        for (const auto& w : words) tables[*current]->push_back(element_of(w));
        if (tables[*current]->size() > expected_entries(*current)) {
          throw ParseError("too many entries in table '" + sig.op(*current).name + "'");
        }
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  finish_table();
  if (!n) throw ParseError("missing 'size'");
  std::vector<std::vector<Element>> out;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (!tables[i]) throw ParseError("missing table for '" + sig.op(i).name + "'");
    out.push_back(std::move(*tables[i]));
  }
  return {FiniteAlgebra(std::move(sig), *n, std::move(out)), std::move(names)};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AlgebraText read_algebra_file(const std::string& path) { return parse_algebra(read_text_file(path)); }

std::string format_algebra(const FiniteAlgebra& a, const std::vector<std::string>& names) {
  std::ostringstream out;
  auto element = [&](Element e) -> std::string {
    return names.empty() ? std::to_string(e) : names.at(e);
  };
  out << "size " << a.size() << '\n';
  if (!names.empty()) {
    out << "elements";
    for (const auto& nm : names) out << ' ' << nm;
    out << '\n';
  }
  out << format_signature(a.signature());
  for (std::size_t op = 0; op < a.signature().op_count(); ++op) {
    out << "table " << a.signature().op(op).name << '\n';
    auto table = a.table(op);
    for (std::size_t i = 0; i < table.size(); ++i) {
      out << element(table[i]);
      out << (((i + 1) % a.size() == 0) ? '\n' : ' ');
    }
  }
  return out.str();
}

Signature parse_signature(std::string_view text) {
  std::istringstream in{std::string(text)};
  Signature sig;
  std::string line;
  while (std::getline(in, line)) {
    auto words = split_words(strip_comment(line));
    if (words.empty()) continue;
    if (words.size() != 3 || words[0] != "op") throw ParseError("expected 'op <symbol> <arity>'");
    try {
      sig.add(words[1], parse_count(words[2], "arity"));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  return sig;
}

std::string format_signature(const Signature& sig) {
  std::string out;
  for (const auto& op : sig.ops()) out += "op " + op.name + " " + std::to_string(op.arity) + "\n";
  return out;
}

IdentityList parse_identity_list(std::string_view text, const Signature& fallback) {
  std::istringstream in{std::string(text)};
  IdentityList out;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto stripped = strip_comment(line);
    auto words = split_words(stripped);
    if (words.empty()) continue;
    if (words[0] == "op") {
      if (!lines.empty()) throw ParseError("'op' lines must precede identities");
      if (words.size() != 3) throw ParseError("expected 'op <symbol> <arity>'");
      try {
        out.signature.add(words[1], parse_count(words[2], "arity"));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
      out.declares_signature = true;
    } else {
      lines.push_back(stripped);
    }
  }
  if (!out.declares_signature) out.signature = fallback;
  for (const auto& l : lines) out.identities.push_back(parse_identity(l, out.signature));
  return out;
}

IdentityList read_identity_file(const std::string& path, const Signature& fallback) {
  return parse_identity_list(read_text_file(path), fallback);
}

}  // namespace malcev
