#ifndef MODINV_BRANCHING_TABLE_HPP
#define MODINV_BRANCHING_TABLE_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "modinv/branching/branching_matrix.hpp"
#include "modinv/embedded_data.hpp"
#include "modinv/invariants/named.hpp"
#include "modinv/modular/level_one.hpp"

namespace modinv {

/// Raw contents of a branching table file.
///
///   @version 1
///   @base su 7 7          (family n k)
///   @ext so 48            (level-one family and rank index)
///   @invariant E^(12)     (optional; B^t B must equal it)
///   # comment
///   name: (w) + 2x(w') + orbit(w'') + ...
///
/// orbit(w) is the full Z_n simple-current orbit of an SU(n)_k weight.
struct BranchingTable {
  std::map<std::string, std::string> meta;
  struct Term {
    std::int64_t mult = 1;
    bool orbit = false;
    std::vector<int> weight;
    std::string label;  // used when the base has no weights
  };
  std::vector<std::pair<std::string, std::vector<Term>>> rows;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

/// Splits on '+' outside parentheses.
inline std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline BranchingTable::Term parse_term(const std::string& text, int line) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::ParseError, "branching table line " + std::to_string(line) + ": " + why + " in '" + text + "'");
  };
  BranchingTable::Term t;
  std::string rest = text;
  if (rest.empty()) throw fail("empty term");
  if (std::isdigit(static_cast<unsigned char>(rest[0]))) {
    std::size_t pos = 0;
    while (pos < rest.size() && std::isdigit(static_cast<unsigned char>(rest[pos]))) ++pos;
    std::size_t after = pos;
    while (after < rest.size() && std::isspace(static_cast<unsigned char>(rest[after]))) ++after;
    if (after < rest.size() && (rest[after] == 'x' || rest[after] == '*')) {
      t.mult = std::stoll(rest.substr(0, pos));
      rest = trim(rest.substr(after + 1));
    }
  }
  if (rest.rfind("orbit", 0) == 0) {
    t.orbit = true;
    rest = trim(rest.substr(5));
  }
  if (!rest.empty() && rest.front() == '(') {
    if (rest.back() != ')') throw fail("unbalanced parentheses");
    auto w = LabelSet::parse_weight(rest);
    if (!w) throw fail("bad weight");
    t.weight = *w;
  } else {
    if (t.orbit) throw fail("orbit() needs a weight");
    t.label = rest;
  }
  if (t.mult <= 0) throw fail("non-positive multiplicity");
  return t;
}

}  // namespace detail

inline BranchingTable parse_branching_table(const std::string& text) {
  BranchingTable table;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = detail::trim(raw);
    if (s.empty() || s[0] == '#') continue;
    if (s[0] == '@') {
      const auto sp = s.find_first_of(" \t");
      table.meta[s.substr(1, sp == std::string::npos ? std::string::npos : sp - 1)] =
          sp == std::string::npos ? "" : detail::trim(s.substr(sp));
      continue;
    }
    const auto colon = s.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::ParseError, "branching table line " + std::to_string(line) + ": missing ':'");
    std::vector<BranchingTable::Term> terms;
    for (const auto& t : detail::split_terms(s.substr(colon + 1))) terms.push_back(detail::parse_term(t, line));
    table.rows.emplace_back(detail::trim(s.substr(0, colon)), std::move(terms));
  }
  if (auto it = table.meta.find("version"); it != table.meta.end() && it->second != "1")
    throw Error(ErrorCode::ParseError, "unsupported branching table version " + it->second);
  if (table.rows.empty()) throw Error(ErrorCode::ParseError, "branching table has no rows");
  return table;
}

/// Z_n action of SU(n)_k on Dynkin labels: (l1..l_{n-1}) -> (l0, l1..l_{n-2}).
inline std::vector<int> su_n_simple_current(const std::vector<int>& w, int k) {
  int sum = 0;
  for (int x : w) sum += x;
  std::vector<int> out{k - sum};
  out.insert(out.end(), w.begin(), w.end() - 1);
  return out;
}

/// Builds B from a parsed table. Throws BranchingTableCorrupt when orbit
/// expansion lands on a label already present in the row.
inline BranchingMatrix branching_from_table(const BranchingTable& table, std::shared_ptr<const LabelSet> base,
                                            std::shared_ptr<const LabelSet> ext = nullptr) {
  const std::size_t n = base->size();
  IntMatrix b(table.rows.size(), n);
  std::vector<std::string> names;
  std::vector<std::size_t> ext_index;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& [name, terms] = table.rows[r];
    names.push_back(name);
    if (ext) {
      const auto i = ext->find(name);
      if (!i) throw Error(ErrorCode::BranchingTableCorrupt, "'" + name + "' is not a label of " + ext->theory().display());
      ext_index.push_back(*i);
    }
    for (const auto& t : terms) {
      std::vector<std::size_t> members;
      if (t.weight.empty()) {
        members.push_back(base->index_of(t.label));
      } else if (!t.orbit) {
        members.push_back(base->index_of_weight(t.weight));
      } else {
        if (base->theory().family != "su")
          throw Error(ErrorCode::BranchingTableCorrupt, "orbit() is only defined for SU(n)_k");
        std::set<std::vector<int>> orbit;
        for (auto w = t.weight; orbit.insert(w).second;) w = su_n_simple_current(w, base->theory().k);
        for (const auto& w : orbit) members.push_back(base->index_of_weight(w));
      }
      for (std::size_t l : members) {
        if (t.orbit && b(r, l) != 0)
          throw Error(ErrorCode::BranchingTableCorrupt,
                      "orbit of " + LabelSet::format_weight(t.weight) + " collides with " + base->name(l) + " in row " + name);
        b(r, l) += t.mult;
      }
    }
  }
  return BranchingMatrix(std::move(base), std::move(names), std::move(b), std::move(ext), std::move(ext_index));
}

/// Names of the builtin embedding tables.
inline std::vector<std::string> embedding_names() {
  std::vector<std::string> out;
  for (const auto& [path, content] : embedded::files)
    if (path.rfind("branching/", 0) == 0) {
      std::string name(path.substr(10));
      out.push_back(name.substr(0, name.size() - 4));
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string embedded_file(const std::string& path) {
  for (const auto& [p, content] : embedded::files)
    if (p == path) return std::string(content);
  throw Error(ErrorCode::InvalidArgument, "no builtin data file " + path);
}

namespace detail {

inline std::string normalize_embedding_name(std::string name) {
  // "SU(2)_10<SO(5)_1" -> "su2_10-so5"
  std::string out;
  for (char ch : name) {
    if (ch == '<' || ch == '-') {
      out += '-';
    } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
  }
  if (auto dash = out.find('-'); dash != std::string::npos && out.size() > 2 && out.substr(out.size() - 2) == "_1")
    out.resize(out.size() - 2);
  return out;
}

inline std::shared_ptr<const LabelSet> labels_from_meta(const std::string& spec, bool level_one_theory) {
  std::istringstream in(spec);
  std::string family;
  int n = 0, k = 1;
  in >> family >> n;
  if (!level_one_theory) in >> k;
  if (in.fail()) throw Error(ErrorCode::ParseError, "bad theory metadata '" + spec + "'");
  if (!level_one_theory) {
    if (family != "su") throw Error(ErrorCode::ParseError, "base theory must be su n k");
    return su_n_k_labels(n, k);
  }
  return level_one<double>(family, n, PrecisionConfig::machine()).label_set_ptr();
}

}  // namespace detail

/// Builtin conformal-embedding branching: su2_10-so5, su2_28-g2, su3_5-su6,
/// su3_9-e6, su3_21-e7, su7_7-so48 (or spelled "SU(2)_10<SO(5)_1").
/// B^t B is compared with the named invariant when the table names one.
inline BranchingMatrix embedding_branching(const std::string& name) {
  const std::string key = detail::normalize_embedding_name(name);
  const auto names = embedding_names();
  if (std::find(names.begin(), names.end(), key) == names.end())
    throw Error(ErrorCode::InvalidArgument, "unknown embedding '" + name + "'");
  const auto table = parse_branching_table(embedded_file("branching/" + key + ".txt"));
  auto base = detail::labels_from_meta(table.meta.at("base"), false);
  std::shared_ptr<const LabelSet> ext;
  if (auto it = table.meta.find("ext"); it != table.meta.end()) ext = detail::labels_from_meta(it->second, true);
  auto b = branching_from_table(table, base, ext);
  b.set_name(key);
  if (auto it = table.meta.find("invariant"); it != table.meta.end()) {
    const std::string inv = it->second;
    const IntMatrix expected = inv.rfind("E^(", 0) == 0 ? su3_e_blocks(*base, inv)
                                                        : ade_e_blocks(*base, AdeDiagram::parse(inv).rank);
    if (b.invariant() != expected)
      throw Error(ErrorCode::DataMismatch, key + ": B^t B differs from the stored " + inv + " invariant");
  }
  return b;
}

}  // namespace modinv

#endif  // MODINV_BRANCHING_TABLE_HPP
