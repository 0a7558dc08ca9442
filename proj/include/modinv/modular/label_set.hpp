#ifndef MODINV_MODULAR_LABEL_SET_HPP
#define MODINV_MODULAR_LABEL_SET_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/numerics/precision.hpp"

namespace modinv {

/// Which theory a label set belongs to. `family` is one of
/// su, so, e6, e7, e8, g2, zn; n is the rank/modulus, k the level, a the
/// quadratic-form coefficient for zn.
struct TheoryId {
  std::string family;
  int n = 0;
  int k = 0;
  int a = 0;

  std::string display() const {
    if (family == "su") return "SU(" + std::to_string(n) + ")_" + std::to_string(k);
    if (family == "so") return "SO(" + std::to_string(n) + ")_1";
    if (family == "zn") return "Z_" + std::to_string(n) + "(a=" + std::to_string(a) + ")";
    std::string up = family;
    for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return up + "_1";
  }

  friend bool operator==(const TheoryId&, const TheoryId&) = default;
};

/// Ordered labels of a theory. Index 0 is the vacuum. Conformal weights are
/// exact rationals reduced mod 1; Dynkin weights are kept for SU(n)_k.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(TheoryId theory, std::vector<std::string> names, std::vector<Rational> h,
           std::vector<std::vector<int>> weights = {})
      : theory_(std::move(theory)), names_(std::move(names)), h_(std::move(h)), weights_(std::move(weights)) {
    if (names_.size() != h_.size()) throw Error(ErrorCode::InvalidArgument, "names and weights differ in length");
    if (!weights_.empty() && weights_.size() != names_.size())
      throw Error(ErrorCode::InvalidArgument, "Dynkin weights differ in length from names");
    for (auto& x : h_) x = mod1(x);
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (!by_name_.emplace(names_[i], i).second)
        throw Error(ErrorCode::InvalidArgument, "duplicate label name " + names_[i]);
    for (std::size_t i = 0; i < weights_.size(); ++i) by_weight_.emplace(weights_[i], i);
  }

  const TheoryId& theory() const noexcept { return theory_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Rational& h(std::size_t i) const { return h_.at(i); }
  const std::vector<Rational>& conformal_weights() const noexcept { return h_; }
  bool has_weights() const noexcept { return !weights_.empty(); }
  const std::vector<int>& weight(std::size_t i) const { return weights_.at(i); }

  std::optional<std::size_t> find(const std::string& name) const {
    if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
    if (auto w = parse_weight(name); w && has_weights()) return find_weight(*w);
    return std::nullopt;
  }

  /// Accepts a label name, a Dynkin weight "(a,b,...)" or "a b ...", or a
  /// bare index "#i".
  std::size_t index_of(const std::string& name) const {
    if (name.size() > 1 && name[0] == '#') {
      const auto i = static_cast<std::size_t>(std::stoul(name.substr(1)));
      if (i < size()) return i;
    }
    if (auto i = find(name)) return *i;
    throw Error(ErrorCode::InvalidArgument, "unknown label '" + name + "' for " + theory_.display());
  }

  std::optional<std::size_t> find_weight(const std::vector<int>& w) const {
    if (auto it = by_weight_.find(w); it != by_weight_.end()) return it->second;
    return std::nullopt;
  }

  std::size_t index_of_weight(const std::vector<int>& w) const {
    if (auto i = find_weight(w)) return *i;
    throw Error(ErrorCode::InvalidArgument, "weight " + format_weight(w) + " is not a label of " + theory_.display());
  }

  static std::string format_weight(const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
  }

  static std::optional<std::vector<int>> parse_weight(const std::string& text) {
    std::string t;
    for (char ch : text) t += (ch == '(' || ch == ')' || ch == ',') ? ' ' : ch;
    std::istringstream in(t);
    std::vector<int> w;
    int v;
    while (in >> v) w.push_back(v);
    if (!in.eof() || w.empty()) return std::nullopt;
    return w;
  }

 private:
  TheoryId theory_;
  std::vector<std::string> names_;
  std::vector<Rational> h_;
  std::vector<std::vector<int>> weights_;
  std::map<std::string, std::size_t> by_name_;
  std::map<std::vector<int>, std::size_t> by_weight_;
};

}  // namespace modinv

#endif  // MODINV_MODULAR_LABEL_SET_HPP
