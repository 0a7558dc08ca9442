#ifndef MODINV_FUSION_SECTOR_VECTOR_HPP
#define MODINV_FUSION_SECTOR_VECTOR_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/modular/label_set.hpp"
#include "modinv/numerics/birkhoff.hpp"

namespace modinv {

/// Integer (possibly negative) combination of labels, e.g. [l5] + [l3] - [l7].
class SectorVector {
 public:
  SectorVector() = default;
  explicit SectorVector(std::shared_ptr<const LabelSet> labels)
      : labels_(std::move(labels)), coeffs_(labels_->size(), 0) {}
  SectorVector(std::shared_ptr<const LabelSet> labels, std::vector<std::int64_t> coeffs)
      : labels_(std::move(labels)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != labels_->size()) throw Error(ErrorCode::InvalidArgument, "sector vector length mismatch");
  }

  static SectorVector unit(std::shared_ptr<const LabelSet> labels, std::size_t i) {
    SectorVector v(std::move(labels));
    v.coeffs_.at(i) = 1;
    return v;
  }

  /// Sum of the named labels, each with multiplicity one.
  static SectorVector sum_of(std::shared_ptr<const LabelSet> labels, const std::vector<std::string>& names) {
    SectorVector v(labels);
    for (const auto& n : names) v.coeffs_[labels->index_of(n)] += 1;
    return v;
  }

  static SectorVector sum_of(std::shared_ptr<const LabelSet> labels, const std::vector<std::size_t>& indices) {
    SectorVector v(std::move(labels));
    for (auto i : indices) v.coeffs_.at(i) += 1;
    return v;
  }

  /// Parses "a + 2 b - c" where a, b, c are label names or weights.
  static SectorVector parse(std::shared_ptr<const LabelSet> labels, const std::string& text);

  const LabelSet& labels() const { return *labels_; }
  const std::shared_ptr<const LabelSet>& label_set_ptr() const noexcept { return labels_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  std::int64_t& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

  bool is_physical() const {
    for (auto c : coeffs_)
      if (c < 0) return false;
    return true;
  }

  bool is_zero() const {
    for (auto c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  SectorVector& operator+=(const SectorVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  SectorVector& operator-=(const SectorVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  SectorVector& operator*=(std::int64_t s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend SectorVector operator+(SectorVector a, const SectorVector& b) { return a += b; }
  friend SectorVector operator-(SectorVector a, const SectorVector& b) { return a -= b; }
  friend SectorVector operator*(std::int64_t s, SectorVector a) { return a *= s; }
  friend bool operator==(const SectorVector& a, const SectorVector& b) {
    return a.labels_ == b.labels_ && a.coeffs_ == b.coeffs_;
  }

  /// Terms in label order, e.g. "(0) + 2(4) - (7)"; "0" for the zero vector.
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const auto c = coeffs_[i];
      if (c == 0) continue;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      const auto m = c < 0 ? -c : c;
      if (m != 1) os << m;
      os << "[" << labels_->name(i) << "]";
      first = false;
    }
    return first ? "0" : os.str();
  }

  void check_compatible(const SectorVector& o) const {
    if (labels_ != o.labels_ && (!labels_ || !o.labels_ || labels_->names() != o.labels_->names()))
      throw Error(ErrorCode::InvalidArgument, "sector vectors over different label sets");
  }

 private:
  std::shared_ptr<const LabelSet> labels_;
  std::vector<std::int64_t> coeffs_;
};

inline SectorVector SectorVector::parse(std::shared_ptr<const LabelSet> labels, const std::string& text) {
  SectorVector v(labels);
  std::size_t pos = 0;
  int sign = 1;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) throw Error(ErrorCode::ParseError, "empty sector expression");
  while (pos < text.size()) {
    skip();
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    }
    std::int64_t mult = 1;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    // a bare number followed by '*' or '[' or '(' is a multiplicity
    std::size_t after = pos;
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
    if (pos > start && after < text.size() && (text[after] == '*' || text[after] == '[' || text[after] == '(')) {
      mult = std::stoll(text.substr(start, pos - start));
      pos = after + (text[after] == '*' ? 1 : 0);
      skip();
    } else {
      pos = start;
    }
    std::string token;
    if (pos < text.size() && (text[pos] == '[' || text[pos] == '(')) {
      const char close = text[pos] == '[' ? ']' : ')';
      const auto end = text.find(close, pos);
      if (end == std::string::npos) throw Error(ErrorCode::ParseError, "unbalanced bracket in '" + text + "'");
      token = text[pos] == '[' ? text.substr(pos + 1, end - pos - 1) : text.substr(pos, end - pos + 1);
      pos = end + 1;
    } else {
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '+' &&
             text[pos] != '-')
        token += text[pos++];
    }
    if (token.empty()) throw Error(ErrorCode::ParseError, "missing label in '" + text + "'");
    v.coeffs_[labels->index_of(token)] += sign * mult;
    sign = 1;
    skip();
  }
  return v;
}

/// Coefficients permuted by a conjugation: result[conj[i]] = v[i].
inline SectorVector conjugate(const SectorVector& v, const Permutation& conj) {
  SectorVector out(v.label_set_ptr());
  for (std::size_t i = 0; i < v.size(); ++i) out[conj[i]] += v[i];
  return out;
}

/// sum_nu u_nu v_nu
inline std::int64_t pairing(const SectorVector& u, const SectorVector& v) {
  u.check_compatible(v);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace modinv

#endif  // MODINV_FUSION_SECTOR_VECTOR_HPP
