#ifndef MODINV_MODULAR_MODULAR_DATA_HPP
#define MODINV_MODULAR_MODULAR_DATA_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/modular/label_set.hpp"
#include "modinv/numerics/birkhoff.hpp"
#include "modinv/numerics/dense_matrix.hpp"
#include "modinv/numerics/precision.hpp"
#include "modinv/validation.hpp"

namespace modinv {

/// Labels, S, T (as a phase vector), quantum dimensions, central charge
/// (exact, mod 8), z = sum d^2 omega, and the conjugation permutation.
template <class Real>
class ModularData {
 public:
  using real_type = Real;

  ModularData(std::shared_ptr<const LabelSet> labels, ComplexMatrix<Real> s, Rational c, Permutation conj,
              PrecisionConfig cfg)
      : labels_(std::move(labels)), s_(std::move(s)), c_(mod_n(c, 8)), conj_(std::move(conj)), cfg_(cfg) {
    const std::size_t n = labels_->size();
    if (s_.rows() != n || s_.cols() != n) throw Error(ErrorCode::InvalidArgument, "S does not match label count");
    if (conj_.size() != n) throw Error(ErrorCode::InvalidArgument, "conjugation does not match label count");
    const Complex<Real> central = root_of_unity<Real>(-c_ / 24);
    t_.reserve(n);
    d_.reserve(n);
    z_ = Complex<Real>(0);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex<Real> omega = root_of_unity<Real>(labels_->h(i));
      t_.push_back(central * omega);
      d_.push_back(s_(0, i).real() / s_(0, 0).real());
      z_ += d_.back() * d_.back() * omega;
    }
  }

  const LabelSet& labels() const noexcept { return *labels_; }
  std::shared_ptr<const LabelSet> label_set_ptr() const noexcept { return labels_; }
  const TheoryId& theory() const noexcept { return labels_->theory(); }
  std::size_t size() const noexcept { return labels_->size(); }

  const ComplexMatrix<Real>& S() const noexcept { return s_; }
  const Complex<Real>& S(std::size_t i, std::size_t j) const { return s_(i, j); }
  const std::vector<Complex<Real>>& T() const noexcept { return t_; }
  const std::vector<Real>& d() const noexcept { return d_; }
  const Rational& c() const noexcept { return c_; }
  const Complex<Real>& z() const noexcept { return z_; }
  const Permutation& conjugation() const noexcept { return conj_; }
  const PrecisionConfig& config() const noexcept { return cfg_; }

  /// omega_lambda = exp(2 pi i h_lambda)
  Complex<Real> omega(std::size_t i) const { return root_of_unity<Real>(labels_->h(i)); }

  /// Sum of d^2, i.e. |z|^2.
  Real global_index() const {
    Real sum(0);
    for (const auto& x : d_) sum += x * x;
    return sum;
  }

 private:
  std::shared_ptr<const LabelSet> labels_;
  ComplexMatrix<Real> s_;
  std::vector<Complex<Real>> t_;
  std::vector<Real> d_;
  Rational c_;
  Complex<Real> z_;
  Permutation conj_;
  PrecisionConfig cfg_;
};

/// Rows on which the O(n^2)-per-row identities are checked. Every row is used
/// up to `full_rows`; beyond that a deterministic spread of rows (always
/// including the vacuum and the last label).
inline std::vector<std::size_t> sample_rows(std::size_t n, std::size_t full_rows = 400, std::size_t samples = 48) {
  std::vector<std::size_t> rows;
  if (n <= full_rows) {
    for (std::size_t i = 0; i < n; ++i) rows.push_back(i);
    return rows;
  }
  for (std::size_t s = 0; s < samples; ++s) rows.push_back(s * (n - 1) / (samples - 1));
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

/// The modular-group identities of md, each with its residual.
template <class Real>
ValidationReport verify_modular(const ModularData<Real>& md, const PrecisionConfig& cfg) {
  using std::abs;
  const std::size_t n = md.size();
  const auto& s = md.S();
  const auto& t = md.T();
  const double tol = cfg.validation_tol();
  const auto rows = sample_rows(n);
  const std::string scope = rows.size() == n ? "" : "checked on " + std::to_string(rows.size()) + " sampled rows";
  ValidationReport report;

  Real unitarity(0), tstst(0), square(0);
  std::vector<Complex<Real>> st(n);
  for (std::size_t i : rows) {
    for (std::size_t k = 0; k < n; ++k) st[k] = s(i, k) * t[k];
    for (std::size_t j = 0; j < n; ++j) {
      Complex<Real> u(0), p(0), q(0);
      for (std::size_t k = 0; k < n; ++k) {
        u += s(i, k) * std::conj(s(j, k));
        p += st[k] * s(k, j);
        q += s(i, k) * s(k, j);
      }
      if (i == j) u -= Real(1);
      unitarity = std::max<Real>(unitarity, abs(u));
      tstst = std::max<Real>(tstst, abs(t[i] * p * t[j] - s(i, j)));
      if (j == md.conjugation()[i]) q -= Real(1);
      square = std::max<Real>(square, abs(q));
    }
  }
  report.add_residual("S unitary", to_double(unitarity), tol, scope);

  Real asym(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) asym = std::max<Real>(asym, abs(s(i, j) - s(j, i)));
  report.add_residual("S symmetric", to_double(asym), tol);
  report.add_residual("TSTST = S", to_double(tstst), tol, scope);

  bool involution = md.conjugation().size() == n && md.conjugation()[0] == 0;
  for (std::size_t i = 0; involution && i < n; ++i)
    involution = md.conjugation()[i] < n && md.conjugation()[md.conjugation()[i]] == i;
  report.add_condition("conjugation is an involution fixing 0", involution);
  report.add_residual("S^2 = C", to_double(square), tol, scope);

  Real worst_vacuum(0);
  bool positive = true;
  for (std::size_t j = 0; j < n; ++j) {
    positive = positive && s(0, j).real() > 0;
    worst_vacuum = std::max<Real>(worst_vacuum, abs(s(0, j).imag()));
  }
  report.add_condition("S_0l > 0", positive && worst_vacuum <= tol);

  Real t_err(0);
  const Complex<Real> central = root_of_unity<Real>(-md.c() / 24);
  for (std::size_t i = 0; i < n; ++i) t_err = std::max<Real>(t_err, abs(t[i] - central * md.omega(i)));
  report.add_residual("T = exp(-i pi c/12) omega", to_double(t_err), tol);

  const Real mod_z = abs(md.z());
  report.add_residual("|z| = 1/S_00", to_double(abs(mod_z * s(0, 0).real() - Real(1))), tol);
  report.add_residual("exp(i pi c/4) = z/|z|", to_double(abs(root_of_unity<Real>(md.c() / 8) - md.z() / mod_z)), tol);
  return report;
}

/// Conjugation read off from S^2 (O(n^3)).
template <class Real>
Permutation conjugation_from_s(const ComplexMatrix<Real>& s, const PrecisionConfig& cfg) {
  using std::abs;
  const std::size_t n = s.rows();
  Permutation conj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex<Real> q(0);
      for (std::size_t k = 0; k < n; ++k) q += s(i, k) * s(k, j);
      if (abs(q - Real(1)) <= Real(cfg.int_tol)) {
        if (conj[i] != n) throw Error(ErrorCode::NotAPermutation, "S^2 has two unit entries in a row");
        conj[i] = j;
      } else if (abs(q) > Real(cfg.int_tol)) {
        throw Error(ErrorCode::NotAPermutation, "S^2 entry is neither 0 nor 1");
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    if (conj[i] == n) throw Error(ErrorCode::NotAPermutation, "S^2 row without a unit entry");
  return conj;
}

/// C = S^2 as a permutation.
template <class Real>
const Permutation& charge_conjugation(const ModularData<Real>& md) {
  return md.conjugation();
}

/// Builds modular data and throws `code` unless every identity holds.
template <class Real>
ModularData<Real> assemble_modular_data(std::shared_ptr<const LabelSet> labels, ComplexMatrix<Real> s, Rational c,
                                        std::optional<Permutation> conj, const PrecisionConfig& cfg,
                                        ErrorCode code = ErrorCode::ValidationFailed) {
  const std::string what = labels->theory().display();
  Permutation p;
  if (conj) {
    p = std::move(*conj);
  } else {
    try {
      p = conjugation_from_s(s, cfg);
    } catch (const Error& e) {
      throw Error(code, what + ": " + e.what());
    }
  }
  ModularData<Real> md(std::move(labels), std::move(s), c, std::move(p), cfg);
  verify_modular(md, cfg).require(code, what);
  return md;
}

}  // namespace modinv

#endif  // MODINV_MODULAR_MODULAR_DATA_HPP
