#ifndef MODINV_BRANCHING_BRANCHING_MATRIX_HPP
#define MODINV_BRANCHING_BRANCHING_MATRIX_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modinv/invariants/modular_invariant.hpp"
#include "modinv/numerics/birkhoff.hpp"

namespace modinv {

/// b_{tau,l}: multiplicity of base label l in extended sector tau.
///
/// Rows may be tied to labels of an extended theory (`ext_labels`); rows
/// from a resolved fixed point share an extended label or have none.
/// Rows must be homogeneous in h unless the matrix is built as nonlocal.
class BranchingMatrix {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BranchingMatrix(std::shared_ptr<const LabelSet> base, std::vector<std::string> ext_names, IntMatrix b,
                  std::shared_ptr<const LabelSet> ext = nullptr, std::vector<std::size_t> ext_index = {}, bool local = true)
      : base_(std::move(base)),
        names_(std::move(ext_names)),
        b_(std::move(b)),
        ext_(std::move(ext)),
        ext_index_(std::move(ext_index)),
        local_(local) {
    if (!base_) throw Error(ErrorCode::InvalidArgument, "branching matrix without base labels");
    if (b_.cols() != base_->size() || b_.rows() != names_.size() || b_.rows() == 0)
      throw Error(ErrorCode::InvalidArgument, "branching matrix shape does not match its labels");
    if (!b_.is_nonnegative()) throw Error(ErrorCode::NegativeEntry, "negative branching coefficient");
    if (b_(0, 0) != 1)
      throw Error(ErrorCode::DataMismatch, "extended vacuum must contain the base vacuum exactly once");
    if (ext_index_.empty()) ext_index_.assign(b_.rows(), npos);
    if (ext_index_.size() != b_.rows()) throw Error(ErrorCode::InvalidArgument, "extended index size mismatch");
    for (std::size_t t = 0; t < b_.rows(); ++t) {
      std::optional<Rational> h;
      for (std::size_t l = 0; l < b_.cols(); ++l) {
        if (b_(t, l) == 0) continue;
        if (h && *h != base_->h(l) && local_)
          throw Error(ErrorCode::DataMismatch, "row " + names_[t] + " mixes conformal weights (" +
                                                   base_->name(l) + ")");
        if (!h) h = base_->h(l);
      }
      if (!h) throw Error(ErrorCode::DataMismatch, "row " + names_[t] + " is empty");
      weights_.push_back(*h);
      if (local_ && ext_ && ext_index_[t] != npos && ext_->h(ext_index_[t]) != *h)
        throw Error(ErrorCode::DataMismatch, "row " + names_[t] + " has h = " + std::to_string(h->numerator()) + "/" +
                                                 std::to_string(h->denominator()) + " but the extended label has " +
                                                 std::to_string(ext_->h(ext_index_[t]).numerator()) + "/" +
                                                 std::to_string(ext_->h(ext_index_[t]).denominator()));
    }
  }

  const LabelSet& base_labels() const { return *base_; }
  const std::shared_ptr<const LabelSet>& base_ptr() const noexcept { return base_; }
  const std::vector<std::string>& ext_names() const noexcept { return names_; }
  const std::string& ext_name(std::size_t t) const { return names_.at(t); }
  const std::shared_ptr<const LabelSet>& ext_labels() const noexcept { return ext_; }
  std::size_t ext_index(std::size_t t) const { return ext_index_.at(t); }
  const IntMatrix& matrix() const noexcept { return b_; }
  std::size_t rows() const noexcept { return b_.rows(); }
  std::size_t cols() const noexcept { return b_.cols(); }

  /// Conformal weight (mod 1) shared by the members of row t; for a nonlocal
  /// matrix, that of the first member.
  const Rational& row_weight(std::size_t t) const { return weights_.at(t); }

  /// True when rows correspond one-to-one to the extended labels.
  bool ext_bijective() const {
    if (!ext_ || ext_->size() != rows()) return false;
    std::vector<bool> seen(rows(), false);
    for (std::size_t i : ext_index_) {
      if (i == npos || seen[i]) return false;
      seen[i] = true;
    }
    return true;
  }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  bool is_local() const noexcept { return local_; }

  /// Z = B^t B.
  IntMatrix invariant() const { return b_.transpose() * b_; }

  /// Row a of the result is row perm[a] of this matrix; names and extended
  /// labels stay with the row positions.
  BranchingMatrix permute_rows(const Permutation& perm) const {
    if (perm.size() != rows()) throw Error(ErrorCode::InvalidArgument, "row permutation size mismatch");
    IntMatrix out(rows(), cols());
    for (std::size_t a = 0; a < rows(); ++a)
      for (std::size_t l = 0; l < cols(); ++l) out(a, l) = b_(perm.at(a), l);
    BranchingMatrix p(base_, names_, std::move(out), ext_, ext_index_, local_);
    p.name_ = name_;
    return p;
  }

 private:
  std::shared_ptr<const LabelSet> base_;
  std::vector<std::string> names_;
  IntMatrix b_;
  std::shared_ptr<const LabelSet> ext_;
  std::vector<std::size_t> ext_index_;
  bool local_ = true;
  std::vector<Rational> weights_;
  std::string name_;
};

/// B^t B is an invariant of the base data; with extended data also
/// d_tau * [index] = sum_l b_{tau,l} d_l, the index being the vacuum row's dimension.
template <class Real>
ValidationReport verify_branching(const BranchingMatrix& b, const ModularData<Real>& base,
                                  const ModularData<Real>* ext, const PrecisionConfig& cfg) {
  using std::abs;
  ValidationReport report;
  report.add_condition("vacuum restricts with multiplicity 1", b.matrix()(0, 0) == 1);
  const auto inv = verify_invariant(base, b.invariant(), cfg);
  report.add_condition("B^t B is an invariant", inv.ok(), inv.first_failure());
  if (ext) {
    std::vector<Real> dims(b.rows(), Real(0));
    for (std::size_t t = 0; t < b.rows(); ++t)
      for (std::size_t l = 0; l < b.cols(); ++l) dims[t] += Real(b.matrix()(t, l)) * base.d()[l];
    Real worst(0);
    for (std::size_t t = 0; t < b.rows(); ++t) {
      if (b.ext_index(t) == BranchingMatrix::npos) continue;
      worst = std::max<Real>(worst, abs(ext->d()[b.ext_index(t)] * dims[0] - dims[t]));
    }
    report.add_residual("d_tau * index = sum b d", to_double(worst), cfg.validation_tol() * to_double(dims[0]));
  }
  report.add_note("local", b.is_local());
  return report;
}

/// B B^t.
inline IntMatrix sandwich(const BranchingMatrix& b) { return b.matrix() * b.matrix().transpose(); }

namespace detail {

/// Moves a square matrix over rows into the ordering of the extended labels.
inline IntMatrix to_ext_order(const BranchingMatrix& b, const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t c = 0; c < m.cols(); ++c) out(b.ext_index(a), b.ext_index(c)) = m(a, c);
  return out;
}

}  // namespace detail

/// B B^t, checked to commute with the extended S and T when rows are
/// one-to-one with ext's labels; throws ExtendedInvarianceFailed otherwise.
template <class Real>
IntMatrix sandwich(const BranchingMatrix& b, const ModularData<Real>& ext, const PrecisionConfig& cfg) {
  const IntMatrix m = sandwich(b);
  if (!b.ext_bijective())
    throw Error(ErrorCode::ExtendedInvarianceFailed, "rows are not one-to-one with the extended labels");
  const auto rep = verify_invariant(ext, detail::to_ext_order(b, m), cfg);
  if (!rep.ok()) throw Error(ErrorCode::ExtendedInvarianceFailed, "B B^t: " + rep.first_failure());
  return m;
}

/// B B^t as a grouped sum of permutation matrices. Every permutation must
/// preserve row conformal weights; with extended data it must also preserve S.
template <class Real = double>
std::vector<std::pair<std::int64_t, Permutation>> sandwich_decomposition(const BranchingMatrix& b,
                                                                         const ModularData<Real>* ext = nullptr,
                                                                         const PrecisionConfig& cfg = {}) {
  using std::abs;
  const auto perms = permutation_sum_decomposition(sandwich(b));
  for (const auto& p : perms) {
    for (std::size_t a = 0; a < p.size(); ++a)
      if (b.row_weight(p[a]) != b.row_weight(a))
        throw Error(ErrorCode::ExtendedInvarianceFailed,
                    "permutation sends " + b.ext_name(a) + " to " + b.ext_name(p[a]) + " with a different T");
    if (ext && b.ext_bijective()) {
      const auto& s = ext->S();
      for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t c = 0; c < p.size(); ++c) {
          const auto diff = s(b.ext_index(p[a]), b.ext_index(p[c])) - s(b.ext_index(a), b.ext_index(c));
          if (abs(diff) > Real(cfg.validation_tol()))
            throw Error(ErrorCode::ExtendedInvarianceFailed, "permutation does not preserve the extended S");
        }
    }
  }
  return group_permutations(perms);
}

/// Z = (B+)^t B-.
inline ModularInvariant restrict_invariant(const BranchingMatrix& plus, const BranchingMatrix& minus) {
  if (plus.base_labels().names() != minus.base_labels().names())
    throw Error(ErrorCode::InvalidArgument, "branching matrices over different base labels");
  return ModularInvariant(plus.base_ptr(), plus.matrix().transpose() * minus.matrix());
}

template <class Real>
ModularInvariant restrict_invariant(const BranchingMatrix& plus, const BranchingMatrix& minus,
                                    const ModularData<Real>& base, const PrecisionConfig& cfg) {
  auto z = restrict_invariant(plus, minus);
  verify_invariant(base, z, cfg).require(ErrorCode::ValidationFailed, "restricted invariant");
  return z;
}

/// B^t M B for an invariant M indexed by the extended labels.
inline ModularInvariant pull_back(const BranchingMatrix& b, const IntMatrix& m) {
  if (!b.ext_labels() || m.rows() != b.ext_labels()->size() || m.cols() != m.rows())
    throw Error(ErrorCode::InvalidArgument, "pull_back needs an invariant over the extended labels");
  IntMatrix rowspace(b.rows(), b.rows());
  for (std::size_t a = 0; a < b.rows(); ++a)
    for (std::size_t c = 0; c < b.rows(); ++c) {
      if (b.ext_index(a) == BranchingMatrix::npos || b.ext_index(c) == BranchingMatrix::npos)
        throw Error(ErrorCode::InvalidArgument, "row without an extended label");
      rowspace(a, c) = m(b.ext_index(a), b.ext_index(c));
    }
  return ModularInvariant(b.base_ptr(), b.matrix().transpose() * rowspace * b.matrix());
}

}  // namespace modinv

#endif  // MODINV_BRANCHING_BRANCHING_MATRIX_HPP
