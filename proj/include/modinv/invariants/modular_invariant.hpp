#ifndef MODINV_INVARIANTS_MODULAR_INVARIANT_HPP
#define MODINV_INVARIANTS_MODULAR_INVARIANT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/modular/modular_data.hpp"
#include "modinv/numerics/int_matrix.hpp"
#include "modinv/validation.hpp"

namespace modinv {

/// A non-negative integer matrix over the labels of some modular data, with
/// an optional name ("E7", "D^(12)", ...).
class ModularInvariant {
 public:
  ModularInvariant() = default;
  ModularInvariant(std::shared_ptr<const LabelSet> labels, IntMatrix z, std::string name = {})
      : labels_(std::move(labels)), z_(std::move(z)), name_(std::move(name)) {
    if (!labels_) throw Error(ErrorCode::InvalidArgument, "invariant without labels");
    if (z_.rows() != labels_->size() || z_.cols() != labels_->size())
      throw Error(ErrorCode::InvalidArgument, "invariant matrix is " + std::to_string(z_.rows()) + "x" +
                                                  std::to_string(z_.cols()) + " but there are " +
                                                  std::to_string(labels_->size()) + " labels");
  }

  const LabelSet& labels() const { return *labels_; }
  const std::shared_ptr<const LabelSet>& label_set_ptr() const noexcept { return labels_; }
  const IntMatrix& matrix() const noexcept { return z_; }
  std::size_t size() const noexcept { return z_.rows(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return z_(i, j); }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool is_normalized() const { return size() > 0 && z_(0, 0) == 1; }

 private:
  std::shared_ptr<const LabelSet> labels_;
  IntMatrix z_;
  std::string name_;
};

/// Default residual bound for S/T commutation.
inline double invariant_tolerance(const PrecisionConfig& cfg) { return 10 * cfg.null_tol; }

/// Checks that m is a non-negative integer matrix commuting with S and T.
/// MS - SM is formed from the nonzero entries of m only, O(nnz * n).
template <class Real>
ValidationReport verify_invariant(const ModularData<Real>& md, const IntMatrix& m, const PrecisionConfig& cfg,
                                  double tol = -1) {
  using std::abs;
  if (tol < 0) tol = invariant_tolerance(cfg);
  ValidationReport report;
  const std::size_t n = md.size();
  const bool square = m.rows() == n && m.cols() == n;
  report.add_condition("square over labels", square,
                       square ? "" : std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " vs " +
                                         std::to_string(n) + " labels");
  if (!square) return report;
  report.add_condition("entries non-negative", m.is_nonnegative());
  report.add_condition("entries integral", true);

  // T: exact comparison of conformal weights on the support, and the
  // numerical residual for reference.
  bool support_ok = true;
  std::string offending;
  Real t_res(0);
  m.for_each_nonzero([&](std::size_t i, std::size_t j, std::int64_t v) {
    if (md.labels().h(i) != md.labels().h(j) && support_ok) {
      support_ok = false;
      offending = "Z(" + md.labels().name(i) + "," + md.labels().name(j) + ") = " + std::to_string(v);
    }
    const Real r = abs(md.T()[i] - md.T()[j]) * Real(v < 0 ? -v : v);
    if (r > t_res) t_res = r;
  });

  ComplexMatrix<Real> diff(n, n);
  const auto& s = md.S();
  m.for_each_nonzero([&](std::size_t i, std::size_t k, std::int64_t v) {
    const Real w(v);
    for (std::size_t j = 0; j < n; ++j) diff(i, j) += w * s(k, j);  // (MS)_ij
    for (std::size_t r = 0; r < n; ++r) diff(r, k) -= s(r, i) * w;  // (SM)_rk
  });
  Real s_res(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s_res = std::max<Real>(s_res, abs(diff(i, j)));

  report.add_residual("MS = SM", to_double(s_res), tol);
  report.add_residual("MT = TM", to_double(t_res), tol, offending);
  report.add_condition("support on equal conformal weights", support_ok, offending);
  report.add_note("normalized", m(0, 0) == 1, "M_00 = " + std::to_string(m(0, 0)));
  return report;
}

template <class Real>
ValidationReport verify_invariant(const ModularData<Real>& md, const ModularInvariant& z, const PrecisionConfig& cfg,
                                  double tol = -1) {
  return verify_invariant(md, z.matrix(), cfg, tol);
}

inline void check_same_labels(const ModularInvariant& a, const ModularInvariant& b) {
  if (a.label_set_ptr() != b.label_set_ptr() && a.labels().names() != b.labels().names())
    throw Error(ErrorCode::InvalidArgument, "invariants live on different label sets");
}

inline IntMatrix product(const IntMatrix& a, const IntMatrix& b) { return a * b; }

inline IntMatrix product(const ModularInvariant& a, const ModularInvariant& b) {
  check_same_labels(a, b);
  return a.matrix() * b.matrix();
}

/// Z*; entries are integers, so this is the transpose.
inline IntMatrix adjoint(const IntMatrix& z) { return z.transpose(); }

/// C Z, i.e. (CZ)_{l,m} = Z_{Cl,m}.
inline IntMatrix conj(const IntMatrix& z, const Permutation& c) {
  if (c.size() != z.rows()) throw Error(ErrorCode::InvalidArgument, "conjugation size mismatch");
  IntMatrix out(z.rows(), z.cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) out(i, j) = z(c[i], j);
  return out;
}

/// The five counts attached to an invariant.
struct InvariantCounts {
  std::int64_t trace = 0;               ///< tr Z: number of N-M sectors
  std::int64_t trace_zt_z = 0;          ///< tr Z^t Z: number of M-M sectors
  std::int64_t vacuum_row_squares = 0;  ///< sum Z_{0l}^2: chiral orbits of the - system
  std::int64_t vacuum_col_squares = 0;  ///< sum Z_{l0}^2: chiral orbits of the + system
  std::int64_t zzstar_00 = 0;           ///< (ZZ*)_00 = <theta+, theta+>

  std::vector<std::pair<std::string, std::int64_t>> interpreted() const {
    return {{"#_N X_M (tr Z)", trace},
            {"#_M X_M (tr Z^t Z)", trace_zt_z},
            {"- chiral orbits (sum Z_0l^2)", vacuum_row_squares},
            {"+ chiral orbits (sum Z_l0^2)", vacuum_col_squares},
            {"<theta+,theta+> ((ZZ*)_00)", zzstar_00}};
  }
};

inline InvariantCounts counts(const IntMatrix& z) {
  InvariantCounts c;
  c.trace = z.trace();
  c.trace_zt_z = z.frobenius_square();
  for (std::size_t l = 0; l < z.cols(); ++l) c.vacuum_row_squares += z(0, l) * z(0, l);
  for (std::size_t l = 0; l < z.rows(); ++l) c.vacuum_col_squares += z(l, 0) * z(l, 0);
  c.zzstar_00 = c.vacuum_row_squares;
  return c;
}

inline InvariantCounts counts(const ModularInvariant& z) { return counts(z.matrix()); }

/// All non-negative integer vectors c with sum_i c_i basis_i = m. Every basis
/// element must be normalized, so sum c_i = m_00 bounds the search.
inline std::vector<std::vector<std::int64_t>> decompose(const IntMatrix& m, const std::vector<IntMatrix>& basis) {
  for (const auto& b : basis) {
    if (b.rows() != m.rows() || b.cols() != m.cols())
      throw Error(ErrorCode::InvalidArgument, "decomposition basis has the wrong shape");
    if (b(0, 0) != 1) throw Error(ErrorCode::InvalidArgument, "decomposition basis must be normalized");
  }
  std::vector<std::vector<std::int64_t>> out;
  if (!m.is_nonnegative()) return out;
  // Sparse supports so each step touches only the entries of one basis element.
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>> nz(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    basis[i].for_each_nonzero([&](std::size_t r, std::size_t c, std::int64_t v) { nz[i].emplace_back(r, c, v); });

  IntMatrix rem = m;
  std::vector<std::int64_t> coeff(basis.size(), 0);
  std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t i, std::int64_t budget) {
    if (i == basis.size()) {
      if (budget == 0 && rem.is_zero()) out.push_back(coeff);
      return;
    }
    std::int64_t hi = budget;
    for (const auto& [r, c, v] : nz[i]) hi = std::min(hi, rem(r, c) / v);
    for (std::int64_t k = hi; k >= 0; --k) {
      for (const auto& [r, c, v] : nz[i]) rem(r, c) -= k * v;
      coeff[i] = k;
      dfs(i + 1, budget - k);
      for (const auto& [r, c, v] : nz[i]) rem(r, c) += k * v;
    }
    coeff[i] = 0;
  };
  dfs(0, m(0, 0));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<std::int64_t>> decompose(const IntMatrix& m,
                                                        const std::vector<ModularInvariant>& basis) {
  std::vector<IntMatrix> mats;
  for (const auto& b : basis) mats.push_back(b.matrix());
  return decompose(m, mats);
}

/// sum_i c_i basis_i.
inline IntMatrix recompose(const std::vector<std::int64_t>& c, const std::vector<IntMatrix>& basis) {
  if (basis.empty() || c.size() != basis.size()) throw Error(ErrorCode::InvalidArgument, "recompose size mismatch");
  IntMatrix out(basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < c.size(); ++i) out += c[i] * basis[i];
  return out;
}

struct ParentInequality {
  IntMatrix zzstar;
  IntMatrix zplus;
  IntMatrix difference;  ///< ZZ* - Z+
  ValidationReport report;
};

/// Compares ZZ* with Z+ = B+^t B+ entrywise. Throws InequalityViolated at
/// the first negative entry of ZZ* - Z+.
inline ParentInequality parent_inequality_check(const IntMatrix& z, const IntMatrix& bplus) {
  if (bplus.cols() != z.rows())
    throw Error(ErrorCode::InvalidArgument, "branching matrix columns do not match the invariant");
  ParentInequality p;
  p.zzstar = z * z.transpose();
  p.zplus = bplus.transpose() * bplus;
  p.difference = p.zzstar - p.zplus;
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j)
      if (p.difference(i, j) < 0)
        throw Error(ErrorCode::InequalityViolated, "(ZZ*)_{" + std::to_string(i) + "," + std::to_string(j) +
                                                       "} = " + std::to_string(p.zzstar(i, j)) + " < Z+ = " +
                                                       std::to_string(p.zplus(i, j)));
  p.report.add_condition("ZZ* >= Z+ entrywise", true);
  p.report.add_condition("(ZZ*)_00 = sum Z_0l^2", p.zzstar(0, 0) == counts(z).vacuum_row_squares);
  const bool perm = z.is_permutation();
  p.report.add_note("Z is a permutation", perm);
  if (perm) {
    const IntMatrix one = IntMatrix::identity(z.rows());
    p.report.add_condition("permutation: ZZ* = Z+ = 1", p.zzstar == one && p.zplus == one);
  }
  p.report.add_note("equality ZZ* = Z+", p.difference.is_zero());
  return p;
}

}  // namespace modinv

#endif  // MODINV_INVARIANTS_MODULAR_INVARIANT_HPP
