#ifndef MODINV_NUMERICS_BIRKHOFF_HPP
#define MODINV_NUMERICS_BIRKHOFF_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/numerics/int_matrix.hpp"

namespace modinv {

/// A permutation as an index map: row i goes to column perm[i].
using Permutation = std::vector<std::size_t>;

namespace detail {

/// Kuhn augmenting path search restricted to rows >= first_free.
inline bool augment(const IntMatrix& m, std::size_t row, std::vector<char>& seen,
                    std::vector<std::ptrdiff_t>& owner) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(row, j) <= 0 || seen[j]) continue;
    seen[j] = 1;
    if (owner[j] < 0 || augment(m, static_cast<std::size_t>(owner[j]), seen, owner)) {
      owner[j] = static_cast<std::ptrdiff_t>(row);
      return true;
    }
  }
  return false;
}

/// Whether rows [first, n) can be matched into the columns not in `used`.
inline bool completable(const IntMatrix& m, std::size_t first, const std::vector<char>& used) {
  std::vector<std::ptrdiff_t> owner(m.cols(), -1);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (used[j]) owner[j] = static_cast<std::ptrdiff_t>(m.rows());  // blocked
  for (std::size_t i = first; i < m.rows(); ++i) {
    std::vector<char> seen(used.begin(), used.end());
    if (!augment(m, i, seen, owner)) return false;
  }
  return true;
}

/// Lexicographically smallest perfect matching on the support of m.
inline Permutation smallest_matching(const IntMatrix& m) {
  const std::size_t n = m.rows();
  Permutation perm(n);
  std::vector<char> used(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t j = 0; j < n && !placed; ++j) {
      if (used[j] || m(i, j) <= 0) continue;
      used[j] = 1;
      if (completable(m, i + 1, used)) {
        perm[i] = j;
        placed = true;
      } else {
        used[j] = 0;
      }
    }
    if (!placed) throw Error(ErrorCode::NotDecomposable, "no perfect matching on the support");
  }
  return perm;
}

}  // namespace detail

/// Writes M (non-negative, all line sums equal to r) as a sum of exactly r
/// permutation matrices, extracting the lexicographically smallest perfect
/// matching of the remaining support each time.
inline std::vector<Permutation> permutation_sum_decomposition(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotDecomposable, "matrix is not square");
  if (!m.is_nonnegative()) throw Error(ErrorCode::NotDecomposable, "matrix has negative entries");
  const auto rs = m.row_sums();
  const auto cs = m.col_sums();
  const std::int64_t r = rs.empty() ? 0 : rs.front();
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (rs[i] != r || cs[i] != r)
      throw Error(ErrorCode::NotDecomposable, "row and column sums are not all equal");

  std::vector<Permutation> out;
  IntMatrix rest = m;
  for (std::int64_t step = 0; step < r; ++step) {
    Permutation p = detail::smallest_matching(rest);
    for (std::size_t i = 0; i < p.size(); ++i) rest(i, p[i]) -= 1;
    out.push_back(std::move(p));
  }
  if (!rest.is_zero()) throw Error(ErrorCode::NotDecomposable, "decomposition does not sum to input");
  return out;
}

/// Consecutive equal permutations collapsed to (multiplicity, permutation).
inline std::vector<std::pair<std::int64_t, Permutation>> group_permutations(const std::vector<Permutation>& ps) {
  std::vector<std::pair<std::int64_t, Permutation>> out;
  for (const auto& p : ps) {
    bool found = false;
    for (auto& [mult, q] : out)
      if (q == p) {
        ++mult;
        found = true;
        break;
      }
    if (!found) out.emplace_back(1, p);
  }
  return out;
}

inline bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

}  // namespace modinv

#endif  // MODINV_NUMERICS_BIRKHOFF_HPP
