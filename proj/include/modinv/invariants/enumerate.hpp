#ifndef MODINV_INVARIANTS_ENUMERATE_HPP
#define MODINV_INVARIANTS_ENUMERATE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "modinv/invariants/modular_invariant.hpp"
#include "modinv/numerics/lattice.hpp"
#include "modinv/numerics/nullspace.hpp"

namespace modinv {

struct EnumerationOptions {
  std::size_t label_cap = 300;
  std::uint64_t node_limit = 50'000'000;
};

struct EnumerationResult {
  std::vector<ModularInvariant> invariants;
  std::size_t support_size = 0;    ///< pairs with T_l = T_m
  std::size_t commutant_dim = 0;   ///< rank of the integral commutant lattice
  std::uint64_t nodes = 0;         ///< search nodes visited
  bool bound_touched = false;      ///< some invariant meets Z_lm = floor(d_l d_m) off the vacuum entry
};

namespace detail {

/// Unknowns Z_ab with h_a = h_b, plus row/column incidence lists.
struct CommutantSupport {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<std::size_t>> by_row, by_col;
};

inline CommutantSupport commutant_support(const LabelSet& labels) {
  const std::size_t n = labels.size();
  CommutantSupport sup;
  sup.by_row.resize(n);
  sup.by_col.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (labels.h(a) == labels.h(b)) {
        sup.by_row[a].push_back(sup.pairs.size());
        sup.by_col[b].push_back(sup.pairs.size());
        sup.pairs.emplace_back(a, b);
      }
  return sup;
}

/// Row 2(i n + j) + part of (ZS - SZ)_ij = 0, as a function of the support unknowns.
template <class T, class SAt>
void commutator_row(const CommutantSupport& sup, std::size_t n, std::size_t r, std::vector<T>& out, SAt&& s_at) {
  std::fill(out.begin(), out.end(), T(0));
  const std::size_t e = r / 2, part = r % 2;
  const std::size_t i = e / n, j = e % n;
  for (std::size_t u : sup.by_row[i]) {  // Z_ib S_bj
    const auto& z = s_at(sup.pairs[u].second, j);
    out[u] += part ? z.imag() : z.real();
  }
  for (std::size_t u : sup.by_col[j]) {  // - S_ia Z_aj
    const auto& z = s_at(i, sup.pairs[u].first);
    out[u] -= part ? z.imag() : z.real();
  }
}

}  // namespace detail

/// Integral lattice of integer matrices supported on T-degenerate pairs and
/// commuting with S.
template <class Real>
std::pair<detail::CommutantSupport, IntegralLattice> commutant_lattice(const ModularData<Real>& md,
                                                                       const PrecisionConfig& cfg) {
  const std::size_t n = md.size();
  auto sup = detail::commutant_support(md.labels());
  const std::size_t m = sup.pairs.size();
  std::vector<Complex<double>> sd(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sd[i * n + j] = Complex<double>(to_double(md.S(i, j).real()), to_double(md.S(i, j).imag()));
  const detail::RowFn<double> fast = [&](std::size_t r, std::vector<double>& out) {
    detail::commutator_row(sup, n, r, out, [&](std::size_t a, std::size_t b) -> const Complex<double>& {
      return sd[a * n + b];
    });
  };
  const detail::RowFn<Real> exact = [&](std::size_t r, std::vector<Real>& out) {
    detail::commutator_row(sup, n, r, out,
                           [&](std::size_t a, std::size_t b) -> const Complex<Real>& { return md.S(a, b); });
  };
  const RationalSubspace sub = nullspace_basis<Real>(2 * n * n, m, fast, exact, cfg);
  return {std::move(sup), integral_lattice(sub)};
}

/// Every normalized modular invariant with 0 <= Z_lm <= floor(d_l d_m).
///
/// Lattice points are enumerated coordinate by coordinate in the Hermite
/// basis; the remaining entries are pruned with interval bounds and each
/// candidate is verified exactly before it is accepted.
template <class Real>
EnumerationResult enumerate_physical(const ModularData<Real>& md, const PrecisionConfig& cfg,
                                     const EnumerationOptions& opt = {}) {
  const std::size_t n = md.size();
  if (n > opt.label_cap)
    throw Error(ErrorCode::SizeCap, md.theory().display() + " has " + std::to_string(n) +
                                        " labels, above the enumeration cap " + std::to_string(opt.label_cap));
  auto [sup, lat] = commutant_lattice(md, cfg);
  const std::size_t m = sup.pairs.size();
  const std::size_t r = lat.rank();
  EnumerationResult res;
  res.support_size = m;
  res.commutant_dim = r;

  std::vector<std::int64_t> bound(m);
  for (std::size_t u = 0; u < m; ++u) {
    const auto [a, b] = sup.pairs[u];
    using std::floor;
    bound[u] = static_cast<std::int64_t>(to_double(floor(md.d()[a] * md.d()[b] + Real(cfg.int_tol))));
  }
  std::size_t vac = m;
  for (std::size_t u = 0; u < m; ++u)
    if (sup.pairs[u] == std::pair<std::size_t, std::size_t>{0, 0}) vac = u;
  if (vac == m) throw Error(ErrorCode::InvalidArgument, "vacuum pair missing from the support");

  auto lo_of = [&](std::size_t u) -> std::int64_t { return u == vac ? 1 : 0; };
  auto hi_of = [&](std::size_t u) -> std::int64_t { return u == vac ? 1 : bound[u]; };

  // Lattice coordinates c_i (values at lat.coords[i]) are triangular in t.
  // Every entry is sum_i t_i basis[i][u]; prune with the best/worst case of
  // the undecided t's, which range over the box implied by their coordinates.
  // The box for t_i is only known once t_0..t_{i-1} are fixed, so bounds use
  // entry values as functions of the coordinates instead:
  // entry_u = sum_i c_i w_i[u] with w the free-variable basis.
  // Recover w from the lattice: w = H^{-1} basis (rational, in long double).
  std::vector<std::vector<long double>> w(r, std::vector<long double>(m, 0));
  {
    // Solve H^t-triangular system: basis[i] = sum_{j>=i} H[i][j] w_j.
    for (std::size_t ii = r; ii-- > 0;) {
      for (std::size_t u = 0; u < m; ++u) {
        long double acc = static_cast<long double>(lat.basis[ii][u]);
        for (std::size_t j = ii + 1; j < r; ++j)
          acc -= static_cast<long double>(lat.coord_basis[ii][j].template convert_to<long long>()) * w[j][u];
        w[ii][u] = acc / static_cast<long double>(lat.coord_basis[ii][ii].template convert_to<long long>());
      }
    }
  }
  std::vector<std::size_t> coord_u = lat.coords;
  // suffix[i][u]: min/max of sum_{j>=i} c_j w_j[u] over the coordinate box.
  std::vector<std::vector<long double>> suf_lo(r + 1, std::vector<long double>(m, 0)),
      suf_hi(r + 1, std::vector<long double>(m, 0));
  for (std::size_t i = r; i-- > 0;)
    for (std::size_t u = 0; u < m; ++u) {
      const long double a = w[i][u] * lo_of(coord_u[i]), b = w[i][u] * hi_of(coord_u[i]);
      suf_lo[i][u] = suf_lo[i + 1][u] + std::min(a, b);
      suf_hi[i][u] = suf_hi[i + 1][u] + std::max(a, b);
    }

  std::vector<long double> partial(m, 0);  // sum_{j<i} c_j w_j
  std::vector<long long> t(r, 0);
  std::vector<long long> cvals(r, 0);
  const long double slack = 1e-6L;
  std::vector<std::vector<std::int64_t>> found;

  auto feasible = [&](std::size_t next) {
    for (std::size_t u = 0; u < m; ++u) {
      if (partial[u] + suf_hi[next][u] < lo_of(u) - slack) return false;
      if (partial[u] + suf_lo[next][u] > hi_of(u) + slack) return false;
    }
    return true;
  };

  auto accept = [&]() {
    std::vector<std::int64_t> z(m, 0);
    for (std::size_t i = 0; i < r; ++i)
      if (t[i] != 0)
        for (std::size_t u = 0; u < m; ++u) z[u] += t[i] * lat.basis[i][u];
    for (std::size_t u = 0; u < m; ++u)
      if (z[u] < lo_of(u) || z[u] > hi_of(u)) return;
    found.push_back(std::move(z));
  };

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (++res.nodes > opt.node_limit) {
      std::string box;
      for (std::size_t j = 0; j < r; ++j) box += (j ? "," : "") + std::to_string(hi_of(coord_u[j]));
      throw Error(ErrorCode::SearchSpaceTooLarge, "more than " + std::to_string(opt.node_limit) +
                                                      " search nodes; lattice rank " + std::to_string(r) +
                                                      ", coordinate bounds [" + box + "]");
    }
    if (i == r) {
      accept();
      return;
    }
    // c_i = sum_{j<=i} t_j H[j][i]
    long long fixed = 0;
    for (std::size_t j = 0; j < i; ++j) fixed += t[j] * lat.coord_basis[j][i].template convert_to<long long>();
    const long long h = lat.coord_basis[i][i].template convert_to<long long>();
    const long long lo = lo_of(coord_u[i]), hi = hi_of(coord_u[i]);
    // smallest t with fixed + t h >= lo
    long long t_lo = lo - fixed >= 0 ? (lo - fixed + h - 1) / h : -((fixed - lo) / h);
    for (long long ti = t_lo; fixed + ti * h <= hi; ++ti) {
      t[i] = ti;
      cvals[i] = fixed + ti * h;
      for (std::size_t u = 0; u < m; ++u) partial[u] += cvals[i] * w[i][u];
      if (feasible(i + 1)) self(self, i + 1);
      for (std::size_t u = 0; u < m; ++u) partial[u] -= cvals[i] * w[i][u];
    }
    t[i] = 0;
  };
  if (feasible(0)) dfs(dfs, 0);

  for (auto& z : found) {
    IntMatrix mat(n, n);
    for (std::size_t u = 0; u < m; ++u) mat(sup.pairs[u].first, sup.pairs[u].second) = z[u];
    verify_invariant(md, mat, cfg).require(ErrorCode::ValidationFailed, "enumerated candidate");
    for (std::size_t u = 0; u < m; ++u)
      if (u != vac && z[u] == bound[u] && z[u] != 0) res.bound_touched = true;
    res.invariants.emplace_back(md.label_set_ptr(), std::move(mat));
  }
  std::sort(res.invariants.begin(), res.invariants.end(), [](const ModularInvariant& a, const ModularInvariant& b) {
    if (a.matrix().trace() != b.matrix().trace()) return a.matrix().trace() > b.matrix().trace();
    return a.matrix().data() < b.matrix().data();
  });
  return res;
}

}  // namespace modinv

#endif  // MODINV_INVARIANTS_ENUMERATE_HPP
