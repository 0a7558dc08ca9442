#ifndef MODINV_FUSION_FUSION_RING_HPP
#define MODINV_FUSION_FUSION_RING_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/fusion/sector_vector.hpp"
#include "modinv/modular/modular_data.hpp"
#include "modinv/numerics/int_matrix.hpp"
#include "modinv/numerics/parallel.hpp"
#include "modinv/numerics/precision.hpp"

namespace modinv {

/// Verlinde fusion coefficients of a modular data set. Rows N_{lm}^. are
/// computed on first use and cached; the full tensor is never materialised
/// unless asked for.
template <class Real>
class FusionRing {
 public:
  explicit FusionRing(std::shared_ptr<const ModularData<Real>> md) : md_(std::move(md)) {
    const std::size_t n = md_->size();
    inv_s0_.resize(n);
    for (std::size_t r = 0; r < n; ++r) inv_s0_[r] = Real(1) / md_->S(0, r).real();
  }
  explicit FusionRing(ModularData<Real> md) : FusionRing(std::make_shared<const ModularData<Real>>(std::move(md))) {}

  const ModularData<Real>& md() const noexcept { return *md_; }
  std::shared_ptr<const ModularData<Real>> md_ptr() const noexcept { return md_; }
  std::shared_ptr<const LabelSet> labels() const { return md_->label_set_ptr(); }
  std::size_t size() const noexcept { return md_->size(); }

  /// N_{lm}^nu for all nu.
  const std::vector<std::int64_t>& row(std::size_t l, std::size_t m) const {
    if (l > m) std::swap(l, m);
    const std::size_t key = l * size() + m;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
    }
    auto fresh = std::make_shared<const std::vector<std::int64_t>>(compute(l, m));
    std::lock_guard<std::mutex> lock(mutex_);
    return *cache_.emplace(key, std::move(fresh)).first->second;
  }

  std::int64_t N(std::size_t l, std::size_t m, std::size_t nu) const { return row(l, m)[nu]; }

  SectorVector verlinde(std::size_t l, std::size_t m) const { return SectorVector(labels(), row(l, m)); }

  /// Fusion matrix (N_l)_{m nu} = N_{lm}^nu.
  IntMatrix fusion_matrix(std::size_t l) const {
    IntMatrix out(size(), size());
    for (std::size_t m = 0; m < size(); ++m) {
      const auto& r = row(l, m);
      for (std::size_t nu = 0; nu < size(); ++nu) out(m, nu) = r[nu];
    }
    return out;
  }

  /// Fills every row, optionally on several threads.
  void precompute_all(unsigned threads = 1) const {
    const std::size_t n = size();
    parallel_for(n, threads, [&](std::size_t l) {
      for (std::size_t m = l; m < n; ++m) row(l, m);
    });
  }

  std::size_t cached_rows() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.size();
  }

 private:
  std::vector<std::int64_t> compute(std::size_t l, std::size_t m) const {
    const std::size_t n = size();
    const auto& s = md_->S();
    std::vector<Complex<Real>> w(n);
    for (std::size_t r = 0; r < n; ++r) w[r] = s(l, r) * s(m, r) * inv_s0_[r];
    std::vector<std::int64_t> out(n);
    for (std::size_t nu = 0; nu < n; ++nu) {
      Complex<Real> acc(0);
      for (std::size_t r = 0; r < n; ++r) acc += w[r] * std::conj(s(nu, r));
      const auto v = nearest_integer(acc, md_->config());
      if (v < 0)
        throw Error(ErrorCode::NegativeEntry, "Verlinde coefficient N_{" + md_->labels().name(l) + "," +
                                                  md_->labels().name(m) + "}^" + md_->labels().name(nu) + " = " +
                                                  std::to_string(v));
      out[nu] = v;
    }
    return out;
  }

  std::shared_ptr<const ModularData<Real>> md_;
  std::vector<Real> inv_s0_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::size_t, std::shared_ptr<const std::vector<std::int64_t>>> cache_;
};

/// Bilinear extension of the fusion product to signed combinations.
template <class Real>
SectorVector fuse(const FusionRing<Real>& ring, const SectorVector& u, const SectorVector& v) {
  SectorVector out(ring.labels());
  for (std::size_t l = 0; l < u.size(); ++l) {
    if (u[l] == 0) continue;
    for (std::size_t m = 0; m < v.size(); ++m) {
      if (v[m] == 0) continue;
      const auto& r = ring.row(l, m);
      const std::int64_t f = u[l] * v[m];
      for (std::size_t nu = 0; nu < r.size(); ++nu) out[nu] += f * r[nu];
    }
  }
  return out;
}

template <class Real>
SectorVector conjugate(const FusionRing<Real>& ring, const SectorVector& u) {
  return conjugate(u, ring.md().conjugation());
}

/// sum_nu u_nu d_nu
template <class Real>
Real dim(const FusionRing<Real>& ring, const SectorVector& u) {
  Real s(0);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) s += Real(u[i]) * ring.md().d()[i];
  return s;
}

template <class Real>
struct GlobalData {
  Real global_index;  // sum d^2
  Complex<Real> z;
  Rational c;         // from arg z, mod 8
  bool agrees = false;
};

/// Recomputes sum d^2, z = sum d^2 omega and c = 4 arg(z)/pi, and compares c
/// with the stored central charge mod 8.
template <class Real>
GlobalData<Real> global_data(const FusionRing<Real>& ring) {
  using std::abs;
  using std::arg;
  const auto& md = ring.md();
  GlobalData<Real> g{Real(0), Complex<Real>(0), Rational(0), false};
  for (std::size_t i = 0; i < md.size(); ++i) {
    const Real d2 = md.d()[i] * md.d()[i];
    g.global_index += d2;
    g.z += d2 * md.omega(i);
  }
  const Real phase = abs(root_of_unity<Real>(md.c() / 8) - g.z / abs(g.z));
  g.agrees = phase <= Real(md.config().validation_tol());
  const double c = 4.0 * to_double(Real(arg(g.z))) / to_double(pi<Real>());
  g.c = md.c();
  if (!g.agrees) g.c = mod_n(Rational(static_cast<long long>(std::llround(c * 1000)), 1000), 8);
  return g;
}

/// Hom count <a+_l a-_r, a+_m a-_s> = sum N_{m* l}^nu N_{s r*}^tau Z_{nu tau}, extended
/// multilinearly; `left` = (l, r) and `right` = (m, s).
template <class Real>
std::int64_t alpha_hom(const IntMatrix& z, const FusionRing<Real>& ring, const std::pair<SectorVector, SectorVector>& left,
                       const std::pair<SectorVector, SectorVector>& right) {
  const SectorVector u = fuse(ring, conjugate(ring, right.first), left.first);
  const SectorVector w = fuse(ring, right.second, conjugate(ring, left.second));
  std::int64_t total = 0;
  for (std::size_t nu = 0; nu < u.size(); ++nu) {
    if (u[nu] == 0) continue;
    for (std::size_t tau = 0; tau < w.size(); ++tau)
      if (w[tau] != 0) total += u[nu] * z(nu, tau) * w[tau];
  }
  return total;
}

}  // namespace modinv

#endif  // MODINV_FUSION_FUSION_RING_HPP
