#ifndef MODINV_INVARIANTS_SIMPLE_CURRENT_HPP
#define MODINV_INVARIANTS_SIMPLE_CURRENT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "modinv/fusion/fusion_ring.hpp"
#include "modinv/invariants/modular_invariant.hpp"

namespace modinv {

/// l -> J l for a simple current J; throws NotSimpleCurrent when some J x l
/// is not a single label.
template <class Real>
Permutation simple_current_action(const FusionRing<Real>& ring, std::size_t j) {
  const std::size_t n = ring.size();
  Permutation act(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    const auto& row = ring.row(j, l);
    for (std::size_t nu = 0; nu < n; ++nu) {
      if (row[nu] == 0) continue;
      if (row[nu] != 1 || act[l] != n)
        throw Error(ErrorCode::NotSimpleCurrent,
                    ring.md().labels().name(j) + " x " + ring.md().labels().name(l) + " is not a single label");
      act[l] = nu;
    }
    if (act[l] == n) throw Error(ErrorCode::NotSimpleCurrent, "empty fusion product");
  }
  return act;
}

/// Order of J in the fusion group.
inline std::size_t simple_current_order(const Permutation& act) {
  std::size_t order = 1;
  for (std::size_t x = act[0]; x != 0; x = act[x]) ++order;
  return order;
}

/// Q_J(l) = h_J + h_l - h_{Jl} mod 1.
inline Rational monodromy_charge(const LabelSet& labels, const Permutation& act, std::size_t l) {
  return mod1(labels.h(act[0]) + labels.h(l) - labels.h(act[l]));
}

/// Cyclic simple-current invariant
///   M_{l, J^s l} += [Q_J(l) + s r / (2N) in Z],  s = 1..N,
/// where N is the order of J and r (mod 2N, even for odd N) is fixed by
/// h_J = r (N-1) / (2N) mod 1.
template <class Real>
ModularInvariant simple_current_invariant(const FusionRing<Real>& ring, std::size_t j, std::string name = {}) {
  const LabelSet& labels = ring.md().labels();
  const Permutation act = simple_current_action(ring, j);
  const auto order = static_cast<std::int64_t>(simple_current_order(act));
  const Rational hj = labels.h(j);
  std::int64_t r = -1;
  for (std::int64_t cand = 0; cand < 2 * order && r < 0; ++cand) {
    if (order % 2 == 1 && cand % 2 == 1) continue;
    if (mod1(Rational(cand * (order - 1), 2 * order)) == hj) r = cand;
  }
  if (r < 0)
    throw Error(ErrorCode::NotSimpleCurrent,
                "h_J of " + labels.name(j) + " is not of the form r(N-1)/2N with N = " + std::to_string(order));
  const std::size_t n = labels.size();
  IntMatrix m(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    const Rational q = monodromy_charge(labels, act, l);
    std::size_t target = l;
    for (std::int64_t s = 1; s <= order; ++s) {
      target = act[target];
      if (is_integer(q + Rational(s * r, 2 * order))) m(l, target) += 1;
    }
  }
  return ModularInvariant(ring.labels(), std::move(m), std::move(name));
}

}  // namespace modinv

#endif  // MODINV_INVARIANTS_SIMPLE_CURRENT_HPP
