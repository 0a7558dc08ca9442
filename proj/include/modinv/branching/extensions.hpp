#ifndef MODINV_BRANCHING_EXTENSIONS_HPP
#define MODINV_BRANCHING_EXTENSIONS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "modinv/branching/table.hpp"
#include "modinv/invariants/simple_current.hpp"

namespace modinv {

/// Extension by the cyclic group generated by the simple current j.
///
/// Extended sectors are the J-orbits with zero monodromy charge; an orbit
/// with stabiliser of order s gives s sectors, each containing every orbit
/// member once. Nonlocal extensions (some h_{J^i} not integral) are still
/// built and flagged through is_local().
template <class Real>
BranchingMatrix simple_current_extension(const FusionRing<Real>& ring, std::size_t j, std::size_t order = 0) {
  const LabelSet& labels = ring.md().labels();
  const Permutation act = simple_current_action(ring, j);
  const std::size_t n_ord = simple_current_order(act);
  if (order != 0 && order != n_ord)
    throw Error(ErrorCode::NotSimpleCurrent, labels.name(j) + " has order " + std::to_string(n_ord) + ", not " +
                                                 std::to_string(order));
  bool local = true;
  for (std::size_t x = act[0]; x != 0; x = act[x]) local = local && is_integer(labels.h(x));

  const std::size_t n = labels.size();
  std::vector<bool> done(n, false);
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::string> names;
  for (std::size_t l = 0; l < n; ++l) {
    if (done[l] || monodromy_charge(labels, act, l) != Rational(0)) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t x = l; !done[x]; x = act[x]) {
      done[x] = true;
      orbit.push_back(x);
    }
    std::sort(orbit.begin(), orbit.end());
    const std::size_t copies = n_ord / orbit.size();
    std::string name;
    for (std::size_t x : orbit) name += (name.empty() ? "" : "+") + labels.name(x);
    for (std::size_t c = 1; c <= copies; ++c) {
      rows.push_back(orbit);
      names.push_back(copies == 1 ? name : name + "#" + std::to_string(c));
    }
  }
  IntMatrix b(rows.size(), n);
  for (std::size_t t = 0; t < rows.size(); ++t)
    for (std::size_t x : rows[t]) b(t, x) = 1;
  BranchingMatrix out(ring.labels(), std::move(names), std::move(b), nullptr, {}, local);
  out.set_name(labels.theory().display() + " / <" + labels.name(j) + ">");
  return out;
}

/// Z = (e_0 + e_s)(e_0 + e_c)^t on SO(16l)_1; Z and Z^t are both verified.
template <class Real>
ModularInvariant heterotic_invariant(const ModularData<Real>& md, const PrecisionConfig& cfg) {
  const TheoryId& id = md.theory();
  if (id.family != "so" || id.n % 16 != 0)
    throw Error(ErrorCode::ValidationFailed, "the heterotic invariant needs SO(16l)_1, got " + id.display());
  const auto& labels = md.labels();
  const std::size_t s = labels.index_of("s"), c = labels.index_of("c");
  IntMatrix z(4, 4);
  z(0, 0) = z(s, 0) = z(0, c) = z(s, c) = 1;
  verify_invariant(md, z, cfg).require(ErrorCode::ValidationFailed, "heterotic invariant");
  verify_invariant(md, z.transpose(), cfg).require(ErrorCode::ValidationFailed, "transposed heterotic invariant");
  return ModularInvariant(md.label_set_ptr(), std::move(z), "heterotic");
}

/// The two SU(7)_7 invariants restricted from SO(48)_1.
struct Su7Invariants {
  BranchingMatrix branching;
  ModularInvariant z1;  ///< sum over 0, v, s, c of b b^t
  ModularInvariant zs;  ///< (b_0 + b_s)(b_0 + b_s)^t
  ValidationReport structure;
};

inline Su7Invariants su7_invariants() {
  BranchingMatrix b = embedding_branching("su7_7-so48");
  const LabelSet& labels = b.base_labels();
  const IntMatrix& bm = b.matrix();
  const std::size_t n = labels.size();
  const std::size_t r0 = 0, rv = 1, rs = 2;
  if (b.ext_name(rv) != "v" || b.ext_name(rs) != "s")
    throw Error(ErrorCode::BranchingTableCorrupt, "SU(7)_7 table rows must be 0, v, s, c");

  IntMatrix zs(n, n);
  std::vector<std::int64_t> u(n);
  for (std::size_t l = 0; l < n; ++l) u[l] = bm(r0, l) + bm(rs, l);
  for (std::size_t a = 0; a < n; ++a)
    if (u[a])
      for (std::size_t c = 0; c < n; ++c) zs(a, c) = u[a] * u[c];

  Su7Invariants out{b, ModularInvariant(b.base_ptr(), b.invariant(), "Z_1"),
                    ModularInvariant(b.base_ptr(), std::move(zs), "Z_s"), {}};

  // Block shapes: Z_1 is a 36x36 block of ones with 33 at the fixed point plus
  // a 28x28 block of ones; Z_s is 35x35 ones bordered by 5s with 25 in the corner.
  const std::size_t fixed = labels.index_of_weight({1, 1, 1, 1, 1, 1});
  std::vector<std::size_t> vac, vec;
  for (std::size_t l = 0; l < n; ++l) {
    if (bm(r0, l)) vac.push_back(l);
    if (bm(rv, l)) vec.push_back(l);
  }
  auto expect_z1 = [&](std::size_t a, std::size_t c) -> std::int64_t {
    const bool in0 = bm(r0, a) && bm(r0, c), inv = bm(rv, a) && bm(rv, c);
    if (a == fixed && c == fixed) return 33;
    return in0 || inv ? 1 : 0;
  };
  auto expect_zs = [&](std::size_t a, std::size_t c) -> std::int64_t {
    if (!bm(r0, a) || !bm(r0, c)) return 0;
    return (a == fixed ? 5 : 1) * (c == fixed ? 5 : 1);
  };
  bool z1_ok = true, zs_ok = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      z1_ok = z1_ok && out.z1(a, c) == expect_z1(a, c);
      zs_ok = zs_ok && out.zs(a, c) == expect_zs(a, c);
    }
  out.structure.add_condition("1716 labels", n == 1716, std::to_string(n));
  out.structure.add_condition("vacuum block 36 labels", vac.size() == 36, std::to_string(vac.size()));
  out.structure.add_condition("vector block 28 labels", vec.size() == 28, std::to_string(vec.size()));
  out.structure.add_condition("s and c rows are 4 (1,1,1,1,1,1)",
                              bm(rs, fixed) == 4 && bm.row_sums()[rs] == 4 && bm.row_sums()[3] == 4 &&
                                  bm(3, fixed) == 4);
  out.structure.add_condition("Z_1 block shape (corner 33)", z1_ok);
  out.structure.add_condition("Z_s block shape (border 5, corner 25)", zs_ok);
  out.structure.require(ErrorCode::BranchingTableCorrupt, "SU(7)_7 invariants");
  return out;
}

}  // namespace modinv

#endif  // MODINV_BRANCHING_EXTENSIONS_HPP
