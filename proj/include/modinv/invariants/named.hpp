#ifndef MODINV_INVARIANTS_NAMED_HPP
#define MODINV_INVARIANTS_NAMED_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "modinv/invariants/enumerate.hpp"
#include "modinv/invariants/simple_current.hpp"
#include "modinv/modular/su_n.hpp"

namespace modinv {

/// An invariant together with the modular data it was checked against.
template <class Real>
struct NamedInvariant {
  std::shared_ptr<const ModularData<Real>> md;
  ModularInvariant z;
  ValidationReport report;
};

/// A_l, D_l, E6, E7 or E8.
struct AdeDiagram {
  char series = 'A';
  int rank = 1;

  int coxeter_number() const {
    switch (series) {
      case 'A': return rank + 1;
      case 'D': return 2 * rank - 2;
      case 'E': return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    }
    return 0;
  }

  std::string name() const { return std::string(1, series) + std::to_string(rank); }

  /// "A17", "A_17", "d10", "E7".
  static AdeDiagram parse(const std::string& text) {
    std::string t;
    for (char ch : text)
      if (ch != '_' && !std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.size() < 2) throw Error(ErrorCode::ParseError, "bad Dynkin diagram '" + text + "'");
    AdeDiagram d;
    d.series = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    try {
      std::size_t used = 0;
      d.rank = std::stoi(t.substr(1), &used);
      if (used != t.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad Dynkin diagram '" + text + "'");
    }
    const bool valid = (d.series == 'A' && d.rank >= 1) || (d.series == 'D' && d.rank >= 4) ||
                       (d.series == 'E' && d.rank >= 6 && d.rank <= 8);
    if (!valid) throw Error(ErrorCode::ParseError, "unknown Dynkin diagram '" + text + "'");
    return d;
  }
};

namespace detail {

/// sum_b mult_b |sum_{l in b} chi_l|^2
inline IntMatrix block_matrix(std::size_t n, const std::vector<std::pair<int, std::vector<std::size_t>>>& blocks) {
  IntMatrix m(n, n);
  for (const auto& [mult, b] : blocks)
    for (std::size_t i : b)
      for (std::size_t j : b) m(i, j) += mult;
  return m;
}

/// Indices of SU(2)_k labels given by their single Dynkin label.
inline std::vector<std::size_t> su2(const LabelSet& labels, std::initializer_list<int> ls) {
  std::vector<std::size_t> out;
  for (int l : ls) out.push_back(labels.index_of_weight({l}));
  return out;
}

/// SU(3) labels given as Dynkin pairs.
inline std::vector<std::size_t> su3(const LabelSet& labels, std::initializer_list<std::pair<int, int>> ls) {
  std::vector<std::size_t> out;
  for (auto [a, b] : ls) out.push_back(labels.index_of_weight({a, b}));
  return out;
}

/// D series written out block by block: for k = 0 mod 4 the orbits
/// {l, k-l} of even l plus 2|chi_{k/2}|^2, for k = 2 mod 4 the diagonal on
/// even l and chi_l conj(chi_{k-l}) on odd l.
inline IntMatrix su2_d_blocks(const LabelSet& labels, int k) {
  const std::size_t n = labels.size();
  IntMatrix m(n, n);
  auto at = [&](int l) { return labels.index_of_weight({l}); };
  if (k % 4 == 0) {
    for (int l = 0; l < k / 2; l += 2)
      for (int a : {l, k - l})
        for (int b : {l, k - l}) m(at(a), at(b)) += 1;
    m(at(k / 2), at(k / 2)) = 2;
  } else {
    for (int l = 0; l <= k; ++l) {
      if (l % 2 == 0)
        m(at(l), at(l)) = 1;
      else
        m(at(l), at(k - l)) = 1;
    }
  }
  return m;
}

}  // namespace detail

/// E6, E7 or E8 of SU(2)_10, _16, _28 from its block form.
inline IntMatrix ade_e_blocks(const LabelSet& labels, int rank) {
  using detail::su2;
  const std::size_t n = labels.size();
  const int need = rank == 6 ? 10 : rank == 7 ? 16 : 28;
  if (labels.theory().family != "su" || labels.theory().n != 2 || labels.theory().k != need)
    throw Error(ErrorCode::IncompatibleLevel, "E" + std::to_string(rank) + " lives on SU(2)_" + std::to_string(need));
  if (rank == 6)
    return detail::block_matrix(n, {{1, su2(labels, {0, 6})}, {1, su2(labels, {4, 10})}, {1, su2(labels, {3, 7})}});
  if (rank == 8)
    return detail::block_matrix(n, {{1, su2(labels, {0, 10, 18, 28})}, {1, su2(labels, {6, 12, 16, 22})}});
  IntMatrix m = detail::block_matrix(
      n, {{1, su2(labels, {0, 16})}, {1, su2(labels, {4, 12})}, {1, su2(labels, {6, 10})}, {1, su2(labels, {8})}});
  const std::size_t e = labels.index_of_weight({8});
  for (std::size_t l : su2(labels, {2, 14})) {
    m(l, e) += 1;
    m(e, l) += 1;
  }
  return m;
}

/// The ADE invariant of SU(2)_k from ring. D comes from the order-2 simple
/// current and is cross-checked against its block form.
template <class Real>
ModularInvariant ade_invariant(const FusionRing<Real>& ring, const AdeDiagram& d) {
  const LabelSet& labels = ring.md().labels();
  const TheoryId& id = labels.theory();
  if (id.family != "su" || id.n != 2) throw Error(ErrorCode::InvalidArgument, "ADE invariants live on SU(2)_k");
  const int k = id.k;
  if (d.coxeter_number() != k + 2)
    throw Error(ErrorCode::IncompatibleLevel, d.name() + " has Coxeter number " + std::to_string(d.coxeter_number()) +
                                                  ", level " + std::to_string(k) + " needs " + std::to_string(k + 2));
  const std::size_t n = labels.size();
  switch (d.series) {
    case 'A': return ModularInvariant(ring.labels(), IntMatrix::identity(n), d.name());
    case 'D': {
      auto z = simple_current_invariant(ring, labels.index_of_weight({k}), d.name());
      if (z.matrix() != detail::su2_d_blocks(labels, k))
        throw Error(ErrorCode::DataMismatch, d.name() + ": simple-current and block forms disagree");
      return z;
    }
    default: break;
  }
  return ModularInvariant(ring.labels(), ade_e_blocks(labels, d.rank), d.name());
}

/// Builds SU(2)_k, the invariant, and its verification report.
template <class Real>
NamedInvariant<Real> ade_invariant(const std::string& diagram, int k, const PrecisionConfig& cfg) {
  const AdeDiagram d = AdeDiagram::parse(diagram);
  if (d.coxeter_number() != k + 2)
    throw Error(ErrorCode::IncompatibleLevel,
                d.name() + " has Coxeter number " + std::to_string(d.coxeter_number()) + ", not " + std::to_string(k + 2));
  auto md = std::make_shared<const ModularData<Real>>(su_n_k<Real>(2, k, cfg));
  FusionRing<Real> ring(md);
  NamedInvariant<Real> out{md, ade_invariant(ring, d), {}};
  out.report = verify_invariant(*md, out.z, cfg);
  return out;
}

/// Diagrams with Coxeter number k + 2: A_{k+1}, D_{k/2+2} for even k >= 4, and E6/E7/E8 at 10/16/28.
inline std::vector<AdeDiagram> su2_diagrams(int k) {
  std::vector<AdeDiagram> out{{'A', k + 1}};
  if (k % 2 == 0 && k >= 4) out.push_back({'D', k / 2 + 2});
  if (k == 10) out.push_back({'E', 6});
  if (k == 16) out.push_back({'E', 7});
  if (k == 28) out.push_back({'E', 8});
  return out;
}

/// Level at which a named SU(3) invariant lives.
inline int su3_invariant_level(const std::string& name) {
  if (name == "D^(12)" || name == "D12" || name == "E^(12)" || name == "E12") return 9;
  if (name == "E^(8)" || name == "E8") return 5;
  if (name == "E^(24)" || name == "E24") return 21;
  throw Error(ErrorCode::InvalidArgument, "unknown SU(3) invariant '" + name + "'");
}

inline std::string canonical_su3_name(const std::string& name) {
  su3_invariant_level(name);
  if (name.find('^') != std::string::npos) return name;
  return name.substr(0, 1) + "^(" + name.substr(1) + ")";
}

/// E^(8), E^(12) or E^(24) from its block form; labels are Dynkin (l1, l2).
inline IntMatrix su3_e_blocks(const LabelSet& labels, const std::string& name) {
  const int k = su3_invariant_level(name);
  if (labels.theory().family != "su" || labels.theory().n != 3 || labels.theory().k != k)
    throw Error(ErrorCode::IncompatibleLevel, name + " lives on SU(3)_" + std::to_string(k));
  if (name == "D^(12)" || name == "D12") throw Error(ErrorCode::InvalidArgument, "D^(12) has no block form here");
  const std::size_t n = labels.size();
  using detail::su3;
  IntMatrix m;
  if (name == "E^(8)" || name == "E8") {
    m = detail::block_matrix(n, {{1, su3(labels, {{0, 0}, {2, 2}})},
                                 {1, su3(labels, {{0, 2}, {3, 2}})},
                                 {1, su3(labels, {{2, 0}, {2, 3}})},
                                 {1, su3(labels, {{2, 1}, {0, 5}})},
                                 {1, su3(labels, {{1, 2}, {5, 0}})},
                                 {1, su3(labels, {{3, 0}, {0, 3}})}});
  } else if (name == "E^(12)" || name == "E12") {
    m = detail::block_matrix(n, {{1, su3(labels, {{0, 0}, {9, 0}, {0, 9}, {4, 1}, {1, 4}, {4, 4}})},
                                 {2, su3(labels, {{2, 2}, {5, 2}, {2, 5}})}});
  } else {
    m = detail::block_matrix(n, {{1, su3(labels, {{0, 0}, {21, 0}, {0, 21}, {4, 4}, {13, 4}, {4, 13},
                                                  {10, 1}, {1, 10}, {10, 10}, {6, 6}, {9, 6}, {6, 9}})},
                                 {1, su3(labels, {{6, 0}, {15, 6}, {0, 15}, {15, 0}, {6, 15}, {0, 6},
                                                  {7, 4}, {10, 7}, {4, 10}, {4, 7}, {10, 4}, {7, 10}})}});
  }
  return m;
}

/// D^(12), E^(8), E^(12) or E^(24) on the given SU(3) ring, which must sit
/// at the matching level.
template <class Real>
ModularInvariant su3_invariant(const FusionRing<Real>& ring, const std::string& name) {
  const LabelSet& labels = ring.md().labels();
  const int k = su3_invariant_level(name);
  if (labels.theory().family != "su" || labels.theory().n != 3 || labels.theory().k != k)
    throw Error(ErrorCode::IncompatibleLevel, name + " lives on SU(3)_" + std::to_string(k));
  if (name == "D^(12)" || name == "D12") return simple_current_invariant(ring, labels.index_of_weight({9, 0}), "D^(12)");
  return ModularInvariant(ring.labels(), su3_e_blocks(labels, name), canonical_su3_name(name));
}

template <class Real>
NamedInvariant<Real> su3_invariant(const std::string& name, const PrecisionConfig& cfg) {
  auto md = std::make_shared<const ModularData<Real>>(su_n_k<Real>(3, su3_invariant_level(name), cfg));
  FusionRing<Real> ring(md);
  NamedInvariant<Real> out{md, su3_invariant(ring, name), {}};
  out.report = verify_invariant(*md, out.z, cfg);
  return out;
}

/// n~ = n for odd n, n/2 for even n.
inline int zn_tilde(int n) { return n % 2 ? n : n / 2; }

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// Enumerated invariants of a Z_n theory, each labelled by the divisor d of
/// n~ with Z_{l, -l} = 1 exactly when d | l. Sorted by d.
template <class Real>
std::vector<std::pair<int, ModularInvariant>> zn_invariants(const ModularData<Real>& md, const PrecisionConfig& cfg,
                                                            const EnumerationOptions& opt = {}) {
  if (md.theory().family != "zn") throw Error(ErrorCode::InvalidArgument, "zn_invariants needs Z_n modular data");
  const int n = md.theory().n;
  const auto divs = divisors(zn_tilde(n));
  auto found = enumerate_physical(md, cfg, opt).invariants;
  if (found.size() != divs.size())
    throw Error(ErrorCode::ClassificationMismatch, md.theory().display() + ": found " + std::to_string(found.size()) +
                                                       " invariants, n~ = " + std::to_string(zn_tilde(n)) + " has " +
                                                       std::to_string(divs.size()) + " divisors");
  std::vector<std::pair<int, ModularInvariant>> out;
  for (auto& z : found) {
    int match = 0;
    for (int d : divs) {
      bool ok = true;
      for (int l = 0; l < n && ok; ++l)
        ok = z(static_cast<std::size_t>(l), static_cast<std::size_t>((n - l) % n)) == (l % d == 0 ? 1 : 0);
      if (ok) {
        if (match) throw Error(ErrorCode::ClassificationMismatch, "two divisors match one invariant");
        match = d;
      }
    }
    if (!match) throw Error(ErrorCode::ClassificationMismatch, "an enumerated invariant matches no divisor");
    z.set_name("delta=" + std::to_string(match));
    out.emplace_back(match, std::move(z));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].first == out[i - 1].first)
      throw Error(ErrorCode::ClassificationMismatch, "divisor " + std::to_string(out[i].first) + " matched twice");
  return out;
}

}  // namespace modinv

#endif  // MODINV_INVARIANTS_NAMED_HPP
