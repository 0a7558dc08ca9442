#ifndef MODINV_REPORTS_HPP
#define MODINV_REPORTS_HPP

#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "modinv/branching/extensions.hpp"
#include "modinv/invariants/enumerate.hpp"
#include "modinv/nimreps/nimrep.hpp"

namespace modinv {

/// One PASS/FAIL line of a worked example.
struct ReportLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<ReportLine> lines;

  void check(std::string name, bool pass, std::string detail = {}) {
    lines.push_back({std::move(name), pass, std::move(detail)});
  }
  bool ok() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const Report& r) {
    os << "# " << r.title << '\n';
    for (const auto& l : r.lines) {
      std::string name = l.name;
      if (name.size() < 52) name += ' ' + std::string(52 - name.size(), '.');
      os << name << ' ' << (l.pass ? "PASS" : "FAIL");
      if (!l.detail.empty()) os << "  " << l.detail;
      os << '\n';
    }
    return os;
  }
};

namespace detail {

inline std::string list(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

template <class Real>
std::shared_ptr<const ModularData<Real>> su(int n, int k, const PrecisionConfig& cfg) {
  return std::make_shared<const ModularData<Real>>(su_n_k<Real>(n, k, cfg));
}

}  // namespace detail

/// SU(2)_16: enumeration, invariant fusion rules, nimreps, sandwiches.
template <class Real>
Report report_su2_level16(const PrecisionConfig& cfg) {
  Report r{"SU(2)_16", {}};
  auto md = detail::su<Real>(2, 16, cfg);
  FusionRing<Real> ring(md);
  const auto found = enumerate_physical(*md, cfg);
  r.check("3 physical invariants", found.invariants.size() == 3, std::to_string(found.invariants.size()) + " found");
  const IntMatrix a = ade_invariant(ring, {'A', 17}).matrix();
  const IntMatrix d = ade_invariant(ring, {'D', 10}).matrix();
  const IntMatrix e = ade_invariant(ring, {'E', 7}).matrix();
  bool same = found.invariants.size() == 3;
  for (const auto& z : {a, d, e}) {
    bool hit = false;
    for (const auto& f : found.invariants) hit = hit || f.matrix() == z;
    same = same && hit;
  }
  r.check("enumeration = {A17, D10, E7}", same);
  r.check("Z_D10^2 = 2 Z_D10", d * d == 2 * d);
  r.check("Z_D10 Z_E7 = Z_E7 Z_D10 = 2 Z_E7", d * e == 2 * e && e * d == 2 * e);
  r.check("Z_E7^2 = Z_D10 + Z_E7", e * e == d + e);
  const auto sols = decompose(e * e, std::vector<IntMatrix>{a, d, e});
  r.check("decompose(Z_E7^2) over {A, D, E} unique", sols.size() == 1 && sols[0] == std::vector<std::int64_t>{0, 1, 1});
  for (const auto& [name, z] : {std::pair{"A17", a}, std::pair{"D10", d}, std::pair{"E7", e}}) {
    const auto nim = su2_nimrep(dynkin(name), ring);
    const auto ts = theta_sum_report(&nim, z, ring);
    r.check(std::string("sum_a theta_a three ways, ") + name, ts.report.ok(), detail::list(ts.fusion_sum));
    r.check(std::string("spectrum of ") + name, spectrum_report(nim, z).ok());
  }
  const auto bplus = simple_current_extension(ring, 16);
  const auto parts = sandwich_decomposition(bplus);
  Permutation id6(bplus.rows());
  for (std::size_t i = 0; i < id6.size(); ++i) id6[i] = i;
  r.check("B+ B+^t = 1_6 + t_0", parts.size() == 2 && parts[0].second == id6 && parts[0].first == 1 &&
                                    parts[1].first == 1);
  Permutation t1 = id6;
  std::size_t a2 = 0, f1 = 0, f2 = 0;
  for (std::size_t t = 0; t < bplus.rows(); ++t) {
    if (bplus.ext_name(t) == "(2)+(14)") a2 = t;
    if (bplus.ext_name(t) == "(8)#1") f1 = t;
    if (bplus.ext_name(t) == "(8)#2") f2 = t;
  }
  std::swap(t1[a2], t1[f1]);
  const auto bminus = bplus.permute_rows(t1);
  r.check("(B+)^t (t_1 B+) = Z_E7", restrict_invariant(bplus, bminus).matrix() == e);
  Permutation t2 = id6;
  std::swap(t2[a2], t2[f2]);
  r.check("B- B-^t = 1 + t_2", sandwich(bminus) == IntMatrix::identity(6) + IntMatrix::permutation(t2));
  return r;
}

/// SU(2)_28 E8: conformal embedding into (G2)_1 and the eta identification.
template <class Real>
Report report_e8(const PrecisionConfig& cfg) {
  Report r{"E8 at SU(2)_28", {}};
  auto md = detail::su<Real>(2, 28, cfg);
  FusionRing<Real> ring(md);
  const IntMatrix z = ade_invariant(ring, {'E', 8}).matrix();
  const auto b = embedding_branching("su2_28-g2");
  r.check("B^t B from SU(2)_28 < (G2)_1 = Z_E8", b.invariant() == z);
  r.check("Z_E8^2 = 4 Z_E8", z * z == 4 * z);
  auto sec = [&](std::initializer_list<int> ls) {
    SectorVector v(ring.labels());
    for (int l : ls) v[ring.md().labels().index_of_weight({l})] += 1;
    return v;
  };
  const SectorVector theta = sec({0, 10, 18, 28});
  SectorVector x = sec({5, 3});
  x -= sec({7});
  const auto t = fuse(ring, theta, fuse(ring, x, x));
  r.check("<id, theta (l5 + l3 - l7)^2> = 1", t[0] == 1, std::to_string(t[0]));
  const auto self = alpha_hom(z, ring, {x, x}, {x, x});
  r.check("<eta, eta> = 1", self == 1, std::to_string(self));
  const auto id = sec({0});
  const auto h0 = alpha_hom(z, ring, {x, x}, {id, id});
  const auto h1 = alpha_hom(z, ring, {x, x}, {sec({1}), sec({1})});
  const auto h2 = alpha_hom(z, ring, {x, x}, {sec({2}), sec({2})});
  r.check("eta disjoint from id, a1+a1-, a2+a2-", h0 == 0 && h1 == 0 && h2 == 0,
          detail::list({h0, h1, h2}));
  r.check("4 M-X-M+ orbits", orbit_counts(z).first == 4);
  const auto marked = marked_su2_graph("E8");
  const auto nim = su2_nimrep(dynkin("E8"), ring);
  r.check("theta at the marked E8 vertex = even-spin diagonal",
          theta_at_vertex(nim, marked.theta) ==
              candidate_theta(ModularInvariant(ring.labels(), z), md->conjugation(), ThetaSelection::EvenSpin));
  r.check("theta at iota = [l0] + [l10] + [l18] + [l28]", theta_at_vertex(nim, marked.iota) == theta);
  return r;
}

/// SU(3)_9 E^(12): hom counts, orbit counts, Z*Z = 6Z, sandwich.
template <class Real>
Report report_e12(const PrecisionConfig& cfg) {
  Report r{"E^(12) at SU(3)_9", {}};
  auto md = detail::su<Real>(3, 9, cfg);
  FusionRing<Real> ring(md);
  const ModularInvariant zi = su3_invariant(ring, "E^(12)");
  const IntMatrix& z = zi.matrix();
  r.check("Z verifies", verify_invariant(*md, z, cfg).ok());
  r.check("Z* Z = 6 Z", adjoint(z) * z == 6 * z);
  r.check("six M-X-M+ orbits", orbit_counts(z).first == 6);
  auto sec = [&](const char* s) { return SectorVector::parse(ring.labels(), s); };
  const auto f = sec("(1,0)"), two = sec("(2,0)");
  const auto ff = fuse(ring, f, f);
  const std::int64_t h[] = {alpha_hom(z, ring, {f, f}, {f, f}), alpha_hom(z, ring, {f, ff}, {f, ff}),
                            alpha_hom(z, ring, {two, f}, {two, f}), alpha_hom(z, ring, {two, ff}, {two, ff})};
  r.check("<a+(1,0) a-(1,0), same> = 1", h[0] == 1, std::to_string(h[0]));
  r.check("<a+(1,0) a-(1,0) a-(1,0), same> = 2", h[1] == 2, std::to_string(h[1]));
  r.check("<a+(2,0) a-(1,0), same> = 1", h[2] == 1, std::to_string(h[2]));
  r.check("<a+(2,0) a-(1,0) a-(1,0), same> = 4", h[3] == 4, std::to_string(h[3]));
  const auto cand = candidate_theta(zi, md->conjugation(), ThetaSelection::DiagonalConjugate);
  r.check("sum Z_{l lbar} l has 2[(2,2)] + 2[(5,2)] + 2[(2,5)]",
          cand == sec("(0,0) + (9,0) + (0,9) + (4,1) + (1,4) + (4,4) + 2(2,2) + 2(5,2) + 2(2,5)"));
  r.check("sum_a theta_a: fusion = spectral", theta_sum_report<Real>(nullptr, z, ring).report.ok());
  const auto b = embedding_branching("su3_9-e6");
  r.check("B^t B from SU(3)_9 < (E6)_1 = Z", b.invariant() == z);
  const auto parts = sandwich_decomposition(b);
  r.check("B B^t = 3 * 1_3 + 3 C", parts.size() == 2 && parts[0].first == 3 && parts[1].first == 3 &&
                                      parts[1].second == Permutation{0, 2, 1});
  return r;
}

/// SU(7)_7 from SO(48)_1: Z_1 and Z_s. The S/T check is optional (double precision).
inline Report report_su7(bool with_st = false) {
  Report r{"SU(7)_7 < SO(48)_1", {}};
  const auto s = su7_invariants();
  const IntMatrix& z1 = s.z1.matrix();
  const IntMatrix& zs = s.zs.matrix();
  r.check("1716 labels", s.branching.cols() == 1716, std::to_string(s.branching.cols()));
  r.check("tr Z_1 = 96", z1.trace() == 96, std::to_string(z1.trace()));
  r.check("tr Z_s = 60", zs.trace() == 60, std::to_string(zs.trace()));
  r.check("Z_1^2 = 28 Z_1 + 8 Z_s", z1 * z1 == 28 * z1 + 8 * zs);
  r.check("Z_s^2 = 60 Z_s", zs * zs == 60 * zs);
  r.check("tr Z_1^t Z_1 = 3168", z1.frobenius_square() == 3168, std::to_string(z1.frobenius_square()));
  r.check("tr Z_s^t Z_s = 3600", zs.frobenius_square() == 3600, std::to_string(zs.frobenius_square()));
  r.check("block structure (corner 33 = 1 + 2*4^2, border 5, corner 25)", s.structure.ok(), s.structure.first_failure());
  const auto machine = PrecisionConfig::machine();
  const auto so48 = level_one<double>("so", 48, machine);
  const auto het = heterotic_invariant(so48, machine);
  r.check("heterotic SO(48)_1 invariant is non-symmetric", !het.matrix().is_symmetric());
  r.check("B^t Z_het B = Z_s", pull_back(s.branching, het.matrix()).matrix() == zs);
  if (with_st) {
    auto cfg = machine;
    const auto md = su_n_k<double>(7, 7, cfg);
    const double tol = 1e-6;
    const auto v1 = verify_invariant(md, z1, cfg, tol);
    const auto vs = verify_invariant(md, zs, cfg, tol);
    r.check("Z_1 commutes with S and T (1e-6)", v1.ok(), v1.first_failure());
    r.check("Z_s commutes with S and T (1e-6)", vs.ok(), vs.first_failure());
  }
  return r;
}

/// Z_n suite for (n, a) in {(5,2), (9,2), (15,2)}.
template <class Real>
Report report_zn(const PrecisionConfig& cfg) {
  Report r{"Z_n invariants", {}};
  for (int n : {5, 9, 15}) {
    const auto md = zn_anyon<Real>(n, 2, cfg);
    const auto inv = zn_invariants(md, cfg);
    const auto divs = divisors(zn_tilde(n));
    const std::string tag = "Z_" + std::to_string(n);
    r.check(tag + ": one invariant per divisor", inv.size() == divs.size(),
            std::to_string(inv.size()) + " vs " + std::to_string(divs.size()));
    bool dual = true;
    for (const auto& [delta, z] : inv) {
      const ModularInvariant* other = nullptr;
      for (const auto& [d2, z2] : inv)
        if (d2 == n / delta) other = &z2;
      if (!other) {
        dual = false;
        continue;
      }
      for (std::size_t l = 0; l < md.size(); ++l)
        dual = dual && z(l, md.conjugation()[l]) == (*other)(l, l);
    }
    r.check(tag + ": Z(d)_{l,-l} = Z(n/d)_{l,l}", dual);
  }
  return r;
}

inline std::vector<std::string> report_names() { return {"su2-level16", "e8", "e12", "su7", "zn"}; }

}  // namespace modinv

#endif  // MODINV_REPORTS_HPP
