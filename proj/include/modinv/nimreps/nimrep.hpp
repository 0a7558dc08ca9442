#ifndef MODINV_NIMREPS_NIMREP_HPP
#define MODINV_NIMREPS_NIMREP_HPP

#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "modinv/branching/table.hpp"
#include "modinv/fusion/fusion_ring.hpp"
#include "modinv/invariants/modular_invariant.hpp"
#include "modinv/modular/su_n.hpp"
#include "modinv/nimreps/graph.hpp"
#include "modinv/numerics/charpoly.hpp"

namespace modinv {

/// Non-negative integer matrices G_l, one per label, acting on a vertex set.
template <class Real>
class Nimrep {
 public:
  Nimrep(std::shared_ptr<const ModularData<Real>> md, std::vector<std::string> vertices, std::vector<IntMatrix> g,
         std::string name = {})
      : md_(std::move(md)), vertices_(std::move(vertices)), g_(std::move(g)), name_(std::move(name)) {
    if (g_.size() != md_->size()) throw Error(ErrorCode::InvalidArgument, "need one nimrep matrix per label");
    for (const auto& m : g_)
      if (m.rows() != vertices_.size() || !m.is_square())
        throw Error(ErrorCode::InvalidArgument, "nimrep matrix does not match the vertex count");
  }

  const ModularData<Real>& md() const noexcept { return *md_; }
  const std::shared_ptr<const ModularData<Real>>& md_ptr() const noexcept { return md_; }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const IntMatrix& G(std::size_t l) const { return g_.at(l); }
  const std::vector<IntMatrix>& matrices() const noexcept { return g_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::shared_ptr<const ModularData<Real>> md_;
  std::vector<std::string> vertices_;
  std::vector<IntMatrix> g_;
  std::string name_;
};

/// G_0 = 1, G_l G_m = sum_nu N_{lm}^nu G_nu, G_{lbar} = G_l^t, all exact.
template <class Real>
ValidationReport verify_nimrep(const Nimrep<Real>& nim, const FusionRing<Real>& ring) {
  ValidationReport report;
  const std::size_t n = nim.md().size();
  report.add_condition("G_0 = 1", nim.G(0) == IntMatrix::identity(nim.size()));
  bool nonneg = true;
  for (const auto& m : nim.matrices()) nonneg = nonneg && m.is_nonnegative();
  report.add_condition("entries non-negative", nonneg);
  std::string bad_conj;
  const auto& conj = nim.md().conjugation();
  for (std::size_t l = 0; l < n && bad_conj.empty(); ++l)
    if (nim.G(conj[l]) != nim.G(l).transpose()) bad_conj = nim.md().labels().name(l);
  report.add_condition("G_lbar = G_l^t", bad_conj.empty(), bad_conj);
  std::string bad_prod;
  for (std::size_t l = 0; l < n && bad_prod.empty(); ++l)
    for (std::size_t m = l; m < n && bad_prod.empty(); ++m) {
      const auto& r = ring.row(l, m);
      IntMatrix rhs(nim.size(), nim.size());
      for (std::size_t nu = 0; nu < n; ++nu)
        if (r[nu]) rhs += r[nu] * nim.G(nu);
      if (nim.G(l) * nim.G(m) != rhs || nim.G(m) * nim.G(l) != rhs)
        bad_prod = nim.md().labels().name(l) + " x " + nim.md().labels().name(m);
    }
  report.add_condition("G_l G_m = sum N G_nu", bad_prod.empty(), bad_prod);
  return report;
}

/// The regular nimrep G_l = N_l on the labels themselves.
template <class Real>
Nimrep<Real> regular_nimrep(const FusionRing<Real>& ring) {
  std::vector<IntMatrix> g;
  for (std::size_t l = 0; l < ring.size(); ++l) g.push_back(ring.fusion_matrix(l));
  return Nimrep<Real>(ring.md_ptr(), ring.md().labels().names(), std::move(g), "regular");
}

/// SU(2)_k nimrep of a graph: G_0 = 1, G_1 = adj, G_{m+1} = G_1 G_m - G_{m-1}.
/// Throws CoxeterMismatch when the Perron-Frobenius value is not
/// 2 cos(pi/(k+2)) and NegativeEntry when the recursion leaves N.
template <class Real>
Nimrep<Real> su2_nimrep(const Graph& graph, const FusionRing<Real>& ring) {
  const auto md = ring.md_ptr();
  const TheoryId& id = md->theory();
  if (id.family != "su" || id.n != 2) throw Error(ErrorCode::InvalidArgument, "su2_nimrep needs SU(2)_k data");
  const int k = id.k;
  const double pf = to_double(perron_frobenius<double>(graph, PrecisionConfig::machine()).value);
  const double expected = 2 * std::cos(std::acos(-1.0) / (k + 2));
  if (std::abs(pf - expected) > 1e-6) {
    std::ostringstream os;
    os << graph.name() << " has Perron-Frobenius value " << pf << ", level " << k << " needs " << expected;
    throw Error(ErrorCode::CoxeterMismatch, os.str());
  }
  const std::size_t v = graph.size();
  std::vector<IntMatrix> g{IntMatrix::identity(v), graph.adjacency()};
  for (int m = 1; m < k; ++m) {
    IntMatrix next = g[1] * g[m];
    next -= g[m - 1];
    if (!next.is_nonnegative())
      throw Error(ErrorCode::NegativeEntry, graph.name() + " is not a level " + std::to_string(k) + " nimrep (G_" +
                                                std::to_string(m + 1) + " has a negative entry)");
    g.push_back(std::move(next));
  }
  g.resize(static_cast<std::size_t>(k) + 1);
  Nimrep<Real> nim(md, graph.names(), std::move(g), graph.name());
  verify_nimrep(nim, ring).require(ErrorCode::ValidationFailed, graph.name() + " nimrep axioms");
  return nim;
}

template <class Real>
Nimrep<Real> su2_nimrep(const Graph& graph, std::shared_ptr<const ModularData<Real>> md) {
  return su2_nimrep(graph, FusionRing<Real>(std::move(md)));
}

template <class Real>
Nimrep<Real> su2_nimrep(const Graph& graph, int k, const PrecisionConfig& cfg) {
  return su2_nimrep(graph, std::make_shared<const ModularData<Real>>(su_n_k<Real>(2, k, cfg)));
}

namespace detail {

/// sum_rho Z_{rho rho} S_{rho l} / S_{rho 0} for every l.
template <class Real>
std::vector<Complex<Real>> spectral_traces(const ModularData<Real>& md, const IntMatrix& z) {
  const std::size_t n = md.size();
  std::vector<Complex<Real>> out(n, Complex<Real>(0));
  for (std::size_t rho = 0; rho < n; ++rho) {
    if (z(rho, rho) == 0) continue;
    const Complex<Real> inv = Real(z(rho, rho)) / md.S(rho, 0);
    for (std::size_t l = 0; l < n; ++l) out[l] += md.S(rho, l) * inv;
  }
  return out;
}

inline void check_square_over(const IntMatrix& z, std::size_t n) {
  if (!z.is_square() || z.rows() != n) throw Error(ErrorCode::InvalidArgument, "invariant does not match the labels");
}

}  // namespace detail

/// tr G_l against the diagonal of Z for every l; for SU(2) also the spectrum
/// of G_1 against {2 cos(pi (rho+1)/(k+2)) with multiplicity Z_{rho rho}}.
template <class Real>
ValidationReport spectrum_report(const Nimrep<Real>& nim, const IntMatrix& z) {
  using std::abs;
  using std::cos;
  const auto& md = nim.md();
  const auto& cfg = md.config();
  detail::check_square_over(z, md.size());
  ValidationReport report;
  const auto traces = detail::spectral_traces(md, z);
  std::string first;
  double worst = 0;
  for (std::size_t l = 0; l < md.size(); ++l) {
    const Complex<Real> diff = traces[l] - Complex<Real>(Real(nim.G(l).trace()), Real(0));
    const double r = to_double(Real(abs(diff)));
    if (r > worst) worst = r;
    if (r > cfg.int_tol && first.empty()) first = md.labels().name(l);
  }
  report.add_residual("tr G_l = sum Z_rr S_rl / S_r0", worst, cfg.int_tol, first);
  const TheoryId& id = md.theory();
  if (id.family == "su" && id.n == 2 && md.size() > 1) {
    const auto poly = characteristic_polynomial(nim.G(1));
    std::string bad;
    std::size_t total = 0;
    for (std::size_t rho = 0; rho < md.size(); ++rho) {
      const Real x = 2 * cos(pi<Real>() * Real(static_cast<long>(rho + 1)) / Real(id.k + 2));
      const std::size_t mult = root_multiplicity(poly, Complex<Real>(x, Real(0)), cfg.int_tol);
      total += mult;
      if (static_cast<std::int64_t>(mult) != z(rho, rho) && bad.empty())
        bad = "exponent " + std::to_string(rho + 1) + ": " + std::to_string(mult) + " vs " + std::to_string(z(rho, rho));
    }
    if (bad.empty() && total != nim.size()) bad = "eigenvalues outside the exponent set";
    report.add_condition("G_1 spectrum = diagonal of Z", bad.empty(), bad);
  }
  return report;
}

/// Throws SpectrumMismatch with the first failing check.
template <class Real>
ValidationReport spectrum_check(const Nimrep<Real>& nim, const IntMatrix& z) {
  auto report = spectrum_report(nim, z);
  report.require(ErrorCode::SpectrumMismatch, nim.name() + " spectrum");
  return report;
}

/// Exponents rho+1 with multiplicity Z_{rho rho} (SU(2) numbering).
inline std::vector<int> su2_exponents(const IntMatrix& z) {
  std::vector<int> out;
  for (std::size_t rho = 0; rho < z.rows(); ++rho)
    for (std::int64_t m = 0; m < z(rho, rho); ++m) out.push_back(static_cast<int>(rho) + 1);
  return out;
}

/// theta_a = sum_nu (G_nu)_{aa} nu.
template <class Real>
SectorVector theta_at_vertex(const Nimrep<Real>& nim, std::size_t a) {
  if (a >= nim.size()) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
  SectorVector out(nim.md().label_set_ptr());
  for (std::size_t nu = 0; nu < nim.md().size(); ++nu) out[nu] = nim.G(nu)(a, a);
  return out;
}

/// The three evaluations of the nu-multiplicity of sum_a theta_a.
struct ThetaSum {
  std::vector<std::int64_t> vertex_sum;    // sum_a (G_nu)_{aa}; empty without a nimrep
  std::vector<std::int64_t> fusion_sum;    // sum_{l m} Z_{lm} N_{nu m}^l
  std::vector<std::int64_t> spectral_sum;  // sum_rho Z_rr S_{r nu}/S_{r 0}, rounded
  ValidationReport report;
};

/// Builds all three (two without a nimrep) and records agreement, integrality
/// and non-negativity.
template <class Real>
ThetaSum theta_sum_report(const Nimrep<Real>* nim, const IntMatrix& z, const FusionRing<Real>& ring) {
  using std::abs;
  using std::round;
  const auto& md = ring.md();
  const auto& cfg = md.config();
  const std::size_t n = md.size();
  detail::check_square_over(z, n);
  ThetaSum out;
  if (nim) {
    out.vertex_sum.assign(n, 0);
    for (std::size_t nu = 0; nu < n; ++nu) out.vertex_sum[nu] = nim->G(nu).trace();
  }
  // N_{nu m}^l = N_{l mbar}^nu
  out.fusion_sum.assign(n, 0);
  const auto& conj = md.conjugation();
  z.for_each_nonzero([&](std::size_t l, std::size_t m, std::int64_t v) {
    const auto& r = ring.row(l, conj[m]);
    for (std::size_t nu = 0; nu < n; ++nu) out.fusion_sum[nu] += v * r[nu];
  });
  const auto traces = detail::spectral_traces(md, z);
  double worst = 0;
  out.spectral_sum.assign(n, 0);
  for (std::size_t nu = 0; nu < n; ++nu) {
    const Real rounded = round(traces[nu].real());
    worst = std::max(worst, to_double(Real(abs(traces[nu] - Complex<Real>(rounded, Real(0))))));
    out.spectral_sum[nu] = static_cast<std::int64_t>(to_double(rounded));
  }
  out.report.add_residual("spectral evaluation integral", worst, cfg.int_tol);
  std::string first;
  for (std::size_t nu = 0; nu < n && first.empty(); ++nu) {
    const bool agree = out.fusion_sum[nu] == out.spectral_sum[nu] && (!nim || out.vertex_sum[nu] == out.fusion_sum[nu]);
    if (!agree) first = md.labels().name(nu);
  }
  out.report.add_condition(nim ? "vertex = fusion = spectral" : "fusion = spectral", first.empty(), first);
  bool nonneg = true;
  for (auto x : out.fusion_sum) nonneg = nonneg && x >= 0;
  out.report.add_condition("multiplicities non-negative", nonneg);
  return out;
}

/// Throws IdentityViolated unless all evaluations agree.
template <class Real>
ThetaSum theta_sum_check(const Nimrep<Real>* nim, const IntMatrix& z, const FusionRing<Real>& ring) {
  auto out = theta_sum_report(nim, z, ring);
  out.report.require(ErrorCode::IdentityViolated, "theta sum identity");
  return out;
}

enum class ThetaSelection { DiagonalConjugate, EvenSpin, All };

inline ThetaSelection parse_theta_selection(const std::string& s) {
  if (s == "diagonal-conjugate") return ThetaSelection::DiagonalConjugate;
  if (s == "even-spin") return ThetaSelection::EvenSpin;
  if (s == "all") return ThetaSelection::All;
  throw Error(ErrorCode::InvalidArgument, "unknown selection '" + s + "'");
}

/// sum_l Z_{l lbar} l; even-spin keeps even SU(2) labels only. `all` applies no
/// filter and so coincides with diagonal-conjugate.
inline SectorVector candidate_theta(const ModularInvariant& z, const Permutation& conj, ThetaSelection sel) {
  const LabelSet& labels = z.labels();
  if (sel == ThetaSelection::EvenSpin && (labels.theory().family != "su" || labels.theory().n != 2))
    throw Error(ErrorCode::InvalidArgument, "even-spin selection is defined for SU(2) only");
  SectorVector out(z.label_set_ptr());
  for (std::size_t l = 0; l < z.size(); ++l) {
    if (sel == ThetaSelection::EvenSpin && labels.weight(l)[0] % 2 != 0) continue;
    out[l] = z(l, conj[l]);
  }
  return out;
}

/// (sum_l Z_{0l}^2, sum_l Z_{l0}^2).
inline std::pair<std::int64_t, std::int64_t> orbit_counts(const IntMatrix& z) {
  std::int64_t plus = 0, minus = 0;
  for (std::size_t l = 0; l < z.rows(); ++l) {
    plus += z(0, l) * z(0, l);
    minus += z(l, 0) * z(l, 0);
  }
  return {plus, minus};
}

/// dim(theta_a) / psi_a^2 is the same for every vertex, psi the
/// Perron-Frobenius vector of G_gen.
template <class Real>
ValidationReport pf_dimension_check(const Nimrep<Real>& nim, std::size_t gen = 1) {
  using std::abs;
  const auto& cfg = nim.md().config();
  const auto pf = perron_frobenius<Real>(fusion_graph(nim.G(gen)), cfg);
  ValidationReport report;
  report.add_condition("G_gen connected", components(fusion_graph(nim.G(gen))).count == 1);
  std::vector<Real> ratio;
  for (std::size_t a = 0; a < nim.size(); ++a) {
    Real dim(0);
    for (std::size_t nu = 0; nu < nim.md().size(); ++nu) dim += Real(nim.G(nu)(a, a)) * nim.md().d()[nu];
    ratio.push_back(dim / (pf.vector[a] * pf.vector[a]));
  }
  double worst = 0;
  for (const auto& r : ratio) worst = std::max(worst, to_double(Real(abs(r / ratio[0] - 1))));
  // the eigenvector error is the power-iteration residual over the spectral gap
  report.add_residual("dim theta_a proportional to psi_a^2", worst, std::pow(10.0, -cfg.digits / 2.0 + 4));
  return report;
}

/// Components of the graph of sum_{tau in sub} G_tau and the multiplicity of
/// its eigenvalue sum_{tau in sub} d_tau.
struct ComponentCount {
  std::size_t components = 0;
  std::size_t multiplicity = 0;
};

template <class Real>
ComponentCount component_count(const Nimrep<Real>& nim, const std::vector<std::size_t>& sub) {
  IntMatrix m(nim.size(), nim.size());
  Real target(0);
  for (std::size_t t : sub) {
    m += nim.G(t);
    target += nim.md().d()[t];
  }
  ComponentCount c;
  c.components = components(fusion_graph(m)).count;
  c.multiplicity = root_multiplicity(characteristic_polynomial(m), Complex<Real>(target, Real(0)), nim.md().config().int_tol);
  return c;
}

/// A marked SU(2) graph from the builtin vertex table.
struct MarkedGraph {
  AdeDiagram diagram;
  int level = 0;
  std::size_t iota = 0;
  std::size_t theta = 0;
};

inline std::vector<MarkedGraph> marked_su2_graphs() {
  std::istringstream in(embedded_file("graphs/su2_vertices.txt"));
  std::vector<MarkedGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == '@') continue;
    std::istringstream ls(line);
    std::string d;
    MarkedGraph g;
    if (!(ls >> d >> g.level >> g.iota >> g.theta)) throw Error(ErrorCode::ParseError, "bad graph line '" + line + "'");
    g.diagram = AdeDiagram::parse(d);
    out.push_back(g);
  }
  return out;
}

inline MarkedGraph marked_su2_graph(const std::string& diagram) {
  const AdeDiagram d = AdeDiagram::parse(diagram);
  for (const auto& g : marked_su2_graphs())
    if (g.diagram.name() == d.name()) return g;
  throw Error(ErrorCode::InvalidArgument, "no marked vertices stored for " + d.name());
}

}  // namespace modinv

#endif  // MODINV_NIMREPS_NIMREP_HPP
