#ifndef MODINV_NIMREPS_GRAPH_HPP
#define MODINV_NIMREPS_GRAPH_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/invariants/named.hpp"
#include "modinv/numerics/int_matrix.hpp"
#include "modinv/numerics/precision.hpp"

namespace modinv {

/// Vertices with names and a non-negative integer adjacency matrix.
class Graph {
 public:
  Graph(std::vector<std::string> names, IntMatrix adj, std::string name = {})
      : names_(std::move(names)), adj_(std::move(adj)), name_(std::move(name)) {
    if (!adj_.is_square() || adj_.rows() != names_.size())
      throw Error(ErrorCode::InvalidArgument, "adjacency does not match the vertex count");
    if (!adj_.is_nonnegative()) throw Error(ErrorCode::NegativeEntry, "negative adjacency entry");
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& vertex(std::size_t i) const { return names_.at(i); }
  const IntMatrix& adjacency() const noexcept { return adj_; }
  const std::string& name() const noexcept { return name_; }

  std::size_t degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < size(); ++j) d += static_cast<std::size_t>(adj_(i, j));
    return d;
  }

  /// Vertices of degree three or more.
  std::vector<std::size_t> branch_nodes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (degree(i) >= 3) out.push_back(i);
    return out;
  }

  std::size_t index_of(const std::string& v) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (names_[i] == v) return i;
    throw Error(ErrorCode::InvalidArgument, "no vertex '" + v + "' in " + name_);
  }

 private:
  std::vector<std::string> names_;
  IntMatrix adj_;
  std::string name_;
};

/// Simply-laced Dynkin diagram.
///   A_l: path 0..l-1
///   D_l: path 0..l-2, plus l-1 joined to l-3
///   E_n: path 0..n-2, plus n-1 joined to 2
inline Graph dynkin(const AdeDiagram& d) {
  const auto n = static_cast<std::size_t>(d.rank);
  IntMatrix a(n, n);
  auto join = [&](std::size_t i, std::size_t j) { a(i, j) = a(j, i) = 1; };
  const std::size_t chain = d.series == 'A' ? n : n - 1;
  for (std::size_t i = 0; i + 1 < chain; ++i) join(i, i + 1);
  if (d.series == 'D') join(n - 3, n - 1);
  if (d.series == 'E') join(2, n - 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Graph(std::move(names), std::move(a), d.name());
}

inline Graph dynkin(const std::string& diagram) { return dynkin(AdeDiagram::parse(diagram)); }

/// Graph with adjacency m and vertices named 0..n-1 (or the given names).
inline Graph fusion_graph(const IntMatrix& m, std::vector<std::string> names = {}, std::string name = {}) {
  if (names.empty())
    for (std::size_t i = 0; i < m.rows(); ++i) names.push_back(std::to_string(i));
  return Graph(std::move(names), m, std::move(name));
}

/// Block-diagonal union.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t n = a.size(), m = b.size();
  IntMatrix adj(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj(i, j) = a.adjacency()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) adj(n + i, n + j) = b.adjacency()(i, j);
  std::vector<std::string> names;
  for (const auto& v : a.names()) names.push_back(a.name() + ":" + v);
  for (const auto& v : b.names()) names.push_back(b.name() + ":" + v);
  return Graph(std::move(names), std::move(adj), a.name() + "+" + b.name());
}

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> component;           // vertex -> component id
  std::vector<std::vector<std::size_t>> parts;  // id -> vertices, in order of first vertex
};

/// Connected components of the support of adj + adj^t.
inline Components components(const Graph& g) {
  const std::size_t n = g.size();
  const IntMatrix& a = g.adjacency();
  Components c;
  c.component.assign(n, static_cast<std::size_t>(-1));
  for (std::size_t s = 0; s < n; ++s) {
    if (c.component[s] != static_cast<std::size_t>(-1)) continue;
    std::vector<std::size_t> part{s}, stack{s};
    c.component[s] = c.count;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if ((a(v, w) || a(w, v)) && c.component[w] == static_cast<std::size_t>(-1)) {
          c.component[w] = c.count;
          part.push_back(w);
          stack.push_back(w);
        }
    }
    std::sort(part.begin(), part.end());
    c.parts.push_back(std::move(part));
    ++c.count;
  }
  return c;
}

template <class Real>
struct PerronFrobenius {
  Real value;                    // largest over components
  std::vector<Real> vector;      // unit vector per component, summed
  std::vector<Real> component_values;
};

/// Power iteration on A + 1 per component, stopping at |A v - r v| <= 10^{-digits/2}.
template <class Real>
PerronFrobenius<Real> perron_frobenius(const Graph& g, const PrecisionConfig& cfg) {
  using std::abs;
  using std::pow;
  using std::sqrt;
  const IntMatrix& a = g.adjacency();
  const auto comps = components(g);
  const Real tol = pow(Real(10), -Real(cfg.digits) / 2);
  PerronFrobenius<Real> out{Real(0), std::vector<Real>(g.size(), Real(0)), {}};
  for (const auto& part : comps.parts) {
    const std::size_t m = part.size();
    std::vector<Real> v(m, Real(1) / sqrt(Real(m))), w(m);
    Real r(0);
    for (int iter = 0; iter < 200000; ++iter) {
      for (std::size_t i = 0; i < m; ++i) {
        Real s(0);
        for (std::size_t j = 0; j < m; ++j)
          if (a(part[i], part[j])) s += Real(a(part[i], part[j])) * v[j];
        w[i] = s;
      }
      Real rq(0), norm(0);
      for (std::size_t i = 0; i < m; ++i) rq += v[i] * w[i];
      Real resid(0);
      for (std::size_t i = 0; i < m; ++i) resid = std::max<Real>(resid, abs(w[i] - rq * v[i]));
      r = rq;
      if (resid <= tol) break;
      for (std::size_t i = 0; i < m; ++i) {
        w[i] += v[i];
        norm += w[i] * w[i];
      }
      norm = sqrt(norm);
      for (std::size_t i = 0; i < m; ++i) v[i] = w[i] / norm;
    }
    for (std::size_t i = 0; i < m; ++i) out.vector[part[i]] = v[i];
    out.component_values.push_back(r);
    if (r > out.value) out.value = r;
  }
  return out;
}

/// DOT text. Symmetric adjacency gives an undirected graph; entries above one
/// become edge labels.
inline std::string dot_export(const Graph& g) {
  const IntMatrix& a = g.adjacency();
  const bool undirected = a.is_symmetric();
  std::ostringstream os;
  std::string id = g.name().empty() ? "G" : g.name();
  for (char& ch : id)
    if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
  os << (undirected ? "graph " : "digraph ") << id << " {\n";
  for (std::size_t i = 0; i < g.size(); ++i) os << "  v" << i << " [label=\"" << g.vertex(i) << "\"];\n";
  const char* arrow = undirected ? " -- " : " -> ";
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = undirected ? i : 0; j < g.size(); ++j) {
      const auto m = a(i, j);
      if (m == 0) continue;
      os << "  v" << i << arrow << "v" << j;
      if (m > 1) os << " [label=\"" << m << "\"]";
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace modinv

#endif  // MODINV_NIMREPS_GRAPH_HPP
