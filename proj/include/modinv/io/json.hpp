#ifndef MODINV_IO_JSON_HPP
#define MODINV_IO_JSON_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "modinv/branching/branching_matrix.hpp"
#include "modinv/fusion/fusion_ring.hpp"
#include "modinv/invariants/modular_invariant.hpp"
#include "modinv/modular/theory.hpp"
#include "modinv/nimreps/graph.hpp"

namespace modinv::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline json header(const char* kind) { return json{{"schema", std::string("modinv.") + kind}, {"version", kSchemaVersion}}; }

inline void expect_schema(const json& j, const char* kind) {
  const std::string want = std::string("modinv.") + kind;
  if (!j.is_object() || j.value("schema", "") != want)
    throw Error(ErrorCode::ParseError, "expected a " + want + " document");
  if (j.value("version", 0) != kSchemaVersion)
    throw Error(ErrorCode::ParseError, want + ": unsupported version " + j.value("version", json(0)).dump());
}

inline std::string rational(const Rational& q) {
  return q.denominator() == 1 ? std::to_string(q.numerator())
                              : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  }
}

inline json theory(const TheoryId& id) {
  json p{{"n", id.n}};
  if (id.family == "su") p["k"] = id.k;
  if (id.family == "zn") p["a"] = id.a;
  return json{{"family", id.family}, {"params", p}};
}

inline TheoryId theory_from(const json& j) {
  TheoryId id;
  id.family = j.at("family").get<std::string>();
  const json& p = j.at("params");
  id.n = p.value("n", 0);
  id.k = id.family == "su" ? p.at("k").get<int>() : id.family == "zn" ? 0 : 1;
  id.a = p.value("a", 0);
  return id;
}

}  // namespace detail

/// {family, params, labels:[{name,h}], c, precision_digits}; S only on request.
template <class Real>
json to_json(const ModularData<Real>& md, bool include_s = false) {
  json j = detail::header("modular_data");
  j.update(detail::theory(md.theory()));
  json labels = json::array();
  for (std::size_t i = 0; i < md.size(); ++i)
    labels.push_back({{"name", md.labels().name(i)}, {"h", detail::rational(md.labels().h(i))}});
  j["labels"] = labels;
  j["c"] = detail::rational(md.c());
  j["precision_digits"] = md.config().digits;
  if (include_s) {
    json s = json::array();
    for (std::size_t a = 0; a < md.size(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < md.size(); ++b)
        row.push_back({to_double(md.S(a, b).real()), to_double(md.S(a, b).imag())});
      s.push_back(row);
    }
    j["S"] = s;
  }
  return j;
}

/// Rebuilds from params and checks the stored labels and c against the result.
template <class Real>
ModularData<Real> modular_data_from_json(const json& j, const PrecisionConfig& cfg) {
  detail::expect_schema(j, "modular_data");
  auto md = build_modular_data<Real>(detail::theory_from(j), cfg);
  const json& labels = j.at("labels");
  if (labels.size() != md.size()) throw Error(ErrorCode::DataMismatch, "label count differs from the rebuilt data");
  for (std::size_t i = 0; i < md.size(); ++i) {
    if (labels[i].at("name").get<std::string>() != md.labels().name(i) ||
        detail::parse_rational(labels[i].at("h").get<std::string>()) != md.labels().h(i))
      throw Error(ErrorCode::DataMismatch, "label " + std::to_string(i) + " differs from the rebuilt data");
  }
  if (detail::parse_rational(j.at("c").get<std::string>()) != md.c())
    throw Error(ErrorCode::DataMismatch, "central charge differs from the rebuilt data");
  return md;
}

/// {lambda, mu, products:[{nu, mult}]}
template <class Real>
json fusion_to_json(const FusionRing<Real>& ring, std::size_t l, std::size_t m) {
  json j = detail::header("fusion");
  const LabelSet& labels = ring.md().labels();
  j["lambda"] = labels.name(l);
  j["mu"] = labels.name(m);
  json products = json::array();
  const auto& r = ring.row(l, m);
  for (std::size_t nu = 0; nu < r.size(); ++nu)
    if (r[nu]) products.push_back({{"nu", labels.name(nu)}, {"mult", r[nu]}});
  j["products"] = products;
  return j;
}

/// {md_ref, name, size, entries:[[i,j,v]]}; md_ref is the theory's display name.
inline json to_json(const ModularInvariant& z) {
  json j = detail::header("invariant");
  j["md_ref"] = z.labels().theory().display();
  j["name"] = z.name();
  j["size"] = z.size();
  json entries = json::array();
  z.matrix().for_each_nonzero([&](std::size_t a, std::size_t b, std::int64_t v) { entries.push_back({a, b, v}); });
  j["entries"] = entries;
  return j;
}

inline ModularInvariant invariant_from_json(const json& j, std::shared_ptr<const LabelSet> labels) {
  detail::expect_schema(j, "invariant");
  const auto ref = j.at("md_ref").get<std::string>();
  if (ref != labels->theory().display())
    throw Error(ErrorCode::DataMismatch, "invariant belongs to " + ref + ", not " + labels->theory().display());
  const std::size_t n = labels->size();
  if (j.at("size").get<std::size_t>() != n) throw Error(ErrorCode::DataMismatch, "invariant size mismatch");
  IntMatrix m(n, n);
  for (const auto& e : j.at("entries")) {
    const auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
    if (a >= n || b >= n) throw Error(ErrorCode::ParseError, "invariant entry out of range");
    m(a, b) = e.at(2).get<std::int64_t>();
  }
  return ModularInvariant(std::move(labels), std::move(m), j.value("name", ""));
}

/// {name, vertices, edges:[[i,j,mult]], labels}; undirected graphs list i <= j.
inline json to_json(const Graph& g, const json& labels = json::object()) {
  json j = detail::header("graph");
  j["name"] = g.name();
  j["vertices"] = g.names();
  const bool undirected = g.adjacency().is_symmetric();
  j["directed"] = !undirected;
  json edges = json::array();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = undirected ? a : 0; b < g.size(); ++b)
      if (g.adjacency()(a, b)) edges.push_back({a, b, g.adjacency()(a, b)});
  j["edges"] = edges;
  j["labels"] = labels;
  return j;
}

inline Graph graph_from_json(const json& j) {
  detail::expect_schema(j, "graph");
  auto names = j.at("vertices").get<std::vector<std::string>>();
  const bool directed = j.value("directed", false);
  IntMatrix adj(names.size(), names.size());
  for (const auto& e : j.at("edges")) {
    const auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
    if (a >= names.size() || b >= names.size()) throw Error(ErrorCode::ParseError, "edge out of range");
    adj(a, b) = e.at(2).get<std::int64_t>();
    if (!directed) adj(b, a) = adj(a, b);
  }
  return Graph(std::move(names), std::move(adj), j.value("name", ""));
}

/// {md_ref, name, local, rows:[{name, ext_label?, terms:[[l, mult]]}]}
inline json to_json(const BranchingMatrix& b) {
  json j = detail::header("branching");
  j["md_ref"] = b.base_labels().theory().display();
  if (b.ext_labels()) j["ext_ref"] = b.ext_labels()->theory().display();
  j["name"] = b.name();
  j["local"] = b.is_local();
  json rows = json::array();
  for (std::size_t t = 0; t < b.rows(); ++t) {
    json row{{"name", b.ext_name(t)}};
    if (b.ext_index(t) != BranchingMatrix::npos) row["ext_label"] = b.ext_labels()->name(b.ext_index(t));
    json terms = json::array();
    for (std::size_t l = 0; l < b.cols(); ++l)
      if (b.matrix()(t, l)) terms.push_back({l, b.matrix()(t, l)});
    row["terms"] = terms;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

inline BranchingMatrix branching_from_json(const json& j, std::shared_ptr<const LabelSet> base,
                                           std::shared_ptr<const LabelSet> ext = nullptr) {
  detail::expect_schema(j, "branching");
  if (j.at("md_ref").get<std::string>() != base->theory().display())
    throw Error(ErrorCode::DataMismatch, "branching belongs to " + j.at("md_ref").get<std::string>());
  const json& rows = j.at("rows");
  IntMatrix b(rows.size(), base->size());
  std::vector<std::string> names;
  std::vector<std::size_t> index;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    names.push_back(rows[t].at("name").get<std::string>());
    if (ext && rows[t].contains("ext_label")) index.push_back(ext->index_of(rows[t]["ext_label"].get<std::string>()));
    else index.push_back(BranchingMatrix::npos);
    for (const auto& term : rows[t].at("terms")) {
      const auto l = term.at(0).get<std::size_t>();
      if (l >= base->size()) throw Error(ErrorCode::ParseError, "branching term out of range");
      b(t, l) = term.at(1).get<std::int64_t>();
    }
  }
  BranchingMatrix out(std::move(base), std::move(names), std::move(b), ext ? std::move(ext) : nullptr,
                      ext ? std::move(index) : std::vector<std::size_t>{}, j.value("local", true));
  out.set_name(j.value("name", ""));
  return out;
}

inline json to_json(const ValidationReport& r) {
  json j = detail::header("report");
  j["ok"] = r.ok();
  json checks = json::array();
  for (const auto& c : r.checks()) {
    json x{{"name", c.name}, {"passed", c.passed}};
    if (c.tolerance > 0) {
      x["residual"] = c.residual;
      x["tolerance"] = c.tolerance;
    }
    if (c.informational) x["informational"] = true;
    if (!c.detail.empty()) x["detail"] = c.detail;
    checks.push_back(x);
  }
  j["checks"] = checks;
  return j;
}

inline json to_json(const SectorVector& v) {
  json j = detail::header("sectors");
  j["md_ref"] = v.labels().theory().display();
  json terms = json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) terms.push_back({{"label", v.labels().name(i)}, {"mult", v[i]}});
  j["terms"] = terms;
  return j;
}

}  // namespace modinv::io

#endif  // MODINV_IO_JSON_HPP
