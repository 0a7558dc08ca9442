// modinv: command-line front end. Exit 0 on success, 1 when a computation or
// check fails, 2 on usage errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "modinv/io/json.hpp"
#include "modinv/reports.hpp"

using namespace modinv;
using io::json;

namespace {

constexpr std::size_t kAutoDoubleLabels = 200;

struct Globals {
  int digits = 50;
  bool fast = false;
  bool json = false;
  unsigned threads = 1;
};

struct ModelArgs {
  std::string spec;
  std::vector<std::string> family;  // family [rank]
  int level = -1;
  int a = -1;
};

/// A failed check whose report has already been printed.
struct CheckFailed {};

int default_digits() {
  if (const char* env = std::getenv("MODINV_DIGITS")) {
    try {
      const int d = std::stoi(env);
      if (d >= 10 && d <= 1000) return d;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring MODINV_DIGITS=" << env << '\n';
  }
  return 50;
}

TheoryId resolve_model(const ModelArgs& m) {
  if (!m.spec.empty() && !m.family.empty()) throw Error(ErrorCode::InvalidArgument, "give a model or --family, not both");
  if (!m.spec.empty()) return parse_theory(m.spec);
  if (m.family.empty()) throw Error(ErrorCode::InvalidArgument, "no model given (e.g. su2_16 or --family su 2 --level 16)");
  TheoryId id;
  id.family = m.family[0];
  for (auto& ch : id.family) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  const int rank = m.family.size() > 1 ? std::stoi(m.family[1]) : 0;
  if (id.family == "su") {
    if (rank < 2 || m.level < 1) throw Error(ErrorCode::InvalidArgument, "--family su needs a rank >= 2 and --level");
    return TheoryId{"su", rank, m.level, 0};
  }
  if (id.family == "zn" || id.family == "z") {
    if (rank < 2 || m.a < 0) throw Error(ErrorCode::InvalidArgument, "--family zn needs n and --a");
    return TheoryId{"zn", rank, 0, m.a};
  }
  if (id.family == "so") return TheoryId{"so", rank, 1, 0};
  return TheoryId{id.family, 0, 1, 0};
}

std::size_t label_count(const TheoryId& id) {
  if (id.family == "su") return su_n_k_labels(id.n, id.k)->size();
  if (id.family == "zn") return static_cast<std::size_t>(id.n);
  return 4;
}

template <class Real>
struct Context {
  Globals g;
  PrecisionConfig cfg;
  std::shared_ptr<const ModularData<Real>> md;
  std::shared_ptr<FusionRing<Real>> ring;

  const LabelSet& labels() const { return md->labels(); }
  const TheoryId& theory() const { return md->theory(); }
};

PrecisionConfig precision(const Globals& g) { return g.fast ? PrecisionConfig::machine() : PrecisionConfig::high(g.digits); }

/// Builds the modular data in the requested precision (double above
/// kAutoDoubleLabels labels) and hands a Context to fn.
template <class Fn>
int with_model(const Globals& g, const TheoryId& id, Fn&& fn) {
  const bool fast = g.fast || label_count(id) > kAutoDoubleLabels;
  if (fast && !g.fast) std::cerr << "note: " << id.display() << " has more than " << kAutoDoubleLabels
                                 << " labels; using machine precision\n";
  if (fast) {
    Context<double> ctx{g, PrecisionConfig::machine(), nullptr, nullptr};
    ctx.md = std::make_shared<const ModularData<double>>(build_modular_data<double>(id, ctx.cfg));
    ctx.ring = std::make_shared<FusionRing<double>>(ctx.md);
    return fn(ctx);
  }
  Context<HighPrec> ctx{g, PrecisionConfig::high(g.digits), nullptr, nullptr};
  apply_precision(ctx.cfg);
  ctx.md = std::make_shared<const ModularData<HighPrec>>(build_modular_data<HighPrec>(id, ctx.cfg));
  ctx.ring = std::make_shared<FusionRing<HighPrec>>(ctx.md);
  return fn(ctx);
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

// ---- named invariants ---------------------------------------------------------

bool is_su(const TheoryId& id, int n, int k = -1) { return id.family == "su" && id.n == n && (k < 0 || id.k == k); }

template <class Real>
ModularInvariant conjugation_invariant(const Context<Real>& ctx) {
  return ModularInvariant(ctx.md->label_set_ptr(), IntMatrix::permutation(ctx.md->conjugation()), "C");
}

template <class Real>
ModularInvariant rebind(const Context<Real>& ctx, const ModularInvariant& z) {
  return ModularInvariant(ctx.md->label_set_ptr(), z.matrix(), z.name());
}

template <class Real>
std::vector<std::string> named_keys(const Context<Real>& ctx) {
  const TheoryId& id = ctx.theory();
  std::vector<std::string> keys{"identity"};
  bool conj_trivial = true;
  for (std::size_t i = 0; i < ctx.md->size(); ++i) conj_trivial = conj_trivial && ctx.md->conjugation()[i] == i;
  if (!conj_trivial) keys.push_back("C");
  if (is_su(id, 2))
    for (const auto& d : su2_diagrams(id.k))
      if (d.series != 'A') keys.push_back(d.name());
  if (is_su(id, 3, 9)) keys.insert(keys.end(), {"D^(12)", "E^(12)"});
  if (is_su(id, 3, 5)) keys.push_back("E^(8)");
  if (is_su(id, 3, 21)) keys.push_back("E^(24)");
  if (is_su(id, 7, 7)) keys.insert(keys.end(), {"Z1", "Zs"});
  if (id.family == "so" && id.n % 16 == 0) keys.insert(keys.end(), {"heterotic", "heterotic^t"});
  if (id.family == "zn")
    for (int d : divisors(zn_tilde(id.n))) keys.push_back("delta=" + std::to_string(d));
  keys.push_back("simple-current:<label>");
  return keys;
}

template <class Real>
ModularInvariant resolve_invariant(const Context<Real>& ctx, const std::string& key);

template <class Real>
ModularInvariant resolve_single(const Context<Real>& ctx, const std::string& key) {
  const TheoryId& id = ctx.theory();
  const std::size_t n = ctx.md->size();
  if (key.size() > 5 && key.substr(key.size() - 5) == ".json") {
    std::ifstream in(key);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + key);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, key + ": " + e.what());
    }
    return io::invariant_from_json(j, ctx.md->label_set_ptr());
  }
  if (key == "identity" || key == "1" || key == "id")
    return ModularInvariant(ctx.md->label_set_ptr(), IntMatrix::identity(n), "identity");
  if (key == "C") return conjugation_invariant(ctx);
  const std::string sc = "simple-current:";
  if (key.rfind(sc, 0) == 0) {
    const auto j = ctx.labels().index_of(key.substr(sc.size()));
    return simple_current_invariant(*ctx.ring, j, key);
  }
  if (id.family == "su" && id.n == 2 && !key.empty() && (key[0] == 'A' || key[0] == 'D' || key[0] == 'E')) {
    auto z = ade_invariant(*ctx.ring, AdeDiagram::parse(key));
    return z;
  }
  if (id.family == "su" && id.n == 3) {
    try {
      su3_invariant_level(key);
    } catch (const Error&) {
      throw Error(ErrorCode::InvalidArgument, "unknown invariant '" + key + "' for " + id.display());
    }
    return su3_invariant(*ctx.ring, key);
  }
  if (is_su(id, 7, 7) && (key == "Z1" || key == "Zs" || key == "Z_1" || key == "Z_s")) {
    const auto s = su7_invariants();
    return rebind(ctx, key.back() == '1' ? s.z1 : s.zs);
  }
  if (id.family == "so" && (key == "heterotic" || key == "heterotic^t")) {
    auto z = heterotic_invariant(*ctx.md, ctx.cfg);
    if (key == "heterotic^t") return ModularInvariant(z.label_set_ptr(), adjoint(z.matrix()), key);
    return z;
  }
  if (id.family == "zn" && key.rfind("delta=", 0) == 0) {
    const int d = std::stoi(key.substr(6));
    for (auto& [delta, z] : zn_invariants(*ctx.md, ctx.cfg))
      if (delta == d) return z;
    throw Error(ErrorCode::InvalidArgument, key + " is not a divisor of " + std::to_string(zn_tilde(id.n)));
  }
  std::string known;
  for (const auto& k : named_keys(ctx)) known += (known.empty() ? "" : ", ") + k;
  throw Error(ErrorCode::InvalidArgument, "unknown invariant '" + key + "' for " + id.display() + " (known: " + known + ")");
}

/// "A*B*..." multiplies; anything else is a single named invariant.
template <class Real>
ModularInvariant resolve_invariant(const Context<Real>& ctx, const std::string& key) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : key) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '*' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  ModularInvariant out = resolve_single(ctx, parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto next = resolve_single(ctx, parts[i]);
    out = ModularInvariant(out.label_set_ptr(), out.matrix() * next.matrix());
  }
  if (parts.size() > 1) out.set_name(key);
  return out;
}

/// Named normalized invariants of the theory, used as the default basis.
template <class Real>
std::vector<ModularInvariant> named_basis(const Context<Real>& ctx) {
  std::vector<ModularInvariant> out;
  const TheoryId& id = ctx.theory();
  if (is_su(id, 2)) {
    for (const auto& d : su2_diagrams(id.k)) out.push_back(ade_invariant(*ctx.ring, d));
    return out;
  }
  if (id.family == "zn") {
    for (auto& [d, z] : zn_invariants(*ctx.md, ctx.cfg)) out.push_back(z);
    return out;
  }
  for (const auto& key : named_keys(ctx)) {
    if (key.find('<') != std::string::npos) continue;
    auto z = resolve_invariant(ctx, key);
    bool dup = false;
    for (const auto& o : out) dup = dup || o.matrix() == z.matrix();
    if (!dup) out.push_back(std::move(z));
  }
  return out;
}

std::string combination(const std::vector<std::int64_t>& c, const std::vector<ModularInvariant>& basis) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) continue;
    if (!s.empty()) s += " + ";
    if (c[i] != 1) s += std::to_string(c[i]) + " ";
    s += "Z_" + basis[i].name();
  }
  return s.empty() ? "0" : s;
}

void print_entries(const ModularInvariant& z) {
  const LabelSet& l = z.labels();
  z.matrix().for_each_nonzero([&](std::size_t a, std::size_t b, std::int64_t v) {
    std::cout << "  " << l.name(a) << ' ' << l.name(b) << " : " << v << '\n';
  });
}

std::string identify(const ModularInvariant& z, const std::vector<ModularInvariant>& basis) {
  for (const auto& b : basis)
    if (b.matrix() == z.matrix()) return b.name();
  return {};
}

void report_or_fail(const ValidationReport& r, bool as_json) {
  if (as_json) print_json(io::to_json(r));
  else std::cout << r;
  if (!r.ok()) throw CheckFailed{};
}

// ---- commands ------------------------------------------------------------------

template <class Real>
int cmd_data(Context<Real>& ctx, bool with_s) {
  const auto& md = *ctx.md;
  if (ctx.g.json) {
    json j = io::to_json(md, with_s);
    for (std::size_t i = 0; i < md.size(); ++i) j["labels"][i]["d"] = to_double(md.d()[i]);
    print_json(j);
    return 0;
  }
  std::cout << md.theory().display() << "  c = " << io::detail::rational(md.c()) << "  labels = " << md.size()
            << "  digits = " << ctx.cfg.digits << '\n';
  std::cout << std::left << std::setw(6) << "#" << std::setw(24) << "label" << std::setw(10) << "h"
            << "d\n";
  for (std::size_t i = 0; i < md.size(); ++i)
    std::cout << std::setw(6) << i << std::setw(24) << md.labels().name(i) << std::setw(10)
              << io::detail::rational(md.labels().h(i)) << format_double(to_double(md.d()[i])) << '\n';
  if (with_s) {
    std::cout << "S (real, imag):\n";
    for (std::size_t a = 0; a < md.size(); ++a) {
      for (std::size_t b = 0; b < md.size(); ++b)
        std::cout << (b ? "  " : "") << format_double(to_double(md.S(a, b).real())) << ','
                  << format_double(to_double(md.S(a, b).imag()));
      std::cout << '\n';
    }
  }
  return 0;
}

template <class Real>
int cmd_fusion(Context<Real>& ctx, const std::string& l, const std::string& m, bool table) {
  const auto& labels = ctx.labels();
  if (table) {
    ctx.ring->precompute_all(ctx.g.threads);
    json rows = json::array();
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = a; b < labels.size(); ++b) {
        if (ctx.g.json) rows.push_back(io::fusion_to_json(*ctx.ring, a, b));
        else std::cout << labels.name(a) << " x " << labels.name(b) << " = " << ctx.ring->verlinde(a, b).to_string() << '\n';
      }
    if (ctx.g.json) print_json(rows);
    return 0;
  }
  if (l.empty() || m.empty()) throw Error(ErrorCode::InvalidArgument, "fusion needs two labels (or --table)");
  const auto a = labels.index_of(l), b = labels.index_of(m);
  if (ctx.g.json) print_json(io::fusion_to_json(*ctx.ring, a, b));
  else std::cout << labels.name(a) << " x " << labels.name(b) << " = " << ctx.ring->verlinde(a, b).to_string() << '\n';
  return 0;
}

template <class Real>
int cmd_enumerate(Context<Real>& ctx) {
  const auto res = enumerate_physical(*ctx.md, ctx.cfg);
  std::vector<ModularInvariant> basis;
  try {
    if (ctx.theory().family != "zn") basis = named_basis(ctx);
  } catch (const Error&) {
  }
  std::vector<ModularInvariant> named;
  for (std::size_t i = 0; i < res.invariants.size(); ++i) {
    ModularInvariant z = res.invariants[i];
    std::string name = identify(z, basis);
    if (name.empty()) name = z.name().empty() ? "Z#" + std::to_string(i) : z.name();
    z.set_name(name);
    named.push_back(std::move(z));
  }
  if (ctx.theory().family == "zn")
    for (auto& [d, z] : zn_invariants(*ctx.md, ctx.cfg))
      for (auto& x : named)
        if (x.matrix() == z.matrix()) x.set_name(z.name());
  if (ctx.g.json) {
    json j = io::detail::header("enumeration");
    j["md_ref"] = ctx.theory().display();
    j["support_size"] = res.support_size;
    j["commutant_dim"] = res.commutant_dim;
    j["nodes"] = res.nodes;
    j["bound_touched"] = res.bound_touched;
    json list = json::array();
    for (const auto& z : named) list.push_back(io::to_json(z));
    j["invariants"] = list;
    print_json(j);
    return 0;
  }
  std::cout << ctx.theory().display() << ": " << named.size() << " physical invariants (support " << res.support_size
            << ", commutant rank " << res.commutant_dim << ", " << res.nodes << " search nodes"
            << (res.bound_touched ? ", bound touched" : "") << ")\n";
  for (const auto& z : named) {
    std::cout << z.name() << ": tr = " << z.matrix().trace() << ", nonzeros = " << z.matrix().nonzeros() << '\n';
    print_entries(z);
  }
  return 0;
}

template <class Real>
int cmd_verify(Context<Real>& ctx, const std::string& key) {
  const auto z = resolve_invariant(ctx, key);
  report_or_fail(verify_invariant(*ctx.md, z.matrix(), ctx.cfg), ctx.g.json);
  return 0;
}

template <class Real>
int cmd_list(Context<Real>& ctx) {
  const auto keys = named_keys(ctx);
  if (ctx.g.json) {
    json j = io::detail::header("names");
    j["md_ref"] = ctx.theory().display();
    j["invariants"] = keys;
    print_json(j);
    return 0;
  }
  for (const auto& k : keys) std::cout << k << '\n';
  return 0;
}

int cmd_list_global(bool as_json) {
  const auto embeddings = embedding_names();
  std::vector<std::string> graphs;
  for (const auto& m : marked_su2_graphs()) graphs.push_back(m.diagram.name());
  const auto reports = report_names();
  if (as_json) {
    json j = io::detail::header("names");
    j["embeddings"] = embeddings;
    j["graphs"] = graphs;
    j["reports"] = reports;
    print_json(j);
    return 0;
  }
  auto line = [](const char* what, const std::vector<std::string>& xs) {
    std::cout << what << ':';
    for (const auto& x : xs) std::cout << ' ' << x;
    std::cout << '\n';
  };
  line("embeddings", embeddings);
  line("marked graphs", graphs);
  line("reports", reports);
  std::cout << "invariants: give a model to list its named invariants\n";
  return 0;
}

template <class Real>
int cmd_product(Context<Real>& ctx, const std::string& a, const std::string& b) {
  const auto za = resolve_invariant(ctx, a), zb = resolve_invariant(ctx, b);
  ModularInvariant p(ctx.md->label_set_ptr(), za.matrix() * zb.matrix(), a + "*" + b);
  const auto basis = named_basis(ctx);
  std::vector<IntMatrix> mats;
  for (const auto& z : basis) mats.push_back(z.matrix());
  const auto sols = decompose(p.matrix(), mats);
  if (ctx.g.json) {
    json j = io::to_json(p);
    json d = json::array();
    for (const auto& c : sols) {
      json terms = json::array();
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) terms.push_back({{"name", basis[i].name()}, {"coeff", c[i]}});
      d.push_back(terms);
    }
    j["decompositions"] = d;
    print_json(j);
    return 0;
  }
  const std::string lhs = a == b ? "Z_" + za.name() + "^2" : "Z_" + za.name() + " Z_" + zb.name();
  std::cout << lhs << ": tr = " << p.matrix().trace() << '\n';
  for (const auto& c : sols) std::cout << lhs << " = " << combination(c, basis) << '\n';
  if (sols.empty()) {
    std::cout << "not a non-negative combination of the named invariants; entries:\n";
    print_entries(p);
  }
  return 0;
}

template <class Real>
int cmd_decompose(Context<Real>& ctx, const std::string& key, const std::vector<std::string>& basis_keys) {
  const auto m = resolve_invariant(ctx, key);
  std::vector<ModularInvariant> basis;
  if (basis_keys.empty()) basis = named_basis(ctx);
  else
    for (const auto& k : basis_keys) basis.push_back(resolve_invariant(ctx, k));
  for (auto& b : basis)
    if (b.name().empty()) b.set_name("?");
  std::vector<IntMatrix> mats;
  for (const auto& z : basis) mats.push_back(z.matrix());
  const auto sols = decompose(m.matrix(), mats);
  for (const auto& c : sols)
    if (recompose(c, mats) != m.matrix()) throw Error(ErrorCode::NotDecomposable, "recomposition mismatch");
  if (ctx.g.json) {
    json j = io::detail::header("decomposition");
    j["md_ref"] = ctx.theory().display();
    j["target"] = key;
    json names = json::array();
    for (const auto& b : basis) names.push_back(b.name());
    j["basis"] = names;
    j["solutions"] = sols;
    print_json(j);
  } else {
    for (const auto& c : sols) std::cout << key << " = " << combination(c, basis) << '\n';
    if (sols.empty()) std::cout << key << ": no non-negative integer decomposition\n";
  }
  return sols.empty() ? 1 : 0;
}

template <class Real>
int cmd_counts(Context<Real>& ctx, const std::string& key) {
  const auto z = resolve_invariant(ctx, key);
  const auto c = counts(z);
  const auto orbits = orbit_counts(z.matrix());
  if (ctx.g.json) {
    json j = io::detail::header("counts");
    j["md_ref"] = ctx.theory().display();
    j["invariant"] = z.name();
    for (const auto& [name, v] : c.interpreted()) j["counts"][name] = v;
    j["orbits"] = {orbits.first, orbits.second};
    print_json(j);
    return 0;
  }
  for (const auto& [name, v] : c.interpreted()) std::cout << std::left << std::setw(34) << name << v << '\n';
  std::cout << std::setw(34) << "M-X-M orbits (+, -)" << orbits.first << ", " << orbits.second << '\n';
  return 0;
}

// ---- branching ------------------------------------------------------------------

std::string cycles(const Permutation& p, const BranchingMatrix& b) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    std::string c = "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      c += (c.size() > 1 ? " " : "") + b.ext_name(j);
    }
    out += c + ")";
  }
  return out.empty() ? "1" : out;
}

int branching_output(const std::string& op, const BranchingMatrix& b, bool as_json) {
  if (op == "show") {
    if (as_json) {
      print_json(io::to_json(b));
      return 0;
    }
    const auto& labels = b.base_labels();
    std::cout << (b.name().empty() ? labels.theory().display() : b.name()) << ": " << b.rows() << " rows, "
              << (b.is_local() ? "local" : "not local") << '\n';
    for (std::size_t t = 0; t < b.rows(); ++t) {
      SectorVector v(b.base_ptr());
      for (std::size_t l = 0; l < b.cols(); ++l) v[l] = b.matrix()(t, l);
      std::cout << "  " << b.ext_name(t) << " -> " << v.to_string() << '\n';
    }
    const auto z = b.invariant();
    std::cout << "B^t B: tr = " << z.trace() << ", Z_00 = " << z(0, 0) << '\n';
    return 0;
  }
  if (op == "sandwich") {
    const auto s = sandwich(b);
    if (as_json) {
      json j = io::detail::header("sandwich");
      std::vector<std::string> rows;
      for (std::size_t t = 0; t < b.rows(); ++t) rows.push_back(b.ext_name(t));
      j["rows"] = rows;
      json m = json::array();
      for (std::size_t i = 0; i < s.rows(); ++i) {
        std::vector<std::int64_t> r;
        for (std::size_t k = 0; k < s.cols(); ++k) r.push_back(s(i, k));
        m.push_back(r);
      }
      j["matrix"] = m;
      print_json(j);
      return 0;
    }
    std::cout << "B B^t over rows:";
    for (std::size_t t = 0; t < b.rows(); ++t) std::cout << ' ' << b.ext_name(t);
    std::cout << '\n' << s << '\n';
    return 0;
  }
  const auto parts = sandwich_decomposition(b);
  if (as_json) {
    json j = io::detail::header("sandwich_decomposition");
    json list = json::array();
    for (const auto& [c, p] : parts) list.push_back({{"coeff", c}, {"permutation", p}, {"cycles", cycles(p, b)}});
    j["parts"] = list;
    print_json(j);
    return 0;
  }
  std::string line;
  for (const auto& [c, p] : parts) line += (line.empty() ? "" : " + ") + (c == 1 ? "" : std::to_string(c) + " ") + cycles(p, b);
  std::cout << "B B^t = " << line << '\n';
  return 0;
}

// ---- nimreps --------------------------------------------------------------------

std::size_t vertex_index(const Graph& g, const std::string& v) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.vertex(i) == v) return i;
  try {
    std::size_t pos = 0;
    const auto i = std::stoul(v, &pos);
    if (pos == v.size() && i < g.size()) return i;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidArgument, "no vertex '" + v + "' in " + g.name());
}

template <class Real>
int cmd_nimrep(Context<Real>& ctx, const std::string& op, const std::string& graph_name, const std::string& vertex,
               bool all_vertices) {
  const Graph graph = dynkin(graph_name);
  const auto nim = su2_nimrep(graph, *ctx.ring);
  const AdeDiagram diagram = AdeDiagram::parse(graph_name);
  const auto z = ade_invariant(*ctx.ring, diagram);
  if (op == "dot") {
    std::cout << dot_export(graph);
    return 0;
  }
  if (op == "build") {
    const auto pf = perron_frobenius<Real>(graph, ctx.cfg);
    if (ctx.g.json) {
      print_json(io::to_json(graph, json{{"level", ctx.theory().k}, {"perron_frobenius", to_double(pf.value)}}));
      return 0;
    }
    std::cout << graph.name() << " at " << ctx.theory().display() << ": " << graph.size() << " vertices, "
              << nim.matrices().size() << " matrices G_l, PF value " << format_double(to_double(pf.value)) << '\n';
    for (std::size_t a = 0; a < graph.size(); ++a) {
      std::cout << "  " << graph.vertex(a) << ":";
      for (std::size_t b = 0; b < graph.size(); ++b)
        if (graph.adjacency()(a, b)) std::cout << ' ' << graph.vertex(b);
      std::cout << '\n';
    }
    return 0;
  }
  if (op == "check") {
    ValidationReport all;
    auto merge = [&](const std::string& prefix, const ValidationReport& r) {
      for (const auto& c : r.checks()) {
        if (c.informational) all.add_note(prefix + c.name, c.passed, c.detail);
        else if (c.tolerance > 0) all.add_residual(prefix + c.name, c.residual, c.tolerance, c.detail);
        else all.add_condition(prefix + c.name, c.passed, c.detail);
      }
    };
    merge("axioms: ", verify_nimrep(nim, *ctx.ring));
    merge("spectrum: ", spectrum_report(nim, z.matrix()));
    merge("theta sum: ", theta_sum_report(&nim, z.matrix(), *ctx.ring).report);
    merge("PF: ", pf_dimension_check(nim));
    report_or_fail(all, ctx.g.json);
    return 0;
  }
  // theta
  std::vector<std::size_t> vertices;
  if (all_vertices) {
    for (std::size_t a = 0; a < graph.size(); ++a) vertices.push_back(a);
  } else if (!vertex.empty()) {
    vertices.push_back(vertex_index(graph, vertex));
  } else {
    const auto marked = marked_su2_graph(diagram.name());
    vertices = {marked.iota, marked.theta};
  }
  const auto candidate = candidate_theta(z, ctx.md->conjugation(), ThetaSelection::EvenSpin);
  json out = json::array();
  for (auto a : vertices) {
    const auto t = theta_at_vertex(nim, a);
    if (ctx.g.json) {
      json j = io::to_json(t);
      j["vertex"] = graph.vertex(a);
      j["even_spin_candidate"] = t == candidate;
      out.push_back(j);
    } else {
      std::cout << "theta(" << graph.vertex(a) << ") = " << t.to_string() << (t == candidate ? "   [= even-spin candidate]" : "")
                << '\n';
    }
  }
  if (ctx.g.json) print_json(out);
  return 0;
}

// ---- reports --------------------------------------------------------------------

int cmd_report(const Globals& g, const std::string& name, bool with_st) {
  Report r;
  const auto cfg = precision(g);
  if (!g.fast) apply_precision(cfg);
  auto pick = [&](auto high, auto fast) { return g.fast ? fast(cfg) : high(cfg); };
  if (name == "su2-level16") r = pick(report_su2_level16<HighPrec>, report_su2_level16<double>);
  else if (name == "e8") r = pick(report_e8<HighPrec>, report_e8<double>);
  else if (name == "e12") r = pick(report_e12<HighPrec>, report_e12<double>);
  else if (name == "su7") r = report_su7(with_st);
  else if (name == "zn") r = pick(report_zn<HighPrec>, report_zn<double>);
  else throw Error(ErrorCode::InvalidArgument, "unknown report '" + name + "'");
  if (g.json) {
    json j = io::detail::header("check_report");
    j["title"] = r.title;
    json lines = json::array();
    for (const auto& l : r.lines) lines.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
    j["lines"] = lines;
    j["ok"] = r.ok();
    print_json(j);
  } else {
    std::cout << r;
  }
  return r.ok() ? 0 : 1;
}

void add_model(CLI::App* sub, ModelArgs& m) {
  sub->add_option("model", m.spec, "theory, e.g. su2_16, SU(3)_9, so48, zn5_2, e8");
  sub->add_option("--family", m.family, "family and rank, e.g. --family su 2")->expected(1, 2);
  sub->add_option("--level", m.level, "level for su");
  sub->add_option("--a", m.a, "a for Z_n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular invariants, fusion rules, branching and nimreps"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.digits = default_digits();
  app.add_option("--digits", g.digits, "working precision in decimal digits (env MODINV_DIGITS)")
      ->check(CLI::Range(10, 1000));
  app.add_flag("--fast", g.fast, "machine precision");
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 256u));

  ModelArgs model;
  std::string op, arg1, arg2, graph, vertex, current, select;
  std::vector<std::string> basis;
  bool with_s = false, table = false, all_vertices = false, with_st = false;
  std::size_t order = 0;

  auto* data = app.add_subcommand("data", "labels, h, d and c");
  add_model(data, model);
  data->add_flag("--with-s", with_s, "include S");

  auto* fusion = app.add_subcommand("fusion", "fusion product of two labels");
  fusion->add_option("model", model.spec, "theory");
  fusion->add_option("lambda", arg1, "first label");
  fusion->add_option("mu", arg2, "second label");
  fusion->add_option("--family", model.family)->expected(1, 2);
  fusion->add_option("--level", model.level);
  fusion->add_option("--a", model.a);
  fusion->add_flag("--table", table, "all products");

  auto* invariants = app.add_subcommand("invariants", "enumerate, verify or list invariants");
  invariants->add_option("op", op, "enumerate | verify | list")->required()->check(CLI::IsMember({"enumerate", "verify", "list"}));
  invariants->add_option("model", model.spec, "theory");
  invariants->add_option("invariant", arg1, "invariant to verify");
  invariants->add_option("--family", model.family)->expected(1, 2);
  invariants->add_option("--level", model.level);
  invariants->add_option("--a", model.a);

  auto* product = app.add_subcommand("product", "product of two invariants");
  product->add_option("model", model.spec, "theory")->required();
  product->add_option("z1", arg1, "first invariant")->required();
  product->add_option("z2", arg2, "second invariant")->required();

  auto* decomp = app.add_subcommand("decompose", "non-negative integer decomposition over a basis");
  decomp->add_option("model", model.spec, "theory")->required();
  decomp->add_option("matrix", arg1, "invariant or product, e.g. E7*E7")->required();
  decomp->add_option("--basis", basis, "basis invariants (default: the named ones)");

  auto* cnt = app.add_subcommand("counts", "sector counts of an invariant");
  cnt->add_option("model", model.spec, "theory")->required();
  cnt->add_option("invariant", arg1, "invariant")->required();

  auto* branching = app.add_subcommand("branching", "branching matrices");
  branching->add_option("op", op, "show | sandwich | decompose")->required()->check(CLI::IsMember({"show", "sandwich", "decompose"}));
  branching->add_option("target", arg1, "embedding (see 'list') or a model with --current")->required();
  branching->add_option("--current", current, "simple current label for an extension of the model");
  branching->add_option("--order", order, "order of the current (default: computed)");

  auto* nimrep = app.add_subcommand("nimrep", "SU(2) nimreps from A-D-E graphs");
  nimrep->add_option("op", op, "build | check | theta | dot")->required()->check(CLI::IsMember({"build", "check", "theta", "dot"}));
  nimrep->add_option("graph", graph, "A-D-E diagram, e.g. E7")->required();
  nimrep->add_option("--vertex", vertex, "vertex name or index for theta");
  nimrep->add_flag("--all", all_vertices, "theta at every vertex");

  auto* report = app.add_subcommand("report", "worked examples with PASS/FAIL lines");
  report->add_option("name", arg1, "su2-level16 | e8 | e12 | su7 | zn")->required()->check(CLI::IsMember(report_names()));
  report->add_flag("--with-st", with_st, "su7: also check S/T commutation in double precision (slow)");

  auto* list = app.add_subcommand("list", "named datasets");
  list->add_option("model", model.spec, "theory whose named invariants to list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // with --family the first positional is not a model
  if (!model.family.empty() && !model.spec.empty()) {
    if (fusion->parsed()) {
      arg2 = arg1;
      arg1 = model.spec;
      model.spec.clear();
    } else if (invariants->parsed()) {
      arg1 = model.spec;
      model.spec.clear();
    }
  }

  try {
    if (data->parsed())
      return with_model(g, resolve_model(model), [&](auto& ctx) { return cmd_data(ctx, with_s); });
    if (fusion->parsed())
      return with_model(g, resolve_model(model), [&](auto& ctx) { return cmd_fusion(ctx, arg1, arg2, table); });
    if (invariants->parsed()) {
      if (op == "list" && model.spec.empty() && model.family.empty()) return cmd_list_global(g.json);
      return with_model(g, resolve_model(model), [&](auto& ctx) {
        if (op == "enumerate") return cmd_enumerate(ctx);
        if (op == "verify") {
          if (arg1.empty()) throw Error(ErrorCode::InvalidArgument, "verify needs an invariant");
          return cmd_verify(ctx, arg1);
        }
        return cmd_list(ctx);
      });
    }
    if (list->parsed()) {
      if (model.spec.empty()) return cmd_list_global(g.json);
      return with_model(g, resolve_model(model), [&](auto& ctx) { return cmd_list(ctx); });
    }
    if (product->parsed())
      return with_model(g, resolve_model(model), [&](auto& ctx) { return cmd_product(ctx, arg1, arg2); });
    if (decomp->parsed())
      return with_model(g, resolve_model(model), [&](auto& ctx) { return cmd_decompose(ctx, arg1, basis); });
    if (cnt->parsed())
      return with_model(g, resolve_model(model), [&](auto& ctx) { return cmd_counts(ctx, arg1); });
    if (branching->parsed()) {
      if (current.empty()) return branching_output(op, embedding_branching(arg1), g.json);
      return with_model(g, parse_theory(arg1), [&](auto& ctx) {
        const auto j = ctx.labels().index_of(current);
        return branching_output(op, simple_current_extension(*ctx.ring, j, order), g.json);
      });
    }
    if (nimrep->parsed()) {
      const AdeDiagram d = AdeDiagram::parse(graph);
      const TheoryId id{"su", 2, d.coxeter_number() - 2, 0};
      return with_model(g, id, [&](auto& ctx) { return cmd_nimrep(ctx, op, graph, vertex, all_vertices); });
    }
    if (report->parsed()) return cmd_report(g, arg1, with_st);
  } catch (const CheckFailed&) {
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const auto c = e.code();
    return c == ErrorCode::InvalidArgument || c == ErrorCode::ParseError || c == ErrorCode::IncompatibleLevel ? 2 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
