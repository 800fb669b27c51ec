#include "geobound/census/census.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "geobound/complex/canonical_code.hpp"
#include "geobound/complex/cover.hpp"
#include "geobound/complex/cusp.hpp"
#include "geobound/complex/topology.hpp"
#include "geobound/errors.hpp"
#include "geobound/kernel/lobachevsky.hpp"
#include "json.hpp"

namespace geobound {

namespace {

constexpr double kPi = 3.14159265358979323846;

FamilyContext make_context(Family f) {
  FamilyContext c{f, build_block(f), {}, 0, 0};
  c.block4 = build_block4(c.block);
  c.cell_volume3 = f == Family::arithmetic ? ideal_octahedron_volume() : 24 * kQ3Volume;
  c.cell_chi4 = orbifold_euler_characteristic(c.block4.complex.complex.type());
  return c;
}

mpz_class pow2(int k) {
  mpz_class r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), k);
  return r;
}

std::vector<GraphEdge> factor_edges(const FactorGraph& f) {
  std::vector<GraphEdge> edges;
  for (size_t k = 0; k < f.edges.size(); ++k) edges.push_back({f.edges[k].first, f.edges[k].second, f.color[k]});
  return edges;
}

// Colour j glues C_j of one copy to C'_j of the other, cell to cell through the involution.
const std::map<int, std::vector<std::pair<int, int>>>& edge_scheme() {
  static const auto s = [] {
    std::map<int, std::vector<std::pair<int, int>>> m;
    for (int j = 0; j < 4; ++j) m[j + 1] = {{j, j + 4}, {j + 4, j}};
    return m;
  }();
  return s;
}

}  // namespace

const FamilyContext& family_context(Family f) {
  if (f == Family::arithmetic) {
    static const FamilyContext a = make_context(Family::arithmetic);
    return a;
  }
  static const FamilyContext n = make_context(Family::nonarithmetic);
  return n;
}

mpq_class orbifold_euler_characteristic(const Polytope& p) {
  const int d = p.dim();
  mpq_class chi = d % 2 ? -1 : 1;
  for (int k = 0; k < d; ++k) {
    mpz_class faces = k == 0 ? p.finite_vertex_count() : p.count(k);
    mpq_class term(faces, pow2(d - k));
    term.canonicalize();
    chi += k % 2 ? mpq_class(-term) : term;
  }
  return chi;
}

IndexedComplex build_manifold(const FactorGraph& f, const Block& b) {
  if (!is_valid_factor(f) || f.colors != 4) throw GluingError("build_manifold: not a 4-factor");
  IndexedComplex m = glue_by_graph_pairs(b.complex, f.graph.size(), factor_edges(f), edge_scheme());
  if (!m.complex.closed()) throw GluingError("build_manifold: boundary left over");
  return m;
}

Graph recover_graph(const PairingComplex& m) {
  require(m.type_name() == "octahedron", "recover_graph: complex of octahedra expected");
  const int n = m.cells();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  std::vector<bool> touched(n, false);
  for (const CuspSection& s : cusp_links(m)) {
    if (s.kind != CuspSection::Kind::torus || s.tiles != 8 || s.systole != 2) continue;
    for (auto& [cell, v] : s.tile_list) {
      touched[cell] = true;
      parent[find(cell)] = find(s.tile_list.front().first);
    }
  }
  std::map<int, int> vertex_of_root;
  std::map<int, int> size;
  for (int c = 0; c < n; ++c) {
    if (!touched[c]) throw RecoveryError("octahedron " + std::to_string(c) + " lies in no T_{2x4} cusp");
    vertex_of_root.emplace(find(c), int(vertex_of_root.size()));
    ++size[find(c)];
  }
  const int blocks = int(vertex_of_root.size());
  if (n % 16 != 0 || blocks != n / 16)
    throw RecoveryError(std::to_string(blocks) + " components for " + std::to_string(n) + " octahedra");
  for (auto& [root, s] : size)
    if (s != 16) throw RecoveryError("component of " + std::to_string(s) + " octahedra");
  if (blocks > 64) throw RecoveryError("too many blocks for a graph");
  Graph g(blocks);
  for (int c = 0; c < n; ++c)
    for (int f = 0; f < m.facets_per_cell(); ++f) {
      int p = m.partner(c, f);
      if (p < 0) continue;
      int u = vertex_of_root[find(c)], v = vertex_of_root[find(p)];
      if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
  return g;
}

double volume3(const PairingComplex& m) {
  if (m.type_name() == "octahedron") return m.cells() * ideal_octahedron_volume();
  if (m.type_name() == "p3") return m.cells() * 24 * kQ3Volume;
  throw Error("volume3: unknown cell type '" + m.type_name() + "'");
}

double volume4(const PairingComplex& w) {
  require(w.dim() == 4, "volume4: 4-dimensional complex expected");
  long long chi = euler_characteristic(w);
  if (chi <= 0) throw Error("volume4: Euler characteristic " + std::to_string(chi) + " is not positive");
  return 4 * kPi * kPi / 3 * double(chi);
}

mpf_class volume4(const mpz_class& chi) {
  if (chi <= 0) throw Error("volume4: Euler characteristic is not positive");
  mpf_class v(chi, 256);
  mpf_class c(4 * kPi * kPi / 3, 256);
  return v * c;
}

Promotion promote(const FactorGraph& f, const IndexedComplex& m, const std::string& m_code,
                  const FamilyContext& ctx) {
  const Block4& b4 = ctx.block4;
  const int n = f.graph.size();
  const int cells = b4.complex.complex.cells();
  Promotion p;
  p.N = b4.N();
  p.colors = b4.top_colors;

  IndexedComplex w1 = glue_by_graph_pairs(b4.complex, n, factor_edges(f), edge_scheme());
  Coloring col = top_coloring(b4, w1.complex);
  try {
    check_coloring(w1.complex, col);
    p.proper = true;
  } catch (const ColoringError&) {
    p.proper = false;
  }

  ColorCover cover(w1.complex, col);
  p.w2_cells = cover.cells();
  p.chi_w2 = cover.euler_characteristic();
  p.corners = cover.has_corners();
  auto classes = cover.boundary_classes();
  p.boundary_classes = int(classes.size());
  if (classes.size() == 1) p.boundary_lifts = classes[0].lifts;

  std::vector<FacetRef> bottom;
  for (int v = 0; v < n; ++v)
    for (const FacetRef& s : b4.bottom) bottom.push_back({v * cells + s.cell, s.facet});
  p.boundary_code_match = canonical_code(boundary_complex(w1.complex, bottom)).hex == m_code;

  const Block& b = ctx.block;
  std::vector<int> iota(m.complex.cells());
  for (int c = 0; c < m.complex.cells(); ++c) iota[c] = c / cells * cells + b.iota[c % cells];

  p.iota = involution_checks(m.complex, iota);
  p.orientable = cover.orientable() && p.iota.passed();

  // Every lift of the bottom but one is closed up by the free involution, halving its count.
  const mpz_class chi_m = static_cast<long>(euler_characteristic(m.complex));
  p.chi_w = p.chi_w2 - (p.boundary_lifts - 1) * chi_m / 2;
  p.chi_d = 2 * p.chi_w - chi_m;
  return p;
}

bool cusp_lemma_holds(Family f, const std::map<std::string, int>& census) {
  for (auto& [name, count] : census) {
    if (f == Family::nonarithmetic) {
      if (name != "torus" && name.rfind("T_{", 0) != 0) return false;
      continue;
    }
    if (name == "T_{2x4}") continue;
    int h = 0;
    if (std::sscanf(name.c_str(), "T_{2x%d}", &h) != 1 || h < 8 || h % 2) return false;
  }
  return true;
}

std::map<std::string, int> predicted_cusp_census(const FamilyContext& ctx, const FactorGraph& f) {
  int tori = 0, annuli = 0;
  for (auto& [name, count] : block_cusp_census(ctx.block))
    (name.rfind("A", 0) == 0 || name == "annulus" ? annuli : tori) += count;
  std::map<std::string, int> out;
  out["T_{2x4}"] = tori * f.graph.size();
  for (auto& c : alternating_cycles(f)) out["T_{2x" + std::to_string(2 * c.length) + "}"] += annuli / 6;
  return out;
}

bool CensusRecord::passed() const {
  if (!diagnosis.empty() || flags.empty()) return false;
  for (auto& [name, ok] : flags)
    if (!ok) return false;
  return true;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_real(const mpf_class& x) {
  char buf[128];
  gmp_snprintf(buf, sizeof buf, "%.12Fg", x.get_mpf_t());
  return buf;
}

namespace {

nlohmann::ordered_json real12(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

mpf_class ratio_K(const CensusRecord& r) {
  if (r.promotion.chi_w <= 0 || r.vol3 <= 0) return 0;
  return volume4(r.promotion.chi_w) / mpf_class(r.vol3, 256);
}

}  // namespace

std::string CensusRecord::json() const {
  nlohmann::ordered_json j;
  j["family"] = to_string(family);
  j["n"] = n;
  j["graph_code"] = graph_code;
  j["adjacency"] = adjacency;
  j["factor"] = factor;
  j["complex_code"] = complex_code;
  j["automorphisms"] = automorphisms;
  j["cusps"] = cusps;
  j["vol3"] = real12(vol3);
  j["chi3"] = chi3.get_str();
  j["N"] = promotion.N;
  j["top_colors"] = promotion.colors;
  j["cells_W2"] = promotion.w2_cells.get_str();
  j["boundary_components_W2"] = promotion.boundary_lifts.get_str();
  j["chi4_W2"] = promotion.chi_w2.get_str();
  j["chi4"] = promotion.chi_w.get_str();
  j["chi4_D"] = promotion.chi_d.get_str();
  j["vol4"] = promotion.chi_w > 0 ? format_real(volume4(promotion.chi_w)) : "";
  j["vol4_D"] = promotion.chi_d > 0 ? format_real(volume4(promotion.chi_d)) : "";
  j["K"] = format_real(ratio_K(*this));
  j["certificate"] = family == Family::arithmetic ? "graph-recovery" : "complex-code";
  j["flags"] = flags;
  j["passed"] = passed();
  if (!diagnosis.empty()) j["diagnosis"] = diagnosis;
  return j.dump();
}

CensusRecord census_record(const Graph& g, const FactorGraph& f, const FamilyContext& ctx) {
  CensusRecord r;
  r.family = ctx.family;
  r.n = g.size();
  r.graph_code = canonical_form(g).hex();
  for (int v = 0; v < g.size(); ++v) {
    r.adjacency.emplace_back();
    for (int u = 0; u < g.size(); ++u)
      if (g.has_edge(v, u)) r.adjacency.back().push_back(u);
  }
  for (size_t k = 0; k < f.edges.size(); ++k) r.factor.push_back({f.edges[k].first, f.edges[k].second, f.color[k]});
  try {
    IndexedComplex m = build_manifold(f, ctx.block);
    const PairingComplex& x = m.complex;
    r.flags["closed"] = x.closed();
    r.flags["connected"] = connected_components(x).size() == 1;
    r.flags["orientable"] = orientability(x).orientable;

    CanonicalCode code = canonical_code(x);
    r.complex_code = code.hex;
    r.automorphisms = code.automorphisms;

    r.cusps = cusp_census(cusp_links(x));
    r.flags["cusp_lemma"] = cusp_lemma_holds(ctx.family, r.cusps);
    r.flags["cusps_from_cycles"] = r.cusps == predicted_cusp_census(ctx, f);

    r.chi3 = static_cast<long>(euler_characteristic(x));
    r.flags["chi3_zero"] = r.chi3 == 0;
    r.vol3 = volume3(x);
    r.flags["vol3_cells"] = x.cells() == r.n * ctx.block.complex.complex.cells();

    if (ctx.family == Family::arithmetic) {
      try {
        r.flags["recovery_roundtrip"] = canonical_form(recover_graph(x)) == canonical_form(g);
      } catch (const RecoveryError& e) {
        r.flags["recovery_roundtrip"] = false;
        r.diagnosis = e.what();
      }
    }

    Promotion& p = r.promotion;
    p = promote(f, m, r.complex_code, ctx);
    const mpz_class lifts = pow2(p.colors);
    r.flags["top_coloring_proper"] = p.proper;
    r.flags["cells_W2"] = p.w2_cells == lifts * r.n * ctx.block4.complex.complex.cells();
    r.flags["no_corners"] = !p.corners;
    r.flags["boundary_lifts"] = p.boundary_classes == 1 && p.boundary_lifts == lifts;
    r.flags["boundary_match"] = p.boundary_code_match;
    r.flags["involution"] = p.iota.passed();
    r.flags["w_orientable"] = p.orientable;
    r.flags["chi4_positive"] = p.chi_w > 0;
    mpq_class expected = mpq_class(lifts * r.n * ctx.block4.complex.complex.cells()) * ctx.cell_chi4;
    r.flags["chi4_gauss_bonnet"] = mpq_class(p.chi_w) == expected;
    r.flags["vol4_double"] = p.chi_d == 2 * p.chi_w;
  } catch (const Error& e) {
    r.flags["built"] = false;
    r.diagnosis = e.what();
  }
  return r;
}

namespace {

struct Task {
  int n;
  Graph graph;
  FactorGraph factor;
  std::string code;
};

std::string estimate_message(int max_n) {
  // Growth of the class counts for n = 10, 11, 12 continued geometrically.
  double classes = 1547;
  for (int n = 13; n <= max_n; ++n) classes *= 8.5;
  std::ostringstream os;
  os << "max-n " << max_n << " is beyond the supported " << kCensusMaxN << ": about " << std::llround(classes)
     << " graph classes at n = " << max_n << ", each costing a full switch closure";
  return os.str();
}

}  // namespace

CensusSummary run_census(const CensusOptions& opt, std::ostream* log) {
  if (opt.max_n > kCensusMaxN) throw Error(estimate_message(opt.max_n));
  if (opt.max_n < 1) throw Error("max-n must be positive");
  const FamilyContext& ctx = family_context(opt.family);
  const std::string fam = to_string(opt.family);

  std::vector<Task> tasks;
  std::map<int, long long> per_n;
  for (int n = 5; n <= opt.max_n; ++n) {
    per_n[n] = 0;
    if (n % 2) continue;
    for (const Graph& g : enumerate_regular(n)) {
      auto f = one_factorization(g);
      if (f.empty()) continue;
      tasks.push_back({n, g, f[0], canonical_form(g).hex()});
      ++per_n[n];
    }
  }

  std::filesystem::create_directories(opt.out_dir);
  const std::string jsonl = opt.out_dir + "/census-" + fam + ".jsonl";
  const std::string csv = opt.out_dir + "/summary-" + fam + ".csv";

  std::map<std::string, std::string> cached;
  if (opt.resume) {
    std::ifstream in(jsonl);
    std::string line;
    while (std::getline(in, line)) {
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object() || !j.contains("graph_code") || j.value("family", "") != fam) break;
      cached[j["graph_code"].get<std::string>()] = line;
    }
  }

  CensusSummary s;
  std::vector<std::string> lines(tasks.size());
  std::vector<bool> have(tasks.size(), false);
  for (size_t i = 0; i < tasks.size(); ++i)
    if (auto it = cached.find(tasks[i].code); it != cached.end()) {
      lines[i] = it->second;
      have[i] = true;
      ++s.resumed;
    }

  std::ofstream out(jsonl, std::ios::trunc);
  if (!out) throw Error("cannot write " + jsonl);
  size_t written = 0;
  auto flush_ready = [&] {
    while (written < tasks.size() && have[written]) {
      out << lines[written] << '\n';
      ++written;
    }
    out.flush();
  };
  flush_ready();

  std::vector<size_t> todo;
  for (size_t i = 0; i < tasks.size(); ++i)
    if (!have[i]) todo.push_back(i);
  const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (size_t k = 0; k < todo.size(); ++k) {
    const Task& t = tasks[todo[k]];
    std::string line = census_record(t.graph, t.factor, ctx).json();
#pragma omp critical(census_sink)
    {
      lines[todo[k]] = line;
      have[todo[k]] = true;
      flush_ready();
      if (log) *log << fam << " n=" << t.n << " " << t.code.substr(0, 16) << " done\n";
    }
  }
  out.close();

  std::set<std::string> all_codes;
  std::map<int, std::set<std::string>> codes_at;
  std::map<int, nlohmann::json> first_at;
  mpz_class ref_chi, ref_n;
  for (size_t i = 0; i < tasks.size(); ++i) {
    auto j = nlohmann::json::parse(lines[i]);
    ++s.records;
    const int n = j["n"].get<int>();
    const std::string code = j["complex_code"].get<std::string>();
    if (!j["passed"].get<bool>()) {
      ++s.failed;
      std::string what;
      for (auto& [name, ok] : j["flags"].items())
        if (!ok.get<bool>()) what += " " + name;
      if (j.contains("diagnosis")) what += " (" + j["diagnosis"].get<std::string>() + ")";
      s.failures.push_back("n=" + std::to_string(n) + " graph " + tasks[i].code.substr(0, 16) + ":" + what);
    }
    if (!all_codes.insert(code).second) s.codes_distinct = false;
    codes_at[n].insert(code);
    first_at.emplace(n, j);
    mpz_class chi(j["chi4"].get<std::string>().empty() ? "0" : j["chi4"].get<std::string>());
    if (ref_n == 0) {
      ref_chi = chi;
      ref_n = n;
    } else if (chi * ref_n != ref_chi * n) {
      s.ratio_constant = false;
    }
  }
  for (auto& [n, count] : per_n) {
    SummaryRow row;
    row.n = n;
    row.graphs = count;
    row.manifolds = codes_at.count(n) ? long(codes_at[n].size()) : 0;
    if (auto it = first_at.find(n); it != first_at.end()) {
      row.vol3 = it->second["vol3"].get<double>();
      row.chi4 = mpz_class(it->second["chi4"].get<std::string>());
      if (row.chi4 > 0) row.K = volume4(row.chi4) / mpf_class(row.vol3, 256);
    }
    s.rows.push_back(row);
  }
  s.certificate = opt.family == Family::arithmetic ? "graph recovery and distinct complex codes"
                                                   : "distinct complex codes";
  std::ofstream(csv) << summary_csv(s);
  return s;
}

std::string summary_csv(const CensusSummary& s) {
  std::ostringstream os;
  os << "n,graphs,manifolds,vol3,chi4,K\n";
  for (const SummaryRow& r : s.rows) {
    os << r.n << ',' << r.graphs << ',' << r.manifolds << ',';
    if (r.graphs) os << format_real(r.vol3) << ',' << r.chi4.get_str() << ',' << format_real(r.K);
    else os << ",,";
    os << '\n';
  }
  return os.str();
}

}  // namespace geobound
