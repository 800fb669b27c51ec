// One line per acceptance criterion; exit status 1 when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "geobound/blocks/block.hpp"
#include "geobound/census/census.hpp"
#include "geobound/complex/canonical_code.hpp"
#include "geobound/complex/cusp.hpp"
#include "geobound/complex/topology.hpp"
#include "geobound/coxeter/diagram.hpp"
#include "geobound/coxeter/vinberg.hpp"
#include "geobound/errors.hpp"
#include "geobound/geometry/hyperbolic.hpp"
#include "geobound/kernel/lobachevsky.hpp"
#include "geobound/kernel/matrix.hpp"

using namespace geobound;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(s < limit_s, "runtime over " + std::to_string(limit_s) + " s");
  failures += !o.ok;
  std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << s << " s;" << o.detail.str()
            << ")" << std::endl;
}

// Lobachevsky function by quadrature: -int_0^t log(2t') dt' in closed form plus Simpson's rule
// on the smooth remainder -log(sin t'/t').
double lobachevsky_oracle(double t) {
  double head = -(t * std::log(2 * t) - t);
  const int n = 4000;
  const double h = t / n;
  auto f = [](double x) { return x == 0 ? 0.0 : -std::log(std::sin(x) / x); };
  double s = f(0) + f(t);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f(i * h);
  return head + s * h / 3;
}

// Labelled connected 4-regular graphs on n vertices.
long long labelled_regular_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<int> deg(n, 0), open(n, n - 1);
  Graph g(n);
  long long count = 0;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == pairs.size()) {
      count += g.connected();
      return;
    }
    auto [u, v] = pairs[k];
    --open[u];
    --open[v];
    if (deg[u] < 4 && deg[v] < 4) {
      ++deg[u];
      ++deg[v];
      g.add_edge(u, v);
      if (deg[u] + open[u] >= 4 && deg[v] + open[v] >= 4) rec(k + 1);
      g.remove_edge(u, v);
      --deg[u];
      --deg[v];
    }
    if (deg[u] + open[u] >= 4 && deg[v] + open[v] >= 4) rec(k + 1);
    ++open[u];
    ++open[v];
  };
  rec(0);
  return count;
}

long long brute_automorphisms(const Graph& g) {
  std::vector<int> p(g.size());
  std::iota(p.begin(), p.end(), 0);
  long long count = 0;
  do count += g.relabeled(p) == g;
  while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::vector<std::pair<Graph, FactorGraph>> factors(int max_n) {
  std::vector<std::pair<Graph, FactorGraph>> out;
  for (int n = 5; n <= max_n; ++n)
    for (const Graph& g : enumerate_regular(n))
      if (auto f = one_factorization(g); !f.empty()) out.push_back({g, f[0]});
  return out;
}

}  // namespace

int main() {
  criterion(1, "Coxeter kernel", 1.0, [](Outcome& o) {
    auto q4 = load_diagram("q4-fig4");
    Signature s = signature(gram_matrix_real(q4), 1e-9);
    o.detail << " signature (" << s.pos << "," << s.neg << "," << s.zero << ")";
    o.require(s.pos == 4 && s.neg == 1, "Gram signature (4,1)");
    std::vector<int> bcde{q4.index("B"), q4.index("C"), q4.index("D"), q4.index("E")};
    Eigen::MatrixXd g = gram_matrix_real(q4);
    Eigen::MatrixXd sub(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) sub(i, j) = g(bcde[i], bcde[j]);
    Signature ss = signature(sub, 1e-9);
    o.require(ss.pos == 4, "{B,C,D,E} positive definite");
    o.require(vertex_type(q4, bcde, 4).kind == VertexVerdict::Kind::finite, "{B,C,D,E} finite vertex");
    auto r = restrict_to_facet(q4, q4.index("A"));
    o.require(r == load_diagram("q3-fig6"), "facet A restricts to the Q3 diagram");
    auto bc = r.edge(r.index("B"), r.index("C"));
    o.require(bc && bc->kind == EdgeWeight::Kind::infinity, "B-C edge of the restriction is infinite");
    o.require(arithmeticity(load_diagram("q3-fig6")).verdict == ArithmeticityResult::Verdict::non_arithmetic,
              "Q3 non-arithmetic");
    o.require(arithmeticity(load_diagram("orthoscheme-434")).verdict == ArithmeticityResult::Verdict::arithmetic,
              "[4,3,4] arithmetic");
    o.require(arithmeticity(load_diagram("orthoscheme-4334")).verdict == ArithmeticityResult::Verdict::arithmetic,
              "[4,3,3,4] arithmetic");
  });

  criterion(2, "Orbit polytopes", 10.0, [](Outcome& o) {
    auto p3 = builtin_polytope("p3");
    const Polytope& p = p3.polytope;
    std::vector<int> hex;
    int quads = 0;
    for (int f = 0; f < p.facet_count(); ++f) {
      if (p.facet_tags()[f] == "hexagonal") hex.push_back(f);
      quads += p.facet_tags()[f] == "quadrilateral";
    }
    o.require(hex.size() == 4 && quads == 12 && p.facet_count() == 16, "4 hexagons and 12 quadrilaterals");
    o.require(p.ideal_vertex_count() == 6, "6 ideal vertices");
    o.require(symmetry_group(p).order() == 24, "symmetry order 24");
    double tangent = 0;
    for (int a : hex)
      for (int b : hex)
        if (a < b) tangent = std::max(tangent, std::fabs(minkowski(p3.system.normals[a], p3.system.normals[b]) + 1));
    o.detail << " hexagon tangency error " << tangent;
    o.require(tangent < 1e-9, "hexagon pairs tangent");
    auto p4 = builtin_polytope("p4");
    auto rep = verify_right_angled(p4.polytope, p4.system, 1e-9);
    o.detail << ", P4 max adjacent product " << rep.max_adjacent_product;
    o.require(rep.passed() && rep.max_adjacent_product < 1e-9, "P4 right-angled");
  });

  criterion(3, "Blocks", 5.0, [](Outcome& o) {
    for (Family fam : {Family::arithmetic, Family::nonarithmetic}) {
      Block b = build_block(fam);
      auto comps = boundary_components(b.complex.complex);
      std::set<std::string> codes;
      for (auto& c : comps) codes.insert(canonical_code(boundary_complex(b.complex.complex, c)).hex);
      o.require(comps.size() == 8 && codes.size() == 1, to_string(fam) + ": 8 isomorphic boundary components");
      for (auto& c : verify_involution(b).checks) o.require(c.passed, to_string(fam) + ": " + c.name);
      auto census = block_cusp_census(b);
      if (fam == Family::arithmetic) {
        o.require(census == std::map<std::string, int>{{"T_{2x4}", 6}, {"A_{2x2}", 12}}, "arithmetic cusp census");
        const int n = b.complex.complex.cells();
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
        std::vector<bool> touched(n, false);
        for (auto& s : cusp_links(b.complex.complex)) {
          if (s.name() != "T_{2x4}") continue;
          for (auto& [cell, v] : s.tile_list) {
            touched[cell] = true;
            parent[find(cell)] = find(s.tile_list.front().first);
          }
        }
        std::set<int> roots;
        bool all = true;
        for (int c = 0; c < n; ++c) {
          all = all && touched[c];
          roots.insert(find(c));
        }
        o.require(all && roots.size() == 1, "octahedron-torus incidence connected");
      } else {
        o.detail << " non-arithmetic cusps:";
        for (auto& [k, v] : census) o.detail << " " << k << " " << v;
      }
    }
  });

  criterion(4, "Graph layer", 120.0, [](Outcome& o) {
    for (int n = 5; n <= 8; ++n) {
      auto graphs = enumerate_regular(n);
      long long orbit_sum = 0;
      long long fact = 1;
      for (int i = 2; i <= n; ++i) fact *= i;
      for (const Graph& g : graphs) orbit_sum += fact / brute_automorphisms(g);
      o.require(orbit_sum == labelled_regular_count(n), "class count at n = " + std::to_string(n));
      o.detail << " n=" << n << ":" << graphs.size();
    }
    Graph k5(5);
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
    o.require(one_factorization(k5).empty(), "K5 has no 1-factorization");
    for (auto& [g, f] : factors(10)) {
      o.require(is_valid_factor(f), "colour classes are perfect matchings");
      for (auto& c : alternating_cycles(f)) o.require(c.length % 2 == 0 && c.length >= 4, "alternating cycle length");
    }
  });

  const auto census_factors = factors(8);
  const FamilyContext& ctx = family_context(Family::arithmetic);

  criterion(5, "Census roundtrip", 600.0, [&](Outcome& o) {
    std::set<std::string> codes;
    int ok = 0;
    for (auto& [g, f] : census_factors) {
      auto m = build_manifold(f, ctx.block);
      ok += canonical_form(recover_graph(m.complex)) == canonical_form(g);
      codes.insert(canonical_code(m.complex).hex);
    }
    o.detail << " " << ok << "/" << census_factors.size() << " recovered, " << codes.size() << " distinct codes";
    o.require(ok == int(census_factors.size()) && !census_factors.empty(), "recovery");
    o.require(codes.size() == census_factors.size(), "distinct codes");
  });

  criterion(6, "Cusp lemma", 600.0, [&](Outcome& o) {
    int other = 0, bad = 0, sections = 0;
    for (auto& [g, f] : census_factors) {
      auto m = build_manifold(f, ctx.block);
      for (auto& s : cusp_links(m.complex)) {
        ++sections;
        if (s.kind != CuspSection::Kind::torus) {
          ++other;
          continue;
        }
        bad += !(s.h == 4 || (s.h >= 8 && s.h % 2 == 0));
      }
    }
    o.detail << " " << sections << " sections, " << other << " not tori, " << bad << " of wrong width";
    o.require(other == 0 && bad == 0 && sections > 0, "all sections T_{2x4} or T_{2x2k}, 2k >= 8");
  });

  criterion(7, "Volume accounting", 600.0, [&](Outcome& o) {
    const double oracle = 8 * lobachevsky_oracle(kPi / 4);
    PairingComplex one(shared_cell_type("octahedron"), 1, "octahedron");
    const double v = volume3(one);
    o.detail << " v_oct " << format_real(v) << " vs quadrature " << format_real(oracle);
    o.require(std::fabs(v - 3.663862376) < 1e-8 && std::fabs(v - oracle) < 1e-8, "octahedron volume");
    mpz_class ref_chi, ref_n;
    bool constant = true;
    for (auto& [g, f] : census_factors) {
      CensusRecord r = census_record(g, f, ctx);
      const int n = g.size();
      o.require(r.diagnosis.empty(), "record built: " + r.diagnosis);
      o.require(r.vol3 == (16 * n) * ideal_octahedron_volume() && r.flags["vol3_cells"], "vol3 = 16 n v_oct");
      o.require(r.chi3 == 0, "chi(M_G) = 0");
      o.require(r.promotion.chi_d == 2 * r.promotion.chi_w && r.promotion.chi_w > 0, "Vol(D) = 2 Vol(W)");
      o.require(r.flags["boundary_match"] && r.flags["boundary_lifts"] && r.flags["no_corners"],
                "one boundary component with the code of M_G");
      if (ref_n == 0) {
        ref_chi = r.promotion.chi_w;
        ref_n = n;
      } else {
        constant = constant && r.promotion.chi_w * ref_n == ref_chi * n;
      }
    }
    o.require(constant, "chi(W_G) / n constant");
    if (ref_n != 0) {
      mpf_class k = volume4(ref_chi) / mpf_class(16 * ref_n.get_d() * ideal_octahedron_volume(), 256);
      o.detail << ", K = " << format_real(k);
    }
  });

  criterion(8, "Asymptotic claims replaced by raw counts", 60.0, [](Outcome& o) {
    auto rows = count_table(10);
    const std::map<int, long long> known{{5, 1}, {6, 1}, {7, 2}, {8, 6}, {9, 16}, {10, 59}};
    double last = 2;
    bool monotone = true;
    o.detail << " raw counts n:regular/factorable";
    for (auto& r : rows) {
      o.detail << " " << r.n << ":" << r.regular << "/" << r.factorable;
      o.require(known.count(r.n) && known.at(r.n) == r.regular, "regular count at n = " + std::to_string(r.n));
      if (r.n % 2) {
        o.require(r.factorable == 0, "odd n has no factor");
        continue;
      }
      monotone = monotone && r.fraction() <= last;
      last = r.fraction();
    }
    o.detail << "; factorable fraction over even n " << (monotone ? "non-increasing" : "not monotone")
             << "; growth rate and constants not asserted";
  });

  std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << " (" << failures << " failing)" << std::endl;
  return failures ? 1 : 0;
}
