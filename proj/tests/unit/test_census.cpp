#include <cmath>
#include <filesystem>
#include <functional>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "doctest.h"
#include "geobound/census/census.hpp"
#include "geobound/census/verify.hpp"
#include "geobound/complex/canonical_code.hpp"
#include "geobound/complex/coloring.hpp"
#include "geobound/complex/cusp.hpp"
#include "geobound/complex/topology.hpp"
#include "geobound/errors.hpp"

using namespace geobound;

namespace {

std::vector<std::pair<Graph, FactorGraph>> factors(int max_n) {
  std::vector<std::pair<Graph, FactorGraph>> out;
  for (int n = 6; n <= max_n; n += 2)
    for (const Graph& g : enumerate_regular(n))
      if (auto f = one_factorization(g); !f.empty()) out.push_back({g, f[0]});
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The same copies of the block glued interface to same interface, as a plain identity gluing.
PairingComplex same_interface_gluing(const Block& b, const FactorGraph& f) {
  const PairingComplex& x = b.complex.complex;
  const int bc = x.cells(), n = f.graph.size();
  PairingComplex out(x.type_ptr(), n * bc, x.type_name());
  for (int u = 0; u < n; ++u)
    for (int c = 0; c < bc; ++c)
      for (int k = 0; k < x.facets_per_cell(); ++k)
        if (int p = x.partner(c, k); p > c) out.pair(u * bc + c, u * bc + p, k);
  for (size_t e = 0; e < f.edges.size(); ++e)
    for (int side : {0, 4})
      for (const FacetRef& s : b.complex.components[f.color[e] - 1 + side])
        out.pair(f.edges[e].first * bc + s.cell, f.edges[e].second * bc + s.cell, s.facet);
  return out;
}

bool bipartite(const Graph& g) {
  std::vector<int> side(g.size(), -1);
  side[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < g.size(); ++v) {
      if (!g.has_edge(u, v)) continue;
      if (side[v] < 0) {
        side[v] = 1 - side[u];
        stack.push_back(v);
      } else if (side[v] == side[u]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("four-dimensional blocks") {
  const FamilyContext& a = family_context(Family::arithmetic);
  const Block4& b4 = a.block4;
  int vertical = 0, top = 0;
  for (auto r : b4.role) {
    vertical += r == Block4::Role::vertical;
    top += r == Block4::Role::top;
  }
  CHECK(vertical == 8);
  CHECK(top == 24 - 1 - 8);
  CHECK(b4.complex.complex.cells() == 16);
  CHECK(bottom_as_block(b4) == a.block.complex.complex);
  CHECK(canonical_code(bottom_as_block(b4)).hex == canonical_code(a.block.complex.complex).hex);
  CHECK(b4.N() == 106);
  CHECK(b4.top_colors * 2 == b4.N());
  CHECK(has_corners(b4.complex.complex));
  CHECK(b4.complex.components.size() == 8);

  const FamilyContext& na = family_context(Family::nonarithmetic);
  vertical = 0;
  for (auto r : na.block4.role) vertical += r == Block4::Role::vertical;
  CHECK(vertical == 16);
  CHECK(na.block4.complex.complex.cells() == 64);
  CHECK(bottom_as_block(na.block4) == na.block.complex.complex);
  CHECK(na.block4.top_colors * 2 == na.block4.N());
  MESSAGE("top components: arithmetic " << b4.N() << ", non-arithmetic " << na.block4.N());

  // Orbifold Euler characteristics; 24-cell volume 4 pi^2 / 3.
  CHECK(a.cell_chi4 == 1);
  CHECK(orbifold_euler_characteristic(*shared_cell_type("octahedron")) == 0);
  CHECK(na.cell_chi4 > 0);
}

TEST_CASE("build_manifold") {
  const Block& b = family_context(Family::arithmetic).block;
  for (auto& [g, f] : factors(8)) {
    IndexedComplex m = build_manifold(f, b);
    const PairingComplex& x = m.complex;
    CHECK(x.cells() == 16 * g.size());
    CHECK(x.closed());
    CHECK(orientability(x).orientable);
    CHECK(connected_components(x).size() == 1);
    CHECK(euler_characteristic(x) == 0);
    CHECK(cusp_census(cusp_links(x))["T_{2x4}"] == 6 * g.size());
    // Gluing each interface to the same interface of the neighbour only orients bipartite graphs.
    CHECK(orientability(same_interface_gluing(b, f)).orientable == bipartite(g));
  }
  FactorGraph edge;
  edge.graph = Graph(2);
  edge.graph.add_edge(0, 1);
  edge.colors = 1;
  edge.edges = {{0, 1}};
  edge.color = {1};
  CHECK_THROWS_AS(build_manifold(edge, b), GluingError);
}

TEST_CASE("graph recovery") {
  const Block& b = family_context(Family::arithmetic).block;
  std::set<std::string> codes;
  for (auto& [g, f] : factors(8)) {
    IndexedComplex m = build_manifold(f, b);
    CHECK(canonical_form(recover_graph(m.complex)) == canonical_form(g));
    // Relabelling the cells does not change the recovered graph.
    std::vector<int> perm(m.complex.cells());
    for (int c = 0; c < m.complex.cells(); ++c) perm[c] = (c * 37 + 11) % m.complex.cells();
    CHECK(std::gcd(37, m.complex.cells()) == 1);
    CHECK(canonical_form(recover_graph(m.complex.relabeled(perm))) == canonical_form(g));
    codes.insert(canonical_code(m.complex).hex);
  }
  CHECK(codes.size() == factors(8).size());
  Graph single = recover_graph(b.complex.complex);
  CHECK(single.size() == 1);
  CHECK(single.edges().empty());
  CHECK_THROWS_AS(recover_graph(b.prime), RecoveryError);
}

TEST_CASE("volumes") {
  PairingComplex one(shared_cell_type("octahedron"), 1, "octahedron");
  CHECK(std::fabs(volume3(one) - 3.6638623767) < 1e-9);
  PairingComplex p3(shared_cell_type("p3"), 1, "p3");
  CHECK(std::fabs(volume3(p3) - 24 * 0.40362) < 1e-12);
  PairingComplex c24(shared_cell_type("24-cell"), 1, "24-cell");
  CHECK_THROWS_AS(volume3(c24), Error);
  CHECK_THROWS_AS(c24.pair(0, 0, 3), GluingError);

  // A proper facet colouring of the 24-cell with k colours gives a closed manifold of 2^k cells;
  // its Euler characteristic is 2^k times the orbifold one.
  const Polytope& t = *shared_cell_type("24-cell");
  std::vector<int> colour(24, -1);
  int k = 0;
  std::function<bool(int)> paint = [&](int f) {
    if (f == 24) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int g = 0; g < f && ok; ++g) ok = colour[g] != c || t.ridge_between(f, g) < 0;
      if (!ok) continue;
      colour[f] = c;
      if (paint(f + 1)) return true;
    }
    colour[f] = -1;
    return false;
  };
  while (!paint(0)) ++k;
  PairingComplex w = coloring_quotient(c24, Coloring::on_cell_type(c24, colour));
  CHECK(w.closed());
  CHECK(orientability(w).orientable);
  CHECK(mpq_class(static_cast<long>(euler_characteristic(w))) == mpq_class(1 << k) * orbifold_euler_characteristic(t));
  CHECK(std::fabs(volume4(w) - (1 << k) * 4 * M_PI * M_PI / 3) < 1e-9);
  MESSAGE("24-cell coloured with " << k << " colours");
  CHECK_THROWS_AS(volume4(mpz_class(0)), Error);
  CHECK(std::fabs(volume4(mpz_class(3)).get_d() - 4 * M_PI * M_PI) < 1e-9);
  CHECK(format_real(3.66386237670887) == "3.66386237671");
}

TEST_CASE("census records") {
  const FamilyContext& ctx = family_context(Family::arithmetic);
  for (auto& [g, f] : factors(8)) {
    CensusRecord r = census_record(g, f, ctx);
    for (auto& [name, ok] : r.flags) {
      INFO(name << " " << r.diagnosis);
      CHECK(ok);
    }
    CHECK(r.passed());
    // chi(W_G) = 2^k n 16 with k colours on the top facets.
    mpz_class expected = 16 * g.size();
    mpz_mul_2exp(expected.get_mpz_t(), expected.get_mpz_t(), r.promotion.colors);
    CHECK(r.promotion.chi_w == expected);
    CHECK(r.promotion.chi_d == 2 * expected);
    CHECK(r.json().find("\"passed\":true") != std::string::npos);
  }
  CHECK(cusp_lemma_holds(Family::arithmetic, {{"T_{2x4}", 6}, {"T_{2x8}", 2}}));
  CHECK_FALSE(cusp_lemma_holds(Family::arithmetic, {{"T_{2x6}", 2}}));
  CHECK_FALSE(cusp_lemma_holds(Family::arithmetic, {{"other", 1}}));
  CHECK_FALSE(cusp_lemma_holds(Family::nonarithmetic, {{"annulus", 1}}));

  const FamilyContext& nctx = family_context(Family::nonarithmetic);
  auto [g, f] = factors(6).front();
  CensusRecord r = census_record(g, f, nctx);
  CHECK(r.passed());
  mpq_class per_vertex(r.promotion.chi_w, g.size());
  per_vertex.canonicalize();
  mpz_class lifts = 1;
  mpz_mul_2exp(lifts.get_mpz_t(), lifts.get_mpz_t(), r.promotion.colors);
  CHECK(per_vertex == mpq_class(lifts * 64) * nctx.cell_chi4);
}

TEST_CASE("census run, resume and determinism") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "geobound-census-test";
  fs::remove_all(dir);
  CensusOptions opt;
  opt.family = Family::arithmetic;
  opt.max_n = 7;
  opt.out_dir = (dir / "a").string();
  opt.jobs = 1;
  CensusSummary s = run_census(opt);
  CHECK(s.passed());
  REQUIRE(s.rows.size() == 3);
  CHECK(s.rows[0].n == 5);
  CHECK(s.rows[0].graphs == 0);
  CHECK(s.rows[1].graphs == 1);
  CHECK(s.rows[2].graphs == 0);
  CHECK(s.records == 1);
  std::string csv = slurp(opt.out_dir + "/summary-arithmetic.csv");
  CHECK(csv.rfind("n,graphs,manifolds,vol3,chi4,K\n5,0,0,,,\n6,1,1,", 0) == 0);

  opt.max_n = 8;
  s = run_census(opt);
  CHECK(s.passed());
  CHECK(s.resumed == 1);
  CHECK(s.records == 7);
  CHECK(s.codes_distinct);
  CHECK(s.ratio_constant);
  const std::string full = slurp(opt.out_dir + "/census-arithmetic.jsonl");

  // Cut the file inside its fourth record, as an interrupted run would leave it.
  size_t cut = 0;
  for (int i = 0; i < 3; ++i) cut = full.find('\n', cut) + 1;
  std::ofstream(opt.out_dir + "/census-arithmetic.jsonl") << full.substr(0, cut + 40);
  s = run_census(opt);
  CHECK(s.resumed == 3);
  CHECK(slurp(opt.out_dir + "/census-arithmetic.jsonl") == full);

  CensusOptions par = opt;
  par.out_dir = (dir / "b").string();
  par.jobs = 2;
  par.resume = false;
  run_census(par);
  CHECK(slurp(par.out_dir + "/census-arithmetic.jsonl") == full);
  CHECK(slurp(par.out_dir + "/summary-arithmetic.csv") == slurp(opt.out_dir + "/summary-arithmetic.csv"));

  opt.max_n = kCensusMaxN + 1;
  CHECK_THROWS_AS(run_census(opt), Error);
  fs::remove_all(dir);
}

TEST_CASE("verify ids") {
  CHECK(verify_ids().size() == 7);
  for (const auto& id : verify_ids()) {
    VerifyReport r = run_verify(id, 8);
    for (auto& c : r.checks) {
      INFO(id << ": " << c.name << " " << c.detail);
      CHECK(c.passed);
    }
  }
  CHECK_THROWS_AS(run_verify("lemma-9"), Error);
}
