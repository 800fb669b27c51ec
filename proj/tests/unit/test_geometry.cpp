#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "geobound/coxeter/vinberg.hpp"
#include "geobound/errors.hpp"
#include "geobound/geometry/hyperbolic.hpp"

using namespace geobound;

namespace {

int count_tag(const Polytope& p, const std::string& tag) {
  int c = 0;
  for (auto& t : p.facet_tags()) c += t == tag;
  return c;
}

}  // namespace

TEST_CASE("realization reproduces Gram matrices") {
  Eigen::MatrixXd one(1, 1);
  one << 1;
  auto s1 = realize(one);
  CHECK(s1.n == 1);
  CHECK(minkowski(s1.normals[0], s1.normals[0]) == doctest::Approx(1));

  auto q4 = load_diagram("q4-fig4");
  auto sys = realize(gram_matrix_real(q4));
  CHECK(sys.n == 4);
  CHECK(sys.normals.size() == 6);
  SymMatrix exact = gram_matrix(q4);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(std::fabs(minkowski(sys.normals[i], sys.normals[j]) - exact(i, j).to_double()) < 1e-12);

  auto dashed = parse_diagram("a b -3/2\nb c 3\na c 3");
  auto sd = realize(gram_matrix_real(dashed));
  CHECK(minkowski(sd.normals[0], sd.normals[1]) == doctest::Approx(-1.5));

  Eigen::MatrixXd two_neg = Eigen::MatrixXd::Identity(3, 3);
  two_neg(0, 0) = -1;
  two_neg(1, 1) = -1;
  CHECK_THROWS_AS(realize(two_neg), NotHyperbolic);

  // Reflections are Minkowski isometries.
  Mat r = reflection(sys.normals[0]);
  Mat J = Mat::Identity(5, 5);
  J(4, 4) = -1;
  CHECK((r.transpose() * J * r - J).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((r * r - Mat::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("orbit groups") {
  auto q3 = load_diagram("q3-fig6");
  auto seed = coxeter_polytope(q3, 3);
  auto idx = [&](const char* n) { return q3.index(n); };
  CHECK(orbit_group(seed.system, {idx("C"), idx("D"), idx("E")}).size() == 24);
  CHECK(orbit_group(seed.system, {idx("D"), idx("E")}).size() == 6);
  CHECK(orbit_group(seed.system, {}).size() == 1);
  // B and C are tangent: the group they generate is infinite.
  CHECK_THROWS_AS(orbit_group(seed.system, {idx("B"), idx("C")}, 500), InfiniteGroup);

  auto q4 = load_diagram("q4-fig4");
  auto seed4 = coxeter_polytope(q4, 4);
  CHECK(orbit_group(seed4.system, {q4.index("B"), q4.index("C"), q4.index("D"), q4.index("E")}).size() == 384);
}

TEST_CASE("seed pyramids") {
  auto q4 = coxeter_polytope(load_diagram("q4-fig4"), 4);
  CHECK(q4.polytope.f_vector() == std::vector<int>{7, 15, 14, 6});
  CHECK(q4.polytope.ideal_vertex_count() == 2);
  auto q3 = coxeter_polytope(load_diagram("q3-fig6"), 3);
  CHECK(q3.polytope.f_vector() == std::vector<int>{5, 8, 5});
  CHECK(q3.polytope.ideal_vertex_count() == 1);
  CHECK(!q3.polytope.right_angled());
  CHECK(!verify_right_angled(q3.polytope, q3.system).passed());
  CHECK(symmetry_group(q3.polytope).order() == 1);
  // Trivial group reproduces the seed.
  auto same = assemble_orbit_polytope(q4, {Mat::Identity(5, 5)}, {});
  CHECK(same.polytope.f_vector() == q4.polytope.f_vector());
  CHECK(!find_isomorphism(same.polytope, q4.polytope).empty());
}

TEST_CASE("P3") {
  auto rp = builtin_polytope("p3");
  const Polytope& p = rp.polytope;
  CHECK(p.facet_count() == 16);
  CHECK(count_tag(p, "hexagonal") == 4);
  CHECK(count_tag(p, "quadrilateral") == 12);
  CHECK(p.ideal_vertex_count() == 6);
  CHECK(p.vertex_count() - p.count(1) + p.count(2) == 2);
  CHECK(p.right_angled());
  auto rep = verify_right_angled(p, rp.system);
  CHECK(rep.passed());
  CHECK(rep.max_adjacent_product < 1e-9);
  // Hexagons: pairwise disjoint, pairwise tangent, alternating ideal and finite vertices.
  std::vector<int> hex;
  for (int f = 0; f < 16; ++f)
    if (p.facet_tags()[f] == "hexagonal") hex.push_back(f);
  for (int a : hex) {
    for (int b : hex)
      if (a < b) {
        CHECK(p.ridge_between(a, b) < 0);
        CHECK(std::fabs(minkowski(rp.system.normals[a], rp.system.normals[b]) + 1) < 1e-9);
      }
    auto fv = p.facet(a);
    const Polytope& poly = fv.polytope;
    for (int e = 0; e < poly.count(1); ++e) {
      auto& ends = poly.vertices_of(1, e);
      CHECK(poly.ideal(ends[0]) != poly.ideal(ends[1]));
    }
  }
  // Quadrilaterals intersect in triples at finite vertices.
  int triples = 0;
  for (int v = 0; v < p.vertex_count(); ++v) {
    auto& fs = p.facets_of(0, v);
    bool all_quads = true;
    for (int f : fs) all_quads = all_quads && p.facet_tags()[f] == "quadrilateral";
    if (all_quads && fs.size() == 3) ++triples;
  }
  CHECK(triples == 4);
  auto g = symmetry_group(p);
  CHECK(g.order() == 24);
  std::multiset<size_t> orbit_sizes;
  for (auto& o : g.facet_orbits) orbit_sizes.insert(o.size());
  CHECK(orbit_sizes == std::multiset<size_t>{4, 12});

  // Forgetting geometry: rebuild from the lattice only.
  std::vector<std::vector<int>> facets;
  std::vector<bool> ideal;
  for (int f = 0; f < p.facet_count(); ++f) facets.push_back(p.vertices_of(2, f));
  for (int v = 0; v < p.vertex_count(); ++v) ideal.push_back(p.ideal(v));
  CHECK(symmetry_group(Polytope::from_facets(3, facets, ideal)).order() == 24);

  // Vertex kinds agree with the Vinberg verdicts of their seed vertices.
  auto q3 = load_diagram("q3-fig6");
  for (int v = 0; v < p.vertex_count(); ++v) {
    auto kind = vertex_type(q3, rp.vertex_nodes[v], 3).kind;
    CHECK(kind == (p.ideal(v) ? VertexVerdict::Kind::ideal : VertexVerdict::Kind::finite));
  }
}

TEST_CASE("P4") {
  auto rp = builtin_polytope("p4");
  const Polytope& p = rp.polytope;
  auto rep = verify_right_angled(p, rp.system);
  CHECK(rep.passed());
  CHECK(rep.max_adjacent_product < 1e-9);
  CHECK(p.right_angled());
  CHECK(p.facet_count() == 64);
  CHECK(p.ideal_vertex_count() == 32);
  // Bottom facet (image of H_A under the identity) is P3.
  auto p3 = builtin_polytope("p3").polytope;
  auto bottom = p.facet(0);
  CHECK(rp.facet_node[0] == load_diagram("q4-fig4").index("A"));
  CHECK(!find_isomorphism(bottom.polytope, p3).empty());
  // Facets meeting the bottom: one per face of P3; those over quadrilaterals are 12.
  int over_quads = 0, over_hex = 0;
  for (int r : p.faces_in_facet(0, 2)) {
    int local = -1;
    for (int i = 0; i < bottom.polytope.facet_count(); ++i)
      if (bottom.face_map[2][i] == r) local = i;
    REQUIRE(local >= 0);
    size_t sides = bottom.polytope.vertices_of(2, local).size();
    (sides == 4 ? over_quads : over_hex)++;
  }
  CHECK(over_quads == 12);
  CHECK(over_hex == 4);
  auto q4 = load_diagram("q4-fig4");
  for (int v = 0; v < p.vertex_count(); ++v) {
    auto kind = vertex_type(q4, rp.vertex_nodes[v], 4).kind;
    CHECK(kind == (p.ideal(v) ? VertexVerdict::Kind::ideal : VertexVerdict::Kind::finite));
  }
}

TEST_CASE("octahedron and 24-cell") {
  auto o = builtin_polytope("octahedron");
  CHECK(o.polytope.facet_count() == 8);
  CHECK(count_tag(o.polytope, "white") == 4);
  CHECK(count_tag(o.polytope, "black") == 4);
  CHECK(o.polytope.ideal_vertex_count() == 6);
  CHECK(o.polytope.right_angled());
  CHECK(symmetry_group(o.polytope).order() == 48);
  // Same-coloured faces meet at most in an ideal vertex.
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      if (o.polytope.facet_tags()[a] == o.polytope.facet_tags()[b]) CHECK(o.polytope.ridge_between(a, b) < 0);

  auto c = builtin_polytope("24-cell");
  CHECK(c.polytope.facet_count() == 24);
  CHECK(c.polytope.ideal_vertex_count() == 24);
  CHECK(verify_right_angled(c.polytope, c.system).passed());
  for (int f = 0; f < 24; ++f) {
    int adjacent = 0;
    for (int g = 0; g < 24; ++g) adjacent += g != f && c.polytope.ridge_between(f, g) >= 0;
    CHECK(adjacent == 8);
    CHECK(!find_isomorphism(c.polytope.facet(f).polytope, o.polytope).empty());
  }
  CHECK_THROWS_AS(builtin_polytope("dodecahedron"), Error);
}

TEST_CASE("polytope dump") {
  auto s = polytope_json(builtin_polytope("octahedron").polytope);
  CHECK(s.find("\"vertex_flags\"") != std::string::npos);
  CHECK(s.find("\"white\"") != std::string::npos);
}
