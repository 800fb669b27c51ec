#include <algorithm>
#include <random>

#include "doctest.h"
#include "geobound/coxeter/diagram.hpp"
#include "geobound/coxeter/vinberg.hpp"
#include "geobound/errors.hpp"

using namespace geobound;

namespace {

std::vector<int> nodes(const CoxeterDiagram& d, std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (auto* n : names) out.push_back(d.index(n));
  return out;
}

}  // namespace

TEST_CASE("parse examples") {
  auto d = parse_diagram("A B 4\nB C 3");
  CHECK(d.size() == 3);
  CHECK(d.edge(0, 1)->m == 4);
  CHECK(d.edge(1, 2)->m == 3);
  CHECK(d.edge(0, 2) == nullptr);
  CHECK_THROWS_AS(parse_diagram("A A 3"), ParseError);
  CHECK_THROWS_AS(parse_diagram("A B 3\nB A 4"), ParseError);
  CHECK_THROWS_AS(parse_diagram("A B 7"), ParseError);
  CHECK_THROWS_AS(parse_diagram("A B 2"), ParseError);
  CHECK_THROWS_AS(parse_diagram("A B"), ParseError);
  try {
    parse_diagram("A B 3\n\nC D x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  auto dashed = parse_diagram("X Y -3/2\nnode Z");
  CHECK(dashed.size() == 3);
  CHECK(*dashed.edge(0, 1)->w == ExactScalar::rational(3, 2));
  auto floaty = parse_diagram("X Y -1.25");
  CHECK(!floaty.edge(0, 1)->w);
  CHECK_THROWS_AS(gram_matrix(floaty), UnsupportedField);
  CHECK(gram_matrix_real(floaty)(0, 1) == doctest::Approx(-1.25));
  CHECK(parse_diagram(format_diagram(dashed)) == dashed);
}

TEST_CASE("gram entries") {
  CHECK(gram_matrix(parse_diagram("node A"))(0, 0) == ExactScalar(1));
  auto g = gram_matrix(parse_diagram("A B 4"));
  CHECK(g(0, 1) == -ExactScalar(0, mpq_class(1, 2)));
  CHECK(gram_matrix(parse_diagram("A B inf"))(0, 1) == ExactScalar(-1));
  CHECK_THROWS_AS(gram_matrix(parse_diagram("A B 5")), UnsupportedField);
}

TEST_CASE("built-in corpus is hyperbolic of the claimed dimension") {
  struct Case { const char* name; int dim; };
  for (auto c : {Case{"q4-fig4", 4}, Case{"q3-fig6", 3}, Case{"orthoscheme-434", 3}, Case{"orthoscheme-4334", 4}}) {
    auto d = load_diagram(c.name);
    Signature s = signature(gram_matrix(d));
    CHECK_MESSAGE(s.pos == c.dim, c.name);
    CHECK_MESSAGE(s.neg == 1, c.name);
  }
  // Six normals in R^{4,1} are linearly dependent, so the pyramid Gram matrices are singular.
  auto q4 = load_diagram("q4-fig4");
  CHECK(signature(gram_matrix(q4)) == Signature{4, 1, 1});
  CHECK(det(gram_matrix(q4)).is_zero());
  CHECK(signature(gram_matrix(load_diagram("q3-fig6"))) == Signature{3, 1, 1});
  CHECK(signature(gram_matrix(load_diagram("orthoscheme-434"))) == Signature{3, 1, 0});
  CHECK(signature(gram_matrix(load_diagram("orthoscheme-4334"))) == Signature{4, 1, 0});
  // The literal linear string 4-3-4 is Euclidean.
  CHECK(signature(gram_matrix(parse_diagram("a b 4\nb c 3\nc d 4"))) == Signature{3, 0, 1});
}

TEST_CASE("vertex verdicts") {
  auto q4 = load_diagram("q4-fig4");
  auto q3 = load_diagram("q3-fig6");
  CHECK(vertex_type(q4, nodes(q4, {"B", "C", "D", "E"}), 4).kind == VertexVerdict::Kind::finite);
  CHECK(is_positive_definite(gram_matrix(q4).principal(nodes(q4, {"B", "C", "D", "E"}))));
  CHECK(vertex_type(q3, nodes(q3, {"C", "D", "E"}), 3).kind == VertexVerdict::Kind::finite);
  auto bc = vertex_type(q3, nodes(q3, {"B", "C"}), 3);
  CHECK(bc.kind == VertexVerdict::Kind::ideal);
  CHECK(bc.witness == nodes(q3, {"B", "C", "E", "F"}));
  CHECK(vertex_type(q3, nodes(q3, {"B", "C", "D"}), 3).kind == VertexVerdict::Kind::none);

  auto v4 = diagram_vertices(q4, 4);
  int finite = 0, ideal = 0;
  for (auto& v : v4) (v.ideal ? ideal : finite)++;
  CHECK(finite == 5);
  CHECK(ideal == 2);
  auto v3 = diagram_vertices(q3, 3);
  CHECK(v3.size() == 5);
  for (auto& v : v3) {
    auto verdict = vertex_type(q3, v.nodes, 3);
    CHECK(verdict.kind == (v.ideal ? VertexVerdict::Kind::ideal : VertexVerdict::Kind::finite));
    if (verdict.kind == VertexVerdict::Kind::finite) {
      CHECK(v.nodes.size() == 3);
      CHECK(is_positive_definite(gram_matrix(q3).principal(v.nodes)));
    }
  }
}

TEST_CASE("restriction to a facet") {
  auto q4 = load_diagram("q4-fig4");
  auto q3 = load_diagram("q3-fig6");
  auto r = restrict_to_facet(q4, q4.index("A"));
  CHECK(r == q3);
  auto bc = r.edge(r.index("B"), r.index("C"));
  REQUIRE(bc);
  CHECK(bc->kind == EdgeWeight::Kind::infinity);
  for (auto x : {"C", "D", "E", "F"})
    for (auto y : {"C", "D", "E", "F"})
      if (std::string(x) < y) {
        auto* a = q4.edge(q4.index(x), q4.index(y));
        auto* b = r.edge(r.index(x), r.index(y));
        CHECK((a == nullptr) == (b == nullptr));
        if (a && b) CHECK(*a == *b);
      }
  // Commutativity with direct projection of the Gram matrix.
  SymMatrix g = gram_matrix(q4);
  SymMatrix gr = gram_matrix(r);
  int A = q4.index("A");
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j) {
      int x = q4.index(r.nodes()[i]), y = q4.index(r.nodes()[j]);
      ExactScalar num = g(x, y) - g(x, A) * g(y, A);
      ExactScalar den2 = (ExactScalar(1) - g(x, A) * g(x, A)) * (ExactScalar(1) - g(y, A) * g(y, A));
      CHECK(gr(i, j) * gr(i, j) * den2 == num * num);
      CHECK(gr(i, j).sign() == num.sign());
    }
  auto iso = parse_diagram("A B 3\nnode C");
  CHECK(restrict_to_facet(iso, 2) == parse_diagram("A B 3"));
  CHECK_THROWS_AS(restrict_to_facet(parse_diagram("A B inf\nB C 3"), 0), DegenerateFacet);
}

TEST_CASE("arithmeticity verdicts") {
  auto q3 = arithmeticity(load_diagram("q3-fig6"));
  CHECK(q3.verdict == ArithmeticityResult::Verdict::non_arithmetic);
  CHECK(q3.cycle.size() == 3);
  CHECK(!q3.product.is_rational());
  CHECK(arithmeticity(load_diagram("orthoscheme-434")).verdict == ArithmeticityResult::Verdict::arithmetic);
  CHECK(arithmeticity(load_diagram("orthoscheme-4334")).verdict == ArithmeticityResult::Verdict::arithmetic);
  CHECK(arithmeticity(parse_diagram("a b 4\nb c 3\nc d 4")).verdict == ArithmeticityResult::Verdict::arithmetic);
  CHECK(arithmeticity(parse_diagram("a b 4\nb c 3\nc d 3\nd e 4")).verdict == ArithmeticityResult::Verdict::arithmetic);
  CHECK(arithmeticity(load_diagram("q4-fig4")).verdict == ArithmeticityResult::Verdict::non_arithmetic);
  CHECK(arithmeticity(parse_diagram("a b -1.3")).verdict == ArithmeticityResult::Verdict::undecidable);
  // Non-integral square of a dashed weight.
  CHECK(arithmeticity(parse_diagram("a b -5/4")).verdict == ArithmeticityResult::Verdict::non_arithmetic);
}

TEST_CASE("arithmeticity invariant under relabeling") {
  std::mt19937 rng(17);
  for (auto name : builtin_diagram_names()) {
    auto d = load_diagram(name);
    auto base = arithmeticity(d).verdict;
    for (int t = 0; t < 20; ++t) {
      std::vector<int> p(d.size());
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(arithmeticity(d.permuted(p)).verdict == base);
    }
  }
}

TEST_CASE("pyramid constraints") {
  auto q4 = load_diagram("q4-fig4");
  auto good = validate_q4_constraints(q4);
  for (auto& c : good.checks) CHECK_MESSAGE(c.passed, c.name << " " << c.detail);
  CHECK(good.checks.size() >= 11);

  auto bc = q4;
  bc.set_edge(bc.index("B"), bc.index("C"), EdgeWeight::label(3));
  auto bc_orth = parse_diagram("A B 4\nC D 3\nD E 3\nD F 4\nE F inf");
  auto rep = validate_q4_constraints(bc_orth);
  CHECK(!rep.all_passed());
  bool saw = false;
  for (auto& c : rep.checks)
    if (c.name == "H_B not orthogonal to H_C") saw = !c.passed;
  CHECK(saw);

  auto no_de = parse_diagram("A B 4\nB C 4\nC D 3\nD F 4\nE F inf");
  auto rep2 = validate_q4_constraints(no_de);
  bool de_failed = false;
  for (auto& c : rep2.checks)
    if (c.name == "<r_D,r_E> dihedral of order 6") de_failed = !c.passed;
  CHECK(de_failed);

  // With A-B labelled 3 the facet angle between B and C is no longer a Coxeter angle.
  auto ab3 = parse_diagram("A B 3\nB C 4\nC D 3\nD E 3\nD F 4\nE F inf");
  CHECK_THROWS_AS(restrict_to_facet(ab3, 0), Error);
}
