#include <algorithm>
#include <sstream>

#include "geobound/coxeter/vinberg.hpp"

namespace geobound {

namespace {

bool orthogonal(const CoxeterDiagram& d, int i, int j) { return d.edge(i, j) == nullptr; }

bool has_label(const CoxeterDiagram& d, int i, int j, int m) {
  auto* w = d.edge(i, j);
  return w && w->kind == EdgeWeight::Kind::label && w->m == m;
}

// Combinatorial type from the Vinberg vertex list: one facet with 6 vertices whose faces are
// 2 triangles and 3 quadrilaterals, all other facets through a single apex off the base.
std::string pyramid_over_prism(const CoxeterDiagram& d) {
  auto verts = diagram_vertices(d, 4);
  int k = d.size();
  std::vector<std::vector<int>> facet_verts(k);
  for (int v = 0; v < int(verts.size()); ++v)
    for (int x : verts[v].nodes) facet_verts[x].push_back(v);
  if (verts.size() != 7) return "expected 7 vertices, found " + std::to_string(verts.size());
  int base = -1;
  for (int x = 0; x < k; ++x)
    if (facet_verts[x].size() == 6) {
      if (base >= 0) return "more than one facet with 6 vertices";
      base = x;
    }
  if (base < 0) return "no facet with 6 vertices";
  int apex = -1;
  for (int v = 0; v < 7; ++v)
    if (!std::count(facet_verts[base].begin(), facet_verts[base].end(), v)) apex = v;
  std::vector<int> sides;
  for (int x = 0; x < k; ++x) {
    if (x == base) continue;
    if (!std::count(facet_verts[x].begin(), facet_verts[x].end(), apex)) return "lateral facet misses the apex";
    sides.push_back(int(facet_verts[x].size()) - 1);  // its face on the base
  }
  std::sort(sides.begin(), sides.end());
  if (sides != std::vector<int>{3, 3, 4, 4, 4}) return "base is not a triangular prism";
  return {};
}

}  // namespace

ConstraintReport validate_q4_constraints(const CoxeterDiagram& d) {
  ConstraintReport r;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const char* names[] = {"A", "B", "C", "D", "E", "F"};
  int id[6];
  bool present = d.size() == 6;
  for (int i = 0; i < 6; ++i) {
    id[i] = d.find(names[i]);
    present = present && id[i] >= 0;
  }
  add("nodes are exactly A..F", present);
  if (!present) return r;
  auto [A, B, C, D, E, F] = std::tuple(id[0], id[1], id[2], id[3], id[4], id[5]);

  for (int x : {C, D, E, F})
    add("H_A orthogonal to H_" + d.nodes()[x], orthogonal(d, A, x));
  add("H_A not orthogonal to H_B", !orthogonal(d, A, B));
  for (int x : {D, E, F})
    add("H_B orthogonal to H_" + d.nodes()[x], orthogonal(d, B, x));
  add("H_B not orthogonal to H_C", !orthogonal(d, B, C));
  add("<r_C,r_D> dihedral of order 6", has_label(d, C, D, 3));
  add("<r_D,r_E> dihedral of order 6", has_label(d, D, E, 3));

  try {
    SymMatrix g = gram_matrix(d);
    add("{B,C,D,E} spherical", is_positive_definite(g.principal({B, C, D, E})));
    Signature s = signature(g);
    std::ostringstream os;
    os << "(" << s.pos << "," << s.neg << "," << s.zero << ")";
    add("signature has 4 positive and 1 negative eigenvalue", s.pos == 4 && s.neg == 1, os.str());
    std::string why = pyramid_over_prism(d);
    add("pyramid over a triangular prism", why.empty(), why);
  } catch (const std::exception& e) {
    add("Gram matrix exact in Q(sqrt2,sqrt3)", false, e.what());
  }
  return r;
}

}  // namespace geobound
