#include "geobound/complex/coloring.hpp"

#include <algorithm>
#include <set>

#include "geobound/complex/topology.hpp"
#include "geobound/errors.hpp"

namespace geobound {

namespace {

std::string slot_str(FacetRef s) {
  return "(cell " + std::to_string(s.cell) + ", facet " + std::to_string(s.facet) + ")";
}

}  // namespace

Coloring Coloring::on_cell_type(const PairingComplex& base, const std::vector<int>& facet_colors) {
  require(int(facet_colors.size()) == base.facets_per_cell(), "Coloring: one entry per facet");
  Coloring c;
  for (int v : facet_colors) c.colors = std::max(c.colors, v + 1);
  for (int cell = 0; cell < base.cells(); ++cell)
    for (int f = 0; f < base.facets_per_cell(); ++f)
      c.slot_color.push_back(base.is_boundary(cell, f) ? facet_colors[f] : -1);
  return c;
}

void check_coloring(const PairingComplex& base, const Coloring& c) {
  const int nf = base.facets_per_cell();
  if (c.slot_color.size() != static_cast<size_t>(base.cells()) * nf)
    throw ColoringError("colouring has wrong number of slots");
  std::vector<bool> used(c.colors, false);
  for (int cell = 0; cell < base.cells(); ++cell)
    for (int f = 0; f < nf; ++f) {
      int col = c.at(base, {cell, f});
      if (col < 0) continue;
      if (col >= c.colors) throw ColoringError("colour out of range at " + slot_str({cell, f}));
      if (!base.is_boundary(cell, f)) throw ColoringError("coloured slot " + slot_str({cell, f}) + " is already paired");
      used[col] = true;
    }
  for (int i = 0; i < c.colors; ++i)
    if (!used[i]) throw ColoringError("colour " + std::to_string(i) + " is not used");

  // Coloured facets (smooth boundary components) meeting in a finite face must differ in colour.
  std::vector<int> comp(c.slot_color.size(), -1);
  {
    auto comps = boundary_components(base);
    for (size_t i = 0; i < comps.size(); ++i)
      for (const FacetRef& s : comps[i]) comp[static_cast<size_t>(s.cell) * nf + s.facet] = int(i);
  }
  FaceClasses fc = face_classes(base);
  const Polytope& t = base.type();
  for (int k = 0; k + 1 < base.dim(); ++k) {
    const int per = t.count(k);
    std::vector<std::vector<std::pair<FacetRef, int>>> at(fc.count[k]);
    for (int cell = 0; cell < base.cells(); ++cell)
      for (int f = 0; f < nf; ++f) {
        int col = c.at(base, {cell, f});
        if (col < 0) continue;
        for (int i : t.faces_in_facet(f, k)) {
          int cls = fc.classes[k][static_cast<size_t>(cell) * per + i];
          if (k == 0 && fc.ideal_vertex[cls]) continue;
          for (const auto& [other, oc] : at[cls])
            if (oc == col && comp[static_cast<size_t>(other.cell) * nf + other.facet] != comp[static_cast<size_t>(cell) * nf + f])
              throw ColoringError("slots " + slot_str(other) + " and " + slot_str({cell, f}) +
                                  " meet and share colour " + std::to_string(col));
          at[cls].push_back({{cell, f}, col});
        }
      }
  }
}

PairingComplex coloring_quotient(const PairingComplex& base, const Coloring& c) {
  check_coloring(base, c);
  if (c.colors > 24) throw ColoringError("too many colours to build the quotient explicitly");
  const int copies = 1 << c.colors;
  const int nf = base.facets_per_cell();
  PairingComplex out(base.type_ptr(), base.cells() * copies, base.type_name());
  for (int cell = 0; cell < base.cells(); ++cell)
    for (int f = 0; f < nf; ++f) {
      int p = base.partner(cell, f);
      int col = c.at(base, {cell, f});
      for (int e = 0; e < copies; ++e) {
        if (p > cell) out.pair(cell * copies + e, p * copies + e, f);
        if (col >= 0 && !(e >> col & 1)) out.pair(cell * copies + e, cell * copies + (e | 1 << col), f);
      }
    }
  return out;
}

IndexedComplex glue_by_graph(const IndexedComplex& block, int vertices, const std::vector<GraphEdge>& edges,
                             const std::map<int, std::vector<int>>& scheme, bool require_all) {
  std::map<int, std::vector<std::pair<int, int>>> pairs;
  for (const auto& [label, comps] : scheme)
    for (int i : comps) pairs[label].push_back({i, i});
  return glue_by_graph_pairs(block, vertices, edges, pairs, require_all);
}

IndexedComplex glue_by_graph_pairs(const IndexedComplex& block, int vertices, const std::vector<GraphEdge>& edges,
                                   const std::map<int, std::vector<std::pair<int, int>>>& scheme, bool require_all) {
  const int bc = block.complex.cells();
  const int nc = int(block.components.size());
  for (const auto& [label, list] : scheme)
    for (auto [a, b] : list) {
      if (a < 0 || a >= nc || b < 0 || b >= nc)
        throw GluingError("scheme label " + std::to_string(label) + " names a missing interface");
      const auto &ca = block.components[a], &cb = block.components[b];
      bool match = ca.size() == cb.size();
      for (size_t i = 0; match && i < ca.size(); ++i) match = ca[i].facet == cb[i].facet;
      if (!match)
        throw GluingError("scheme label " + std::to_string(label) + " pairs interfaces of different shape");
    }
  std::vector<std::map<int, int>> seen(vertices);
  for (const GraphEdge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertices || e.v >= vertices || e.u == e.v)
      throw GluingError("edge has invalid endpoints");
    if (!scheme.count(e.label)) throw GluingError("edge label " + std::to_string(e.label) + " not in scheme");
    for (int w : {e.u, e.v})
      if (++seen[w][e.label] > 1)
        throw GluingError("vertex " + std::to_string(w) + " has two edges labelled " + std::to_string(e.label));
  }
  if (require_all)
    for (int w = 0; w < vertices; ++w)
      for (const auto& entry : scheme)
        if (!seen[w].count(entry.first))
          throw GluingError("label " + std::to_string(entry.first) + " missing at vertex " + std::to_string(w));

  IndexedComplex out;
  out.complex = PairingComplex(block.complex.type_ptr(), bc * vertices, block.complex.type_name());
  for (int w = 0; w < vertices; ++w)
    for (int a = 0; a < bc; ++a)
      for (int f = 0; f < block.complex.facets_per_cell(); ++f) {
        int b = block.complex.partner(a, f);
        if (b > a) out.complex.pair(w * bc + a, w * bc + b, f);
      }
  std::vector<std::vector<bool>> used(vertices, std::vector<bool>(nc, false));
  for (const GraphEdge& e : edges)
    for (auto [a, b] : scheme.at(e.label)) {
      used[e.u][a] = used[e.v][b] = true;
      const auto &ca = block.components[a], &cb = block.components[b];
      for (size_t i = 0; i < ca.size(); ++i) out.complex.pair(e.u * bc + ca[i].cell, e.v * bc + cb[i].cell, ca[i].facet);
    }
  for (int w = 0; w < vertices; ++w)
    for (int i = 0; i < nc; ++i) {
      if (used[w][i]) continue;
      std::vector<FacetRef> comp;
      for (const FacetRef& s : block.components[i]) comp.push_back({w * bc + s.cell, s.facet});
      out.components.push_back(std::move(comp));
      out.names.push_back(std::to_string(w) + ":" + (i < int(block.names.size()) ? block.names[i] : std::to_string(i)));
    }
  return out;
}

PairingComplex self_glue(const PairingComplex& x, const std::vector<FacetRef>& component,
                         const std::vector<FacetRef>& image) {
  require(component.size() == image.size(), "self_glue: image size");
  std::map<FacetRef, FacetRef> inv;
  for (size_t i = 0; i < component.size(); ++i) inv[component[i]] = image[i];
  for (const auto& [s, t] : inv) {
    if (!x.is_boundary(s.cell, s.facet)) throw GluingError("self_glue: slot is not on the boundary");
    if (s == t) throw GluingError("self_glue: involution fixes " + slot_str(s));
    if (s.facet != t.facet) throw GluingError("self_glue: involution changes the facet type");
    auto it = inv.find(t);
    if (it == inv.end() || it->second != s) throw GluingError("self_glue: map is not an involution on the component");
  }
  // Compatibility with the component's own ridge structure.
  for (const auto& [s, t] : inv)
    for (int r : x.type().faces_in_facet(s.facet, x.dim() - 2)) {
      BoundaryStep a = boundary_step(x, s, r), b = boundary_step(x, t, r);
      if (a.smooth() != b.smooth()) throw GluingError("self_glue: involution does not respect corners");
      if (a.smooth()) {
        auto ia = inv.find(a.next);
        if (ia == inv.end() || ia->second != b.next)
          throw GluingError("self_glue: involution does not respect adjacency at " + slot_str(s));
      }
    }
  PairingComplex out = x;
  for (const auto& [s, t] : inv)
    if (s < t) out.pair(s.cell, t.cell, s.facet);
  return out;
}

PairingComplex double_complex(const PairingComplex& x) {
  const int n = x.cells();
  PairingComplex out(x.type_ptr(), 2 * n, x.type_name());
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < x.facets_per_cell(); ++f) {
      int b = x.partner(a, f);
      if (b < 0) out.pair(a, a + n, f);
      else if (b > a) {
        out.pair(a, b, f);
        out.pair(a + n, b + n, f);
      }
    }
  return out;
}

}  // namespace geobound
