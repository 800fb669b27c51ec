#pragma once

#include <map>
#include <vector>

#include "geobound/complex/pairing_complex.hpp"

namespace geobound {

// Colours 0..k-1 on boundary slots of a complex; -1 marks uncoloured slots.
struct Coloring {
  int colors = 0;
  std::vector<int> slot_color;  // indexed cell * facets_per_cell + facet

  static Coloring on_cell_type(const PairingComplex& base, const std::vector<int>& facet_colors);
  int at(const PairingComplex& x, FacetRef s) const {
    return slot_color[static_cast<size_t>(s.cell) * x.facets_per_cell() + s.facet];
  }
};

// Throws ColoringError naming the first offending pair of slots.
void check_coloring(const PairingComplex& base, const Coloring& c);

// 2^k copies indexed by eps; cell index base_cell * 2^k + eps. Facets of colour i in copy eps
// are glued to the same facet of copy eps ^ (1 << i).
PairingComplex coloring_quotient(const PairingComplex& base, const Coloring& c);

struct GraphEdge {
  int u = 0, v = 0, label = 0;
};

// One copy of the block per vertex (cells vertex * block_cells + cell). Edge {u,v} with label j
// glues, for every interface index in scheme[j], that interface of copy u to the same interface
// of copy v. When require_all is set every vertex needs exactly one edge per scheme label.
IndexedComplex glue_by_graph(const IndexedComplex& block, int vertices, const std::vector<GraphEdge>& edges,
                             const std::map<int, std::vector<int>>& scheme, bool require_all = true);
// Pairs (a, b) glue interface a of copy u to interface b of copy v, slot by slot.
IndexedComplex glue_by_graph_pairs(const IndexedComplex& block, int vertices, const std::vector<GraphEdge>& edges,
                                   const std::map<int, std::vector<std::pair<int, int>>>& scheme,
                                   bool require_all = true);

// Pairs slots of a boundary component by a fixed-point-free involution given as image slots.
PairingComplex self_glue(const PairingComplex& x, const std::vector<FacetRef>& component,
                         const std::vector<FacetRef>& image);

// Two copies (cells c and c + cells) with every boundary slot glued to its twin.
PairingComplex double_complex(const PairingComplex& x);

}  // namespace geobound
