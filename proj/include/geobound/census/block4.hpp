#pragma once

#include <vector>

#include "geobound/blocks/block.hpp"
#include "geobound/complex/coloring.hpp"

namespace geobound {

// The 4-dimensional block whose bottom facet is a copy of B. Cells are indexed like the cells of
// B, so that cell c of B is the bottom facet of cell c here.
struct Block4 {
  enum class Role { bottom, vertical, top };

  Family family = Family::arithmetic;
  std::string cell_type;
  // Interfaces 0..7 lie over C_1..C_4, C'_1..C'_4 of B.
  IndexedComplex complex;
  int bottom_facet = 0;
  std::vector<Role> role;          // per facet of the cell type
  std::vector<int> over;           // vertical facet -> facet of B's cell type below it, else -1
  std::vector<int> bottom_to_cell; // facet of the bottom polytope -> facet of B's cell type
  std::vector<int> facet_colors;
  int colors = 0;

  std::vector<FacetRef> bottom;                   // slot of cell c at position c
  std::vector<std::vector<FacetRef>> top;         // smooth top components
  std::vector<int> top_of_slot;                   // slot -> top component or -1
  int N() const { return static_cast<int>(top.size()); }

  // The block involution moves top components in pairs; both members of a pair share a colour.
  std::vector<int> iota;
  std::vector<int> top_color;  // top component -> colour
  int top_colors = 0;
};

Block4 build_block4(const Block& b);

// Face pairing of the bottom facet transported onto the facets of B's cell type.
PairingComplex bottom_as_block(const Block4& b4);

// Coloring of a complex made of copies of the block (cells copy * cells + c) by top_color.
Coloring top_coloring(const Block4& b4, const PairingComplex& w);

}  // namespace geobound
