#pragma once

#include <map>
#include <string>
#include <vector>

#include "geobound/complex/pairing_complex.hpp"

namespace geobound {

// Cross-section of one cusp of a 3-dimensional complex, tiled by vertex links (rectangles).
struct CuspSection {
  enum class Kind { torus, annulus, other };
  Kind kind = Kind::other;
  int tiles = 0;
  int h = 0;        // 2 x h normal form; 0 when the section has none
  int systole = 0;  // shortest closed axis-parallel line in tiles; 0 without closed lines
  std::vector<std::pair<int, int>> tile_list;  // (cell, ideal vertex of the cell type)
  // Per axis: (length, closed) of each line of tiles.
  std::vector<std::pair<int, bool>> lines[2];

  std::string name() const;
};

std::vector<CuspSection> cusp_links(const PairingComplex& x);

std::map<std::string, int> cusp_census(const std::vector<CuspSection>& sections);

}  // namespace geobound
