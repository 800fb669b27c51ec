#pragma once

#include <map>
#include <string>
#include <vector>

#include "geobound/complex/pairing_complex.hpp"

namespace geobound {

enum class Family { arithmetic, nonarithmetic };
Family parse_family(const std::string& s);
std::string to_string(Family f);

struct Block {
  Family family = Family::arithmetic;
  // Components 0..3 are C_1..C_4, components 4..7 are C'_1..C'_4.
  IndexedComplex complex;
  std::vector<int> iota;                  // cell map; facets are fixed
  std::vector<std::vector<int>> mirrors;  // r_1, r_2, r_3 as cell maps
  std::vector<int> cube_vertex;           // x_1 + 2 x_2 + 4 x_3 per cell
  std::string cell_type;
  int boundary_facet = -1;                // facet of the cell type carrying the boundary
  PairingComplex prime;                   // B'
  std::vector<int> prime_coloring;        // colours on the cell type giving B'
  std::vector<int> cube_facets;           // cell type facets whose colours span the cube
};

Block build_block(Family family);

// Facet colours 0..2 on the quadrilaterals of P3 (-1 on hexagons), read from the data directory.
std::vector<int> p3_quad_coloring();
// All proper 3-colourings of the P3 quadrilaterals in which quadrilaterals touching only at an
// ideal vertex agree, with colours numbered by first occurrence.
std::vector<std::vector<int>> solve_p3_quad_colorings();

// Cube vertices representing C_1..C_4 (first coordinate 0, lexicographic).
std::vector<int> boundary_pair_representatives();

struct InvolutionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};
struct InvolutionReport {
  std::vector<InvolutionCheck> checks;
  bool passed() const;
};
// Involution, automorphism, freeness on faces and orientation reversal of a cell map.
InvolutionReport involution_checks(const PairingComplex& x, const std::vector<int>& iota);
// With override the given cell map is tested in place of the block's involution.
InvolutionReport verify_involution(const Block& b, const std::vector<int>* override_map = nullptr);

// Cusp section classes with counts; throws Error on a section of unrecognised shape.
std::map<std::string, int> block_cusp_census(const Block& b);

std::string block_json(const Block& b);

}  // namespace geobound
