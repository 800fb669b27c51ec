#pragma once

#include <vector>

#include "geobound/complex/pairing_complex.hpp"

namespace geobound {

// classes[k][cell * type.count(k) + i] = class id of face i of that cell, for k < dim.
struct FaceClasses {
  std::vector<std::vector<int>> classes;
  std::vector<int> count;
  // Whether class c of dimension 0 is an ideal vertex.
  std::vector<bool> ideal_vertex;
};
FaceClasses face_classes(const PairingComplex& x);

// Alternating count of identified faces, ideal vertices excluded.
long long euler_characteristic(const PairingComplex& x);

struct Orientation {
  bool orientable = true;
  std::vector<int> sign;       // +1 / -1 per cell
  std::vector<int> odd_cycle;  // cells of a closed walk with an odd number of gluings
};
Orientation orientability(const PairingComplex& x);

// Continuing from boundary slot s across ridge r of the cell type (a (dim-2)-face of s.facet).
// Cell types are right-angled, so the continuation is smooth exactly when one gluing is crossed.
struct BoundaryStep {
  FacetRef next;
  int gluings = 0;
  bool smooth() const { return gluings == 1; }
};
BoundaryStep boundary_step(const PairingComplex& x, FacetRef s, int ridge);

bool has_corners(const PairingComplex& x);

// Boundary slots grouped into smooth components (corners separate components).
std::vector<std::vector<FacetRef>> boundary_components(const PairingComplex& x);

// Boundary component as a complex of facet polytopes; cell i is component[i].
PairingComplex boundary_complex(const PairingComplex& x, const std::vector<FacetRef>& component);

std::vector<std::vector<int>> connected_components(const PairingComplex& x);

}  // namespace geobound
