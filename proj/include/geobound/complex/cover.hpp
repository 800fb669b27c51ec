#pragma once

#include <gmpxx.h>

#include <vector>

#include "geobound/complex/coloring.hpp"

namespace geobound {

// The colouring quotient of a complex kept implicit: cells are (base cell, eps in {0,1}^k) and
// never enumerated, so k may be large.
class ColorCover {
 public:
  ColorCover(PairingComplex base, Coloring c);

  const PairingComplex& base() const { return base_; }
  const Coloring& coloring() const { return coloring_; }
  int colors() const { return coloring_.colors; }
  mpz_class copies() const;
  mpz_class cells() const;
  mpz_class euler_characteristic() const;
  bool orientable() const;
  bool has_corners() const;

  // Uncoloured boundary slots of the base grouped by smooth continuation in the cover. The
  // class lifts to 2^(k - rank) components, rank being that of the colour shifts along its cycles.
  struct BoundaryClass {
    std::vector<FacetRef> slots;
    int shift_rank = 0;
    mpz_class lifts;
  };
  std::vector<BoundaryClass> boundary_classes() const;
  mpz_class boundary_component_count() const;

  PairingComplex materialize() const;

 private:
  struct Step {
    FacetRef next;
    int gluings = 0;
    std::vector<int> shifts;  // colours crossed
  };
  Step step(FacetRef s, int ridge) const;

  PairingComplex base_;
  Coloring coloring_;
};

}  // namespace geobound
