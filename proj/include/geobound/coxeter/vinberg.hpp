#pragma once

#include <string>
#include <vector>

#include "geobound/coxeter/diagram.hpp"

namespace geobound {

struct VertexVerdict {
  enum class Kind { finite, ideal, none };
  Kind kind = Kind::none;
  std::vector<int> witness;  // subset tested; for ideal, all nodes through the ideal point
};

const char* to_string(VertexVerdict::Kind k);

VertexVerdict vertex_type(const CoxeterDiagram& d, const std::vector<int>& subset, int n);

// Vertices of the polytope of a hyperbolic diagram: finite ones are the spherical n-subsets,
// ideal ones the maximal parabolic subsets of rank n-1.
struct DiagramVertex {
  std::vector<int> nodes;
  bool ideal = false;
};
std::vector<DiagramVertex> diagram_vertices(const CoxeterDiagram& d, int n);

// Facet diagram by projecting normals into the facet hyperplane.
CoxeterDiagram restrict_to_facet(const CoxeterDiagram& d, int facet);

struct ArithmeticityResult {
  enum class Verdict { arithmetic, non_arithmetic, undecidable };
  Verdict verdict = Verdict::undecidable;
  std::vector<int> cycle;  // certificate for non-arithmetic
  ExactScalar product;     // cyclic product of 2G along the certificate
  std::string reason;
};
const char* to_string(ArithmeticityResult::Verdict v);

ArithmeticityResult arithmeticity(const CoxeterDiagram& d);

struct ConstraintCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};
struct ConstraintReport {
  std::vector<ConstraintCheck> checks;
  bool all_passed() const;
};

// Structural constraints pinning the six-node pyramid diagram on nodes A..F.
ConstraintReport validate_q4_constraints(const CoxeterDiagram& d);

}  // namespace geobound
