#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "geobound/coxeter/diagram.hpp"
#include "geobound/geometry/polytope.hpp"

namespace geobound {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Minkowski product on R^{n,1}, time coordinate last.
double minkowski(const Vec& x, const Vec& y);

struct HyperplaneSystem {
  int n = 0;                // hyperbolic dimension; vectors live in R^{n+1}
  std::vector<Vec> normals; // unit space-like, outward
  Mat gram() const;
};

// Normals realizing g; requires at most one negative eigenvalue (NotHyperbolic otherwise).
// Zero eigenvalues are dropped, so n = number of positive eigenvalues.
HyperplaneSystem realize(const Eigen::MatrixXd& g, double tol = 1e-9);

Mat reflection(const Vec& e);

constexpr double kOrbitTol = 1e-7;
constexpr int kOrbitCap = 10000;

// All elements of the group generated by reflections in the listed normals.
std::vector<Mat> orbit_group(const HyperplaneSystem& s, const std::vector<int>& generators,
                             int cap = kOrbitCap);

// Polytope of a Coxeter diagram with geometry: facets are the diagram nodes.
struct RealizedPolytope {
  Polytope polytope;
  HyperplaneSystem system;            // one normal per facet
  std::vector<Vec> vertex_points;     // time-like unit (finite) or light-like with time 1 (ideal)
  std::vector<std::vector<int>> vertex_nodes;  // Coxeter polytopes: diagram nodes through the vertex
  std::vector<int> facet_node;        // orbit polytopes: seed node each facet came from
};

RealizedPolytope coxeter_polytope(const CoxeterDiagram& d, int n);

// Union of the images of seed under the group; mirrors are the generating nodes, whose
// images become interior walls.
RealizedPolytope assemble_orbit_polytope(const RealizedPolytope& seed, const std::vector<Mat>& group,
                                         const std::vector<int>& mirrors, double tol = kOrbitTol);

struct RightAngleReport {
  int adjacent_pairs = 0, tangent_pairs = 0, ultraparallel_pairs = 0, other_pairs = 0;
  double max_adjacent_product = 0;  // max |<e_i,e_j>| over adjacent facets
  double max_tangent_error = 0;     // max |<e_i,e_j> + 1| over tangent pairs
  std::vector<std::pair<int, int>> failures;
  bool passed() const { return failures.empty() && adjacent_pairs > 0; }
};
RightAngleReport verify_right_angled(const Polytope& p, const HyperplaneSystem& s, double tol = 1e-9);

RealizedPolytope builtin_polytope(const std::string& name);

}  // namespace geobound
