#include "geobound/kernel/lobachevsky.hpp"

#include <cmath>
#include <numbers>

#include "geobound/errors.hpp"

namespace geobound {

namespace {

// Clausen function Cl2(x) for |x| <= pi from its Bernoulli-type expansion
//   Cl2(x) = x - x log|x| + sum_k zeta(2k) x^(2k+1) / (k (2k+1) (2 pi)^(2k)).
// Each term is at most 2 pi 4^-k / (k(2k+1)), so the tail after k is below 4/3 of the next term.
double clausen2(double x, double tol) {
  using std::numbers::pi;
  if (x == 0.0) return 0.0;
  double ax = std::fabs(x);
  double sum = x - x * std::log(ax);
  double ratio = (x / (2 * pi)) * (x / (2 * pi));
  double power = x;
  for (int k = 1; k < 200; ++k) {
    power *= ratio;
    sum += std::riemann_zeta(2.0 * k) * power / (k * (2.0 * k + 1));
    double next = 2 * pi * std::pow(0.25, k + 1) / ((k + 1) * (2.0 * k + 3));
    if (next * 4.0 / 3.0 < tol) break;
  }
  return sum;
}

}  // namespace

double lobachevsky(double theta, double tol) {
  using std::numbers::pi;
  require(tol > 0, "lobachevsky: tol must be positive");
  double t = std::remainder(theta, pi);  // in [-pi/2, pi/2]
  return 0.5 * clausen2(2 * t, 2 * tol);
}

double ideal_octahedron_volume() { return 8.0 * lobachevsky(std::numbers::pi / 4); }

}  // namespace geobound
