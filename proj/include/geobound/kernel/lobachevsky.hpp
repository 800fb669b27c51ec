#pragma once

namespace geobound {

constexpr double kLobachevskyTol = 1e-12;

// Lobachevsky function: L(t) = -int_0^t log|2 sin s| ds = (1/2) sum sin(2nt)/n^2.
// Odd and pi-periodic; accurate to tol. Throws ContractViolation when tol <= 0.
double lobachevsky(double theta, double tol = kLobachevskyTol);

// Volume of the regular ideal right-angled octahedron, 8 L(pi/4).
double ideal_octahedron_volume();

}  // namespace geobound
