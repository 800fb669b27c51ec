#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "geobound/errors.hpp"
#include "geobound/kernel/exact_scalar.hpp"
#include "geobound/kernel/lobachevsky.hpp"
#include "geobound/kernel/matrix.hpp"

using namespace geobound;
using std::numbers::pi;

namespace {

ExactScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  return ExactScalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)),
                     mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

// Independent oracle: -int_0^theta log|2 sin t| dt by tanh-sinh quadrature.
double lobachevsky_quadrature(double theta) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  if (theta == 0) return 0;
  auto f = [](double t) { return -std::log(std::fabs(2 * std::sin(t))); };
  return integrator.integrate(f, 0.0, theta);
}

}  // namespace

TEST_CASE("field identities hold exactly on random triples") {
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    ExactScalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    CHECK((x + y) * z == x * z + y * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == ExactScalar(1));
  }
}

TEST_CASE("exact sign agrees with floating value") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    ExactScalar x = random_scalar(rng);
    double v = x.to_double();
    if (std::fabs(v) > 1e-9) CHECK(x.sign() == (v > 0 ? 1 : -1));
  }
  // 3 - 2 sqrt2 is tiny but positive, 17 - 12 sqrt2 even smaller
  CHECK(ExactScalar(3, -2).sign() == 1);
  CHECK(ExactScalar(17, -12).sign() == 1);
  CHECK(ExactScalar(-17, 12).sign() == -1);
  CHECK((ExactScalar::sqrt2() * ExactScalar::sqrt3()) == ExactScalar::sqrt6());
}

TEST_CASE("cos(pi/m) table") {
  CHECK(ExactScalar::cos_pi_over(2).is_zero());
  CHECK(ExactScalar::cos_pi_over(3) == ExactScalar::rational(1, 2));
  auto c4 = ExactScalar::cos_pi_over(4);
  CHECK(c4 * c4 == ExactScalar::rational(1, 2));
  auto c6 = ExactScalar::cos_pi_over(6);
  CHECK(c6 * c6 == ExactScalar::rational(3, 4));
  CHECK_THROWS_AS(ExactScalar::cos_pi_over(5), UnsupportedField);
}

TEST_CASE("exact square roots") {
  CHECK(*ExactScalar::rational(1, 4).sqrt() == ExactScalar::rational(1, 2));
  CHECK(*ExactScalar::rational(1, 2).sqrt() == ExactScalar(0, mpq_class(1, 2)));
  CHECK(*ExactScalar::rational(3, 4).sqrt() == ExactScalar(0, 0, mpq_class(1, 2)));
  CHECK(!ExactScalar::rational(5, 1).sqrt());
}

TEST_CASE("signature examples") {
  CHECK(signature(Eigen::MatrixXd::Identity(4, 4)) == Signature{4, 0, 0});
  Eigen::MatrixXd a1(2, 2);
  a1 << 1, -1, -1, 1;
  CHECK(signature(a1) == Signature{1, 0, 1});
  Eigen::MatrixXd asym(2, 2);
  asym << 1, 0.5, 0, 1;
  CHECK_THROWS_AS(signature(asym), ContractViolation);
  CHECK_THROWS_AS(signature(a1, 0.0), ContractViolation);
}

TEST_CASE("signature invariant under simultaneous permutation") {
  std::mt19937 rng(3);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 50; ++t) {
    int n = 2 + t % 6;
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m(i, j) = m(j, i) = nd(rng);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    Eigen::MatrixXd q(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q(i, j) = m(p[i], p[j]);
    CHECK(signature(m) == signature(q));
  }
}

TEST_CASE("Sylvester test examples and agreement with signature") {
  SymMatrix one(1);
  one.set(0, 0, ExactScalar(1));
  CHECK(is_positive_definite(one));
  SymMatrix inf(2);
  inf.set(0, 0, ExactScalar(1));
  inf.set(1, 1, ExactScalar(1));
  inf.set(0, 1, ExactScalar(-1));
  CHECK(!is_positive_definite(inf));
  auto si = semidefinite_info(inf);
  CHECK(si.psd);
  CHECK(si.rank == 1);

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coin(0, 3);
  int agreements = 0;
  for (int t = 0; t < 200; ++t) {
    int n = 2 + t % 4;
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
      m.set(i, i, ExactScalar(1));
      for (int j = i + 1; j < n; ++j) {
        static const int labels[] = {2, 3, 4, 6};
        m.set(i, j, -ExactScalar::cos_pi_over(labels[coin(rng)]));
      }
    }
    Signature s = signature(m, 1e-12);
    bool pd = is_positive_definite(m);
    CHECK(pd == (s == Signature{n, 0, 0}));
    agreements += pd;
    // Sylvester: all leading minors positive
    auto minors = leading_minors(m);
    bool all_pos = std::all_of(minors.begin(), minors.end(), [](auto& x) { return x.sign() > 0; });
    CHECK(all_pos == pd);
  }
  CHECK(agreements > 0);
}

TEST_CASE("Lobachevsky function") {
  CHECK(lobachevsky(0) == 0);
  CHECK(std::fabs(lobachevsky(pi / 2)) < 1e-12);
  CHECK_THROWS_AS(lobachevsky(1.0, 0.0), ContractViolation);
  double voct = 8 * lobachevsky(pi / 4);
  CHECK(std::fabs(voct - 3.66386237670887) < 1e-11);
  CHECK(std::fabs(voct - 8 * lobachevsky_quadrature(pi / 4)) < 1e-9);
  CHECK(std::fabs(ideal_octahedron_volume() - voct) < 1e-15);
  for (int i = 1; i <= 20; ++i) {
    double t = i * pi / 21;
    CHECK(std::fabs(lobachevsky(t) - lobachevsky_quadrature(t)) < 1e-10);
    CHECK(std::fabs(lobachevsky(-t) + lobachevsky(t)) < 1e-14);
    CHECK(std::fabs(lobachevsky(t + pi) - lobachevsky(t)) < 1e-12);
  }
  // Duplication identity on a grid of 100 points.
  for (int i = 0; i < 100; ++i) {
    double t = -1.5 + 3.0 * i / 99;
    double lhs = lobachevsky(2 * t), rhs = 2 * lobachevsky(t) + 2 * lobachevsky(t + pi / 2);
    CHECK(std::fabs(lhs - rhs) < 10 * kLobachevskyTol);
  }
}

TEST_CASE("Lobachevsky matches the Fourier series") {
  // Direct partial sums converge like 1/N; at N = 200000 the error is below 1e-5.
  for (double t : {0.3, 0.9, 1.4}) {
    double s = 0;
    for (int n = 1; n <= 200000; ++n) s += std::sin(2 * n * t) / (double(n) * n);
    CHECK(std::fabs(0.5 * s - lobachevsky(t)) < 1e-5);
  }
}
