#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace geobound {

// Element a + b√2 + c√3 + d√6 of the field Q(√2,√3), rational coefficients.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : a_(v) {}  // NOLINT: integers promote implicitly
  explicit ExactScalar(mpq_class a, mpq_class b = 0, mpq_class c = 0, mpq_class d = 0);

  static ExactScalar sqrt2() { return ExactScalar(0, 1); }
  static ExactScalar sqrt3() { return ExactScalar(0, 0, 1); }
  static ExactScalar sqrt6() { return ExactScalar(0, 0, 0, 1); }
  static ExactScalar rational(long num, long den) { return ExactScalar(mpq_class(num, den)); }

  // cos(pi/m) for m in {2,3,4,6}; throws UnsupportedField otherwise.
  static ExactScalar cos_pi_over(int m);

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  const mpq_class& c() const { return c_; }
  const mpq_class& d() const { return d_; }

  bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_zero() const { return is_rational() && sgn(a_) == 0; }
  // Exact sign: -1, 0 or +1.
  int sign() const;
  double to_double() const;

  ExactScalar inverse() const;
  // Square root of a rational q when q/k is a rational square for k in {1,2,3,6}.
  std::optional<ExactScalar> sqrt() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
  ExactScalar operator-() const { return ExactScalar(-a_, -b_, -c_, -d_); }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }
  friend bool operator<(const ExactScalar& x, const ExactScalar& y) { return (x - y).sign() < 0; }

  std::string str() const;

 private:
  mpq_class a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

}  // namespace geobound
