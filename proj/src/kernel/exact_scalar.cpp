#include "geobound/kernel/exact_scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "geobound/errors.hpp"

namespace geobound {

namespace {

// Sign of s + t√2.
int sign_q2(const mpq_class& s, const mpq_class& t) {
  int ss = sgn(s), st = sgn(t);
  if (st == 0) return ss;
  if (ss == 0 || ss == st) return ss == 0 ? st : ss;
  mpq_class diff = s * s - 2 * t * t;
  return ss * sgn(diff);
}

bool rational_sqrt(const mpq_class& q, mpq_class& out) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = mpq_class(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace

ExactScalar::ExactScalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  d_.canonicalize();
}

ExactScalar ExactScalar::cos_pi_over(int m) {
  switch (m) {
    case 2: return ExactScalar(0);
    case 3: return ExactScalar(mpq_class(1, 2));
    case 4: return ExactScalar(0, mpq_class(1, 2));
    case 6: return ExactScalar(0, 0, mpq_class(1, 2));
    default:
      throw UnsupportedField("cos(pi/" + std::to_string(m) + ") is outside Q(sqrt2,sqrt3)");
  }
}

int ExactScalar::sign() const {
  // Write x = p + q√3 with p = a + b√2, q = c + d√2.
  int sp = sign_q2(a_, b_), sq = sign_q2(c_, d_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sp == 0 ? sq : sp;
  // p^2 - 3q^2 in Q(√2)
  mpq_class s = a_ * a_ + 2 * b_ * b_ - 3 * (c_ * c_ + 2 * d_ * d_);
  mpq_class t = 2 * a_ * b_ - 6 * c_ * d_;
  return sp * sign_q2(s, t);
}

double ExactScalar::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(2.0) + c_.get_d() * std::sqrt(3.0) +
         d_.get_d() * std::sqrt(6.0);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  const mpq_class &a = a_, &b = b_, &c = c_, &d = d_;
  const mpq_class &e = o.a_, &f = o.b_, &g = o.c_, &h = o.d_;
  mpq_class na = a * e + 2 * b * f + 3 * c * g + 6 * d * h;
  mpq_class nb = a * f + b * e + 3 * c * h + 3 * d * g;
  mpq_class nc = a * g + c * e + 2 * b * h + 2 * d * f;
  mpq_class nd = a * h + d * e + b * g + c * f;
  a_ = na;
  b_ = nb;
  c_ = nc;
  d_ = nd;
  return *this;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw ContractViolation("division by zero in Q(sqrt2,sqrt3)");
  // x = p + q√3; x (p - q√3) = p^2 - 3q^2 = s + t√2; times (s - t√2) gives a rational.
  ExactScalar conj3(a_, b_, -c_, -d_);
  ExactScalar r = *this * conj3;
  ExactScalar conj2(r.a_, -r.b_);
  mpq_class norm = r.a_ * r.a_ - 2 * r.b_ * r.b_;
  ExactScalar num = conj3 * conj2;
  return ExactScalar(num.a_ / norm, num.b_ / norm, num.c_ / norm, num.d_ / norm);
}

std::optional<ExactScalar> ExactScalar::sqrt() const {
  if (!is_rational()) return std::nullopt;
  mpq_class r;
  if (rational_sqrt(a_, r)) return ExactScalar(r);
  if (rational_sqrt(a_ / 2, r)) return ExactScalar(0, r);
  if (rational_sqrt(a_ / 3, r)) return ExactScalar(0, 0, r);
  if (rational_sqrt(a_ / 6, r)) return ExactScalar(0, 0, 0, r);
  return std::nullopt;
}

std::string ExactScalar::str() const {
  std::ostringstream os;
  bool any = false;
  auto term = [&](const mpq_class& q, const char* root) {
    if (sgn(q) == 0) return;
    if (any) os << (sgn(q) > 0 ? "+" : "-");
    else if (sgn(q) < 0) os << "-";
    mpq_class m = abs(q);
    if (*root == 0) os << m;
    else if (m == 1) os << root;
    else os << m << "*" << root;
    any = true;
  };
  term(a_, "");
  term(b_, "sqrt2");
  term(c_, "sqrt3");
  term(d_, "sqrt6");
  if (!any) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.str(); }

}  // namespace geobound
