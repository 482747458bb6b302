#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "knotsig/polynomial.hpp"

namespace knotsig {

/// A point omega = exp(i*pi*angle) on the unit circle with rational angle in
/// [0, 2), stored in lowest terms. Serialized as "piAngle:p/q".
class UnitCirclePoint {
 public:
  UnitCirclePoint() = default;  // omega = 1
  UnitCirclePoint(long numerator, long denominator);
  explicit UnitCirclePoint(const mpq_class& angle);

  static UnitCirclePoint parse(const std::string& text);
  /// Exact dyadic value of a double angle (units of pi).
  static UnitCirclePoint from_double(double angle);

  const mpq_class& angle() const { return angle_; }
  bool is_one() const { return angle_ == 0; }
  UnitCirclePoint conjugate() const;
  /// Multiplicative order of omega (2q / gcd(p, 2q)).
  long order() const;
  std::complex<double> approx() const;
  std::string to_string() const;

  friend bool operator==(const UnitCirclePoint& a, const UnitCirclePoint& b) { return a.angle_ == b.angle_; }
  friend bool operator<(const UnitCirclePoint& a, const UnitCirclePoint& b) { return a.angle_ < b.angle_; }

 private:
  mpq_class angle_ = 0;
};

/// The cyclotomic field Q(omega), elements stored as rational coordinates in
/// the power basis 1, omega, ..., omega^(phi(m)-1), reduced modulo Phi_m.
class CyclotomicField {
 public:
  using Element = std::vector<mpq_class>;

  explicit CyclotomicField(const UnitCirclePoint& omega);

  const UnitCirclePoint& point() const { return omega_; }
  int degree() const { return degree_; }
  long order() const { return order_; }
  const IntPolynomial& modulus() const { return cyclotomic_polynomial(static_cast<int>(order_)); }

  Element zero() const { return Element(static_cast<std::size_t>(degree_)); }
  Element from_integer(const mpz_class& k) const;
  Element from_rational(const mpq_class& k) const;
  /// omega^j for any integer j.
  Element power(long j) const;
  /// p(omega) for an integer polynomial p (low_exponent2 ignored).
  Element evaluate(const IntPolynomial& p) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, const mpq_class& s) const;
  Element conj(const Element& a) const;
  Element inverse(const Element& a) const;

  static bool is_zero(const Element& a);
  bool is_real(const Element& a) const { return conj(a) == a; }

  /// Certified sign of a real element: -1, 0 or +1. Zero is decided exactly;
  /// otherwise MPFR evaluation with a rigorous error bound, doubling the
  /// precision until the bound separates the value from zero.
  int real_sign(const Element& a) const;

  std::complex<double> approx(const Element& a) const;

 private:
  Element reduce(const std::vector<mpq_class>& poly) const;

  UnitCirclePoint omega_;
  long order_ = 1;
  int degree_ = 1;
  // Powers omega^j reduced mod Phi_m, for 0 <= j < table size.
  std::vector<std::vector<mpz_class>> power_table_;
};

}  // namespace knotsig
