#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "knotsig/matrix.hpp"

namespace knotsig {

/// Integer polynomial in one variable, dense, ascending powers.
///
/// `low_exponent2` is twice the exponent carried by the first stored
/// coefficient, so symmetrized Alexander polynomials of links with an even
/// number of components (half-integer exponents) fit the same type. All
/// arithmetic below requires `low_exponent2 == 0`.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> ascending, int low_exponent2 = 0);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, int degree);

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  int low_exponent2() const { return low2_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Highest stored index; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& leading() const { return coeffs_.back(); }
  mpz_class coefficient(int k) const;

  mpz_class evaluate(const mpz_class& t) const;
  IntPolynomial derivative() const;

  /// Strips powers of the variable dividing the polynomial, returning how many.
  int strip_variable_powers();

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& s, const IntPolynomial& a);

  /// Human-readable form, e.g. "t^2 - t + 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
  int low2_ = 0;
};

/// Exact quotient a / b. Throws InternalError if b does not divide a in Z[t].
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Remainder of a modulo a monic polynomial.
IntPolynomial remainder_monic(const IntPolynomial& a, const IntPolynomial& monic);

/// True when b divides a in Q[t] (b primitive or not).
bool divides(const IntPolynomial& b, const IntPolynomial& a);

/// The m-th cyclotomic polynomial.
const IntPolynomial& cyclotomic_polynomial(int m);

/// Euler's totient.
int totient(int m);

/// det(M0 + t*M1) over Z[t], fraction-free elimination.
IntPolynomial pencil_determinant(const IntMatrix& m0, const IntMatrix& m1);

/// Integer determinant (Bareiss).
mpz_class determinant(const IntMatrix& m);

/// Rational polynomial, dense ascending. Used for Sturm sequences and
/// extended Euclid in number fields.
struct QPolynomial {
  std::vector<mpq_class> c;

  QPolynomial() = default;
  explicit QPolynomial(std::vector<mpq_class> ascending) : c(std::move(ascending)) { trim(); }
  static QPolynomial from(const IntPolynomial& p);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void trim();
  mpq_class evaluate(const mpq_class& x) const;
  QPolynomial derivative() const;
};

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
void divmod(const QPolynomial& a, const QPolynomial& b, QPolynomial& q, QPolynomial& r);
QPolynomial gcd(QPolynomial a, QPolynomial b);

}  // namespace knotsig
