#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "knotsig/cyclotomic.hpp"
#include "knotsig/matrix.hpp"
#include "knotsig/polynomial.hpp"

namespace knotsig {

/// Inertia of a symmetric or Hermitian form.
struct SignatureTriple {
  int positive = 0;
  int negative = 0;
  int nullity = 0;

  int signature() const { return positive - negative; }
  int dimension() const { return positive + negative + nullity; }
  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

/// Exact inertia of a symmetric integer matrix by rational congruence
/// (symmetric pivoting; e_i + e_j pivots when the diagonal vanishes).
SignatureTriple signature_symmetric(const IntMatrix& m);
SignatureTriple signature_symmetric(const Matrix<mpq_class>& m);

enum class LtMode {
  kAuto,      ///< exact for field degree <= kMaxExactDegree, interval otherwise
  kExact,     ///< cyclotomic field arithmetic
  kInterval,  ///< certified complex ball elimination
};

inline constexpr int kMaxExactDegree = 64;

/// The Hermitian matrix M_omega = (1 - omega) A + (1 - conj omega) A^T over
/// Q(omega), without any sign convention applied.
Matrix<CyclotomicField::Element> hermitian_seifert_form(const IntMatrix& a, const CyclotomicField& field);

/// Levine-Tristram inertia at omega, reported in the convention where
/// positive links have positive signature: the inertia is that of -M_omega
/// for a Seifert matrix A built with right-handed bands giving -1 framings.
/// This is the only place where that sign convention is applied.
SignatureTriple levine_tristram(const IntMatrix& a, const UnitCirclePoint& omega, LtMode mode = LtMode::kAuto);

/// Inertia of a Hermitian matrix over a cyclotomic field (no convention).
SignatureTriple hermitian_inertia(Matrix<CyclotomicField::Element> h, const CyclotomicField& field);

/// Determinant of a square matrix over a cyclotomic field.
CyclotomicField::Element field_determinant(Matrix<CyclotomicField::Element> m, const CyclotomicField& field);

/// Checks det(M_omega) == (-(1 - conj omega))^dim * delta(omega) exactly,
/// where delta must be the raw determinant polynomial det(t A - A^T).
bool det_relation_check(const IntMatrix& a, const UnitCirclePoint& omega, const IntPolynomial& delta);

/// A unit-circle root of the Alexander polynomial, as an angle (units of pi)
/// in (0, 2). Roots of unity are exact (lower == upper); other roots are
/// isolated in a closed rational interval containing no other root.
struct JumpPoint {
  mpq_class lower;
  mpq_class upper;
  int multiplicity = 1;

  bool exact() const { return lower == upper; }
  UnitCirclePoint point() const;  ///< requires exact()
  std::string to_string() const;
};

/// Unit-circle roots of det(A - t A^T), excluding t = 1, sorted by angle.
/// Throws PreconditionError if that polynomial vanishes identically.
std::vector<JumpPoint> jump_points(const IntMatrix& a);
std::vector<JumpPoint> unit_circle_roots(const IntPolynomial& p);

}  // namespace knotsig
