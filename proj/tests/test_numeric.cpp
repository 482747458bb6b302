#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "knotsig/cyclotomic.hpp"
#include "knotsig/error.hpp"
#include "knotsig/polynomial.hpp"

using namespace knotsig;

TEST_CASE("cyclotomic polynomials match their known coefficients") {
  CHECK(cyclotomic_polynomial(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic_polynomial(2) == IntPolynomial{1, 1});
  CHECK(cyclotomic_polynomial(6) == IntPolynomial{1, -1, 1});
  CHECK(cyclotomic_polynomial(10) == IntPolynomial{1, -1, 1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == IntPolynomial{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient -2.
  bool has_minus_two = false;
  for (const auto& c : cyclotomic_polynomial(105).coefficients()) has_minus_two |= c == -2;
  CHECK(has_minus_two);
  CHECK(cyclotomic_polynomial(105).degree() == totient(105));
}

TEST_CASE("polynomial arithmetic and exact division") {
  IntPolynomial a{1, -1, 1};  // t^2 - t + 1
  IntPolynomial b{1, 1};
  IntPolynomial prod = a * b;
  CHECK(prod == IntPolynomial{1, 0, 0, 1});
  CHECK(divide_exact(prod, b) == a);
  CHECK_THROWS_AS(divide_exact(a, IntPolynomial{2, 1}), InternalError);
  CHECK(a.to_string() == "t^2 - t + 1");
  CHECK(a.evaluate(2) == 3);
  CHECK(remainder_monic(prod, a).is_zero());
}

TEST_CASE("pencil determinant agrees with pointwise integer determinants") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix m0(n, n), m1(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m0(i, j) = d(rng);
        m1(i, j) = d(rng);
      }
    IntPolynomial p = pencil_determinant(m0, m1);
    for (long t = -3; t <= 3; ++t) {
      IntMatrix mt(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mt(i, j) = m0(i, j) + t * m1(i, j);
      CHECK(p.evaluate(t) == determinant(mt));
    }
  }
}

TEST_CASE("unit circle points parse and normalize") {
  auto w = UnitCirclePoint::parse("piAngle:7/3");
  CHECK(w.angle() == mpq_class(1, 3));
  CHECK(w.order() == 6);
  CHECK(UnitCirclePoint::parse("piAngle:1").order() == 2);
  CHECK(UnitCirclePoint::parse("piAngle:-1/2").angle() == mpq_class(3, 2));
  CHECK(w.conjugate().angle() == mpq_class(5, 3));
  CHECK(w.to_string() == "piAngle:1/3");
  CHECK_THROWS_AS(UnitCirclePoint::parse("1/3"), ParseError);
  CHECK_THROWS_AS(UnitCirclePoint::parse("piAngle:1/0"), ParseError);
  CHECK_THROWS_AS(UnitCirclePoint::parse("piAngle:a/3"), ParseError);
}

TEST_CASE("cyclotomic field arithmetic agrees with complex floating point") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (auto [p, q] : std::vector<std::pair<long, long>>{{1, 3}, {1, 4}, {2, 5}, {3, 7}, {5, 12}, {1, 1}, {7, 15}}) {
    CyclotomicField f(UnitCirclePoint(p, q));
    auto random_element = [&] {
      auto e = f.zero();
      for (auto& x : e) x = d(rng);
      return e;
    };
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_element(), b = random_element();
      CHECK(std::abs(f.approx(f.mul(a, b)) - f.approx(a) * f.approx(b)) < 1e-9);
      CHECK(std::abs(f.approx(f.conj(a)) - std::conj(f.approx(a))) < 1e-9);
      if (!CyclotomicField::is_zero(a)) CHECK(f.mul(a, f.inverse(a)) == f.from_integer(1));
      auto r = f.add(a, f.conj(a));
      CHECK(f.is_real(r));
      const double approx = f.approx(r).real();
      if (std::abs(approx) > 1e-9) CHECK(f.real_sign(r) == (approx > 0 ? 1 : -1));
    }
  }
}

TEST_CASE("real_sign certifies tiny but nonzero values") {
  // 2cos(pi/7) is a root of y^3 - y^2 - 2y + 1; perturbing a near-root
  // combination keeps it nonzero but small.
  CyclotomicField f(UnitCirclePoint(1, 7));
  auto y = f.add(f.power(1), f.power(-1));
  auto y2 = f.mul(y, y);
  auto y3 = f.mul(y2, y);
  auto p = f.add(f.sub(f.sub(y3, y2), f.scale(y, 2)), f.from_integer(1));
  CHECK(CyclotomicField::is_zero(p));
  CHECK(f.real_sign(p) == 0);
  auto tiny = f.sub(y, f.from_rational(mpq_class(1801937736, 1000000000)));  // 2cos(pi/7) ~ 1.80193773580
  CHECK(f.real_sign(tiny) == -1);
}
