#include "knotsig/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "knotsig/error.hpp"
#include "mpfr_util.hpp"

namespace knotsig {

namespace {

mpq_class normalize_angle(mpq_class a) {
  a.canonicalize();
  // Reduce into [0, 2).
  mpz_class two_den = 2 * a.get_den();
  mpz_class num = a.get_num() % two_den;
  if (num < 0) num += two_den;
  mpq_class r(num, a.get_den());
  r.canonicalize();
  return r;
}

constexpr mpfr_prec_t kStartPrecision = 64;
constexpr mpfr_prec_t kMaxPrecision = 1 << 15;

}  // namespace

UnitCirclePoint::UnitCirclePoint(long numerator, long denominator) {
  if (denominator == 0) throw ParseError("angle denominator is zero");
  angle_ = normalize_angle(mpq_class(numerator, denominator));
}

UnitCirclePoint::UnitCirclePoint(const mpq_class& angle) : angle_(normalize_angle(angle)) {}

UnitCirclePoint UnitCirclePoint::parse(const std::string& text) {
  static const std::string prefix = "piAngle:";
  if (text.rfind(prefix, 0) != 0) throw ParseError("angle must look like piAngle:p/q, got '" + text + "'");
  std::string body = text.substr(prefix.size());
  auto slash = body.find('/');
  try {
    std::size_t used = 0;
    long p = std::stol(body.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? body.size() : slash)) throw ParseError("");
    long q = 1;
    if (slash != std::string::npos) {
      std::string den = body.substr(slash + 1);
      q = std::stol(den, &used);
      if (used != den.size()) throw ParseError("");
    }
    if (q <= 0) throw ParseError("");
    return UnitCirclePoint(p, q);
  } catch (const std::exception&) {
    throw ParseError("angle must look like piAngle:p/q, got '" + text + "'");
  }
}

UnitCirclePoint UnitCirclePoint::from_double(double angle) {
  if (!std::isfinite(angle)) throw ParseError("non-finite angle");
  mpq_class q(angle);  // exact binary value
  return UnitCirclePoint(q);
}

UnitCirclePoint UnitCirclePoint::conjugate() const {
  if (angle_ == 0) return *this;
  return UnitCirclePoint(mpq_class(2) - angle_);
}

long UnitCirclePoint::order() const {
  mpz_class p = angle_.get_num();
  mpz_class two_q = 2 * angle_.get_den();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), two_q.get_mpz_t());
  mpz_class m = two_q / g;
  if (!m.fits_slong_p()) throw PreconditionError("angle denominator too large");
  return m.get_si();
}

std::complex<double> UnitCirclePoint::approx() const {
  double a = std::numbers::pi * angle_.get_d();
  return {std::cos(a), std::sin(a)};
}

std::string UnitCirclePoint::to_string() const {
  return "piAngle:" + angle_.get_num().get_str() + "/" + angle_.get_den().get_str();
}

CyclotomicField::CyclotomicField(const UnitCirclePoint& omega) : omega_(omega) {
  order_ = omega.order();
  if (order_ > 1 << 20) throw PreconditionError("cyclotomic order too large for exact arithmetic");
  degree_ = totient(static_cast<int>(order_));
  const IntPolynomial& phi = modulus();
  const std::size_t table = static_cast<std::size_t>(std::max<long>(2 * degree_, order_ + 1));
  power_table_.resize(table);
  std::vector<mpz_class> cur(static_cast<std::size_t>(degree_));
  cur[0] = 1;
  for (std::size_t j = 0; j < table; ++j) {
    power_table_[j] = cur;
    // multiply by omega: shift, then fold the overflow with Phi_m (monic).
    mpz_class top = cur.back();
    for (std::size_t k = cur.size() - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t k = 0; k < cur.size(); ++k) cur[k] -= top * phi.coefficients()[k];
    }
  }
}

CyclotomicField::Element CyclotomicField::reduce(const std::vector<mpq_class>& poly) const {
  Element r = zero();
  for (std::size_t j = 0; j < poly.size(); ++j) {
    if (poly[j] == 0) continue;
    if (j < static_cast<std::size_t>(degree_)) {
      r[j] += poly[j];
      continue;
    }
    const auto& row = power_table_.at(j);
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] != 0) r[k] += poly[j] * row[k];
  }
  return r;
}

CyclotomicField::Element CyclotomicField::from_integer(const mpz_class& k) const {
  Element e = zero();
  e[0] = k;
  return e;
}

CyclotomicField::Element CyclotomicField::from_rational(const mpq_class& k) const {
  Element e = zero();
  e[0] = k;
  return e;
}

CyclotomicField::Element CyclotomicField::power(long j) const {
  long r = j % order_;
  if (r < 0) r += order_;
  Element e = zero();
  const auto& row = power_table_.at(static_cast<std::size_t>(r));
  for (std::size_t k = 0; k < row.size(); ++k) e[k] = row[k];
  return e;
}

CyclotomicField::Element CyclotomicField::evaluate(const IntPolynomial& p) const {
  Element acc = zero();
  const auto& c = p.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    acc = add(acc, scale(power(static_cast<long>(j)), mpq_class(c[j])));
  }
  return acc;
}

CyclotomicField::Element CyclotomicField::add(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

CyclotomicField::Element CyclotomicField::sub(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

CyclotomicField::Element CyclotomicField::neg(const Element& a) const {
  Element r = a;
  for (auto& x : r) x = -x;
  return r;
}

CyclotomicField::Element CyclotomicField::scale(const Element& a, const mpq_class& s) const {
  Element r = a;
  for (auto& x : r) x *= s;
  return r;
}

CyclotomicField::Element CyclotomicField::mul(const Element& a, const Element& b) const {
  std::vector<mpq_class> prod(2 * a.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  return reduce(prod);
}

CyclotomicField::Element CyclotomicField::conj(const Element& a) const {
  // omega^k -> omega^(m-k)
  std::vector<mpq_class> poly(static_cast<std::size_t>(order_) + 1);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    std::size_t e = k == 0 ? 0 : static_cast<std::size_t>(order_) - k;
    poly[e] += a[k];
  }
  return reduce(poly);
}

bool CyclotomicField::is_zero(const Element& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

CyclotomicField::Element CyclotomicField::inverse(const Element& a) const {
  if (is_zero(a)) throw InternalError("inverse of zero in cyclotomic field");
  // Extended Euclid in Q[t]: s*a + u*Phi = 1.
  QPolynomial r0 = QPolynomial::from(modulus());
  QPolynomial r1(std::vector<mpq_class>(a.begin(), a.end()));
  QPolynomial s0, s1(std::vector<mpq_class>{1});
  while (!r1.is_zero()) {
    QPolynomial q, r;
    divmod(r0, r1, q, r);
    QPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw InternalError("cyclotomic modulus not irreducible?");
  const mpq_class c = r0.c[0];
  std::vector<mpq_class> inv = s0.c;
  for (auto& x : inv) x /= c;
  return reduce(inv);
}

int CyclotomicField::real_sign(const Element& a) const {
  if (is_zero(a)) return 0;
  if (!is_real(a)) throw InternalError("real_sign called on a non-real element");
  mpq_class l1 = 0;
  for (const auto& c : a) l1 += abs(c);
  const mpz_class p = omega_.angle().get_num();
  const mpz_class q = omega_.angle().get_den();
  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    detail::BigFloat pi(prec), theta(prec), cosv(prec), term(prec), coeff(prec), sum(prec), bound(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == 0) continue;
      // theta = pi * ((p k) mod 2q) / q
      mpz_class r = (p * static_cast<long>(k)) % (2 * q);
      mpq_class frac(r, q);
      frac.canonicalize();
      mpfr_mul_q(theta.get(), pi.get(), frac.get_mpq_t(), MPFR_RNDN);
      mpfr_cos(cosv.get(), theta.get(), MPFR_RNDN);
      mpfr_set_q(coeff.get(), a[k].get_mpq_t(), MPFR_RNDN);
      mpfr_mul(term.get(), coeff.get(), cosv.get(), MPFR_RNDN);
      mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    // |error| <= (32 + 2*degree) * ||a||_1 * 2^-prec
    mpfr_set_q(bound.get(), l1.get_mpq_t(), MPFR_RNDU);
    mpfr_mul_ui(bound.get(), bound.get(), static_cast<unsigned long>(32 + 2 * degree_), MPFR_RNDU);
    mpfr_div_2ui(bound.get(), bound.get(), static_cast<unsigned long>(prec), MPFR_RNDU);
    detail::BigFloat mag(prec);
    mpfr_abs(mag.get(), sum.get(), MPFR_RNDN);
    if (mpfr_cmp(mag.get(), bound.get()) > 0) return mpfr_sgn(sum.get()) > 0 ? 1 : -1;
  }
  throw CertificationError("could not certify the sign of a nonzero field element");
}

std::complex<double> CyclotomicField::approx(const Element& a) const {
  std::complex<double> acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double ang = std::numbers::pi * mpq_class(omega_.angle() * static_cast<long>(k)).get_d();
    acc += a[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

}  // namespace knotsig
