#include "knotsig/quadform.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "ball.hpp"
#include "knotsig/error.hpp"
#include "mpfr_util.hpp"

namespace knotsig {

namespace {

// Hermitian LDL* elimination over an exact scalar type. When every active
// diagonal entry vanishes, e_i is replaced by e_i + conj(h_ij) e_j, which has
// norm 2|h_ij|^2 because h_ii = h_jj = 0.
template <class Ops>
SignatureTriple exact_inertia(Matrix<typename Ops::T> h, const Ops& ops) {
  const std::size_t n = h.rows();
  std::vector<bool> active(n, true);
  std::size_t left = n;
  SignatureTriple out;
  while (left > 0) {
    std::optional<std::size_t> piv;
    for (std::size_t i = 0; i < n && !piv; ++i)
      if (active[i] && !ops.is_zero(h(i, i))) piv = i;
    if (!piv) {
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = 0; i < n && !off; ++i) {
        if (!active[i]) continue;
        for (std::size_t j = i + 1; j < n && !off; ++j)
          if (active[j] && !ops.is_zero(h(i, j))) off = std::pair{i, j};
      }
      if (!off) {
        out.nullity += static_cast<int>(left);
        break;
      }
      auto [i, j] = *off;
      const auto lambda = ops.conj(h(i, j));
      const auto lambda_bar = h(i, j);
      for (std::size_t a = 0; a < n; ++a)
        if (active[a]) h(a, i) = ops.add(h(a, i), ops.mul(lambda, h(a, j)));
      for (std::size_t b = 0; b < n; ++b)
        if (active[b]) h(i, b) = ops.add(h(i, b), ops.mul(lambda_bar, h(j, b)));
      piv = i;
    }
    const std::size_t p = *piv;
    const int s = ops.sign(h(p, p));
    if (s > 0) ++out.positive;
    else if (s < 0) ++out.negative;
    else throw InternalError("zero pivot selected");
    const auto dinv = ops.inv(h(p, p));
    active[p] = false;
    --left;
    for (std::size_t a = 0; a < n; ++a) {
      if (!active[a] || ops.is_zero(h(a, p))) continue;
      const auto f = ops.mul(h(a, p), dinv);
      for (std::size_t b = 0; b < n; ++b)
        if (active[b] && !ops.is_zero(h(p, b))) h(a, b) = ops.sub(h(a, b), ops.mul(f, h(p, b)));
    }
  }
  return out;
}

struct RationalOps {
  using T = mpq_class;
  static bool is_zero(const T& x) { return x == 0; }
  static T conj(const T& x) { return x; }
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T inv(const T& a) { return 1 / a; }
  static int sign(const T& a) { return sgn(a); }
};

struct FieldOps {
  using T = CyclotomicField::Element;
  const CyclotomicField& f;
  bool is_zero(const T& x) const { return CyclotomicField::is_zero(x); }
  T conj(const T& x) const { return f.conj(x); }
  T add(const T& a, const T& b) const { return f.add(a, b); }
  T sub(const T& a, const T& b) const { return f.sub(a, b); }
  T mul(const T& a, const T& b) const { return f.mul(a, b); }
  T inv(const T& a) const { return f.inverse(a); }
  int sign(const T& a) const { return f.real_sign(a); }
};

using detail::BigFloat;
using detail::ComplexBall;

ComplexBall ball_scaled(const ComplexBall& b, long k) {
  return ComplexBall::exact_real(k, b.precision()) * b;
}

// Certified elimination on complex balls. Returns nullopt when some step
// could not be certified at this precision.
std::optional<SignatureTriple> ball_inertia(Matrix<ComplexBall> h) {
  const std::size_t n = h.rows();
  std::vector<bool> active(n, true);
  std::size_t left = n;
  SignatureTriple out;
  auto margin = [](const ComplexBall& b) {
    BigFloat m(b.precision());
    mpfr_abs(m.get(), b.re().get(), MPFR_RNDD);
    mpfr_sub(m.get(), m.get(), b.rad().get(), MPFR_RNDD);
    return m;
  };
  while (left > 0) {
    for (std::size_t i = 0; i < n; ++i)
      if (active[i]) h(i, i).make_real();

    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || h(i, i).certified_real_sign() == 0) continue;
      if (!best || mpfr_cmp(margin(h(i, i)).get(), margin(h(*best, *best)).get()) > 0) best = i;
    }
    if (best) {
      const std::size_t p = *best;
      const int s = h(p, p).certified_real_sign();
      (s > 0 ? out.positive : out.negative) += 1;
      const ComplexBall dinv = h(p, p).real_inverse();
      active[p] = false;
      --left;
      for (std::size_t a = 0; a < n; ++a) {
        if (!active[a]) continue;
        const ComplexBall f = h(a, p) * dinv;
        for (std::size_t b = 0; b < n; ++b)
          if (active[b]) h(a, b) = h(a, b) - f * h(p, b);
      }
      continue;
    }

    // 2x2 block with certified negative determinant has inertia (1, 1).
    std::optional<std::pair<std::size_t, std::size_t>> block;
    std::optional<ComplexBall> block_det;
    for (std::size_t i = 0; i < n && !block; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n && !block; ++j) {
        if (!active[j]) continue;
        ComplexBall det = h(i, i) * h(j, j) - h(i, j) * h(j, i);
        det.make_real();
        if (det.certified_real_sign() < 0) {
          block = std::pair{i, j};
          block_det = det;
        }
      }
    }
    if (!block) return std::nullopt;
    auto [i, j] = *block;
    out.positive += 1;
    out.negative += 1;
    const ComplexBall dinv = block_det->real_inverse();
    const ComplexBall a = h(i, i), b = h(i, j), c = h(j, i), d = h(j, j);
    active[i] = active[j] = false;
    left -= 2;
    // B^-1 = det^-1 [[d, -b], [-c, a]]
    for (std::size_t r = 0; r < n; ++r) {
      if (!active[r]) continue;
      const ComplexBall u0 = (h(r, i) * d - h(r, j) * c) * dinv;
      const ComplexBall u1 = (h(r, j) * a - h(r, i) * b) * dinv;
      for (std::size_t s = 0; s < n; ++s)
        if (active[s]) h(r, s) = h(r, s) - (u0 * h(i, s) + u1 * h(j, s));
    }
  }
  return out;
}

SignatureTriple interval_levine_tristram(const IntMatrix& a, const UnitCirclePoint& omega) {
  const std::size_t n = a.rows();
  constexpr mpfr_prec_t kMaxBallPrecision = 1 << 14;
  for (mpfr_prec_t prec = 64; prec <= kMaxBallPrecision; prec *= 2) {
    ComplexBall w(prec);
    BigFloat theta(prec);
    mpfr_const_pi(theta.get(), MPFR_RNDN);
    mpfr_mul_q(theta.get(), theta.get(), omega.angle().get_mpq_t(), MPFR_RNDN);
    mpfr_sin_cos(w.im().get(), w.re().get(), theta.get(), MPFR_RNDN);
    // |theta| < 8 and cos, sin are 1-Lipschitz: 16 ulps is generous.
    mpfr_set_ui_2exp(w.rad().get(), 1, -(prec - 4), MPFR_RNDU);
    const ComplexBall wbar = w.conj();

    Matrix<ComplexBall> h(n, n, ComplexBall(prec));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // -[(1 - w) a_ij + (1 - wbar) a_ji]
        ComplexBall e = ComplexBall::exact_real(-(a(i, j) + a(j, i)), prec);
        e = e + ball_scaled(w, a(i, j)) + ball_scaled(wbar, a(j, i));
        h(i, j) = e;
      }
    }
    if (auto r = ball_inertia(std::move(h))) return *r;
  }
  throw CertificationError("interval Levine-Tristram signature could not be certified at " + omega.to_string());
}

}  // namespace

SignatureTriple signature_symmetric(const Matrix<mpq_class>& m) {
  if (!m.square()) throw PreconditionError("signature of a non-square matrix");
  if (!m.symmetric()) throw PreconditionError("signature of a non-symmetric matrix");
  return exact_inertia(m, RationalOps{});
}

SignatureTriple signature_symmetric(const IntMatrix& m) {
  Matrix<mpq_class> q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = static_cast<long>(m(i, j));
  return signature_symmetric(q);
}

Matrix<CyclotomicField::Element> hermitian_seifert_form(const IntMatrix& a, const CyclotomicField& field) {
  if (!a.square()) throw PreconditionError("Seifert matrix must be square");
  const std::size_t n = a.rows();
  const auto one = field.from_integer(1);
  const auto u = field.sub(one, field.power(1));    // 1 - omega
  const auto ubar = field.sub(one, field.power(-1));  // 1 - conj omega
  Matrix<CyclotomicField::Element> h(n, n, field.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = field.add(field.scale(u, mpq_class(static_cast<long>(a(i, j)))),
                          field.scale(ubar, mpq_class(static_cast<long>(a(j, i)))));
  return h;
}

SignatureTriple hermitian_inertia(Matrix<CyclotomicField::Element> h, const CyclotomicField& field) {
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = i; j < h.cols(); ++j)
      if (h(i, j) != field.conj(h(j, i))) throw PreconditionError("matrix is not Hermitian");
  return exact_inertia(std::move(h), FieldOps{field});
}

SignatureTriple levine_tristram(const IntMatrix& a, const UnitCirclePoint& omega, LtMode mode) {
  if (!a.square()) throw PreconditionError("Seifert matrix must be square");
  const int n = static_cast<int>(a.rows());
  if (omega.is_one()) return {0, 0, n};
  if (n == 0) return {};
  const long order = omega.order();
  const bool small = order <= (1L << 20) && totient(static_cast<int>(order)) <= kMaxExactDegree;
  if (mode == LtMode::kAuto) {
    mode = LtMode::kExact;
    if (!small) {
      // Balls cannot certify a zero eigenvalue, so singular points stay exact.
      const IntPolynomial delta = pencil_determinant(-a.transposed(), a);
      const bool singular = order <= (1L << 20) &&
                            remainder_monic(delta, cyclotomic_polynomial(static_cast<int>(order))).is_zero();
      if (!singular) mode = LtMode::kInterval;
    }
  }
  if (mode == LtMode::kInterval) return interval_levine_tristram(a, omega);

  CyclotomicField field(omega);
  auto h = hermitian_seifert_form(a, field);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) = field.neg(h(i, j));
  return exact_inertia(std::move(h), FieldOps{field});
}

CyclotomicField::Element field_determinant(Matrix<CyclotomicField::Element> m, const CyclotomicField& field) {
  if (!m.square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  auto det = field.from_integer(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && CyclotomicField::is_zero(m(p, k))) ++p;
    if (p == n) return field.zero();
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      det = field.neg(det);
    }
    det = field.mul(det, m(k, k));
    const auto inv = field.inverse(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (CyclotomicField::is_zero(m(i, k))) continue;
      const auto f = field.mul(m(i, k), inv);
      for (std::size_t j = k; j < n; ++j) m(i, j) = field.sub(m(i, j), field.mul(f, m(k, j)));
    }
  }
  return det;
}

bool det_relation_check(const IntMatrix& a, const UnitCirclePoint& omega, const IntPolynomial& delta) {
  if (delta.low_exponent2() != 0) throw PreconditionError("det_relation_check needs the raw determinant polynomial");
  CyclotomicField field(omega);
  const auto lhs = field_determinant(hermitian_seifert_form(a, field), field);
  const auto factor = field.neg(field.sub(field.from_integer(1), field.power(-1)));
  auto rhs = field.evaluate(delta);
  for (std::size_t i = 0; i < a.rows(); ++i) rhs = field.mul(rhs, factor);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Unit-circle roots.

namespace {

QPolynomial exact_quotient(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

// Square-free decomposition f = c * prod_i s_i^i (Yun).
std::vector<std::pair<QPolynomial, int>> squarefree_parts(const QPolynomial& f) {
  std::vector<std::pair<QPolynomial, int>> parts;
  if (f.degree() <= 0) return parts;
  const QPolynomial df = f.derivative();
  QPolynomial a = gcd(f, df);
  QPolynomial b = exact_quotient(f, a);
  QPolynomial c = exact_quotient(df, a);
  QPolynomial d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    QPolynomial g = gcd(b, d);
    if (g.degree() > 0) parts.emplace_back(g, i);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
  }
  return parts;
}

class Sturm {
 public:
  explicit Sturm(const QPolynomial& p) {
    seq_.push_back(p);
    seq_.push_back(p.derivative());
    while (!seq_.back().is_zero() && seq_.back().degree() > 0) {
      QPolynomial q, r;
      divmod(seq_[seq_.size() - 2], seq_.back(), q, r);
      seq_.push_back(QPolynomial() - r);
    }
    if (seq_.back().is_zero()) seq_.pop_back();
  }

  int variations(const mpq_class& x) const {
    int count = 0, last = 0;
    for (const auto& p : seq_) {
      const int s = sgn(p.evaluate(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Distinct roots in (lo, hi].
  int roots_in(const mpq_class& lo, const mpq_class& hi) const { return variations(lo) - variations(hi); }

 private:
  std::vector<QPolynomial> seq_;
};

// p(t) = t^h * f(t + 1/t) for palindromic p of degree 2h.
QPolynomial to_trace_variable(const IntPolynomial& p) {
  const int deg = p.degree();
  if (deg % 2 != 0) throw InternalError("palindromic polynomial of odd degree");
  const int h = deg / 2;
  for (int k = 0; k <= deg; ++k)
    if (p.coefficient(k) != p.coefficient(deg - k)) throw InternalError("expected a palindromic polynomial");
  // Dickson: D_0 = 2, D_1 = y, D_k = y D_{k-1} - D_{k-2}, with D_k(t + 1/t) = t^k + t^-k.
  const QPolynomial y(std::vector<mpq_class>{0, 1});
  QPolynomial dprev(std::vector<mpq_class>{2}), dcur = y;
  QPolynomial f(std::vector<mpq_class>{mpq_class(p.coefficient(h))});
  for (int k = 1; k <= h; ++k) {
    f = f + QPolynomial(std::vector<mpq_class>{mpq_class(p.coefficient(h + k))}) * dcur;
    QPolynomial next = y * dcur - dprev;
    dprev = std::move(dcur);
    dcur = std::move(next);
  }
  return f;
}

// Angle in units of pi of y = 2 cos(theta), theta in [0, pi], with
// directed rounding so that [lower(y_hi), upper(y_lo)] encloses the image.
mpq_class trace_to_angle(const mpq_class& y, bool upper) {
  constexpr mpfr_prec_t prec = 160;
  detail::BigFloat x(prec), ang(prec), pi(prec);
  const mpq_class half_y = y / 2;
  // acos is decreasing: round the argument against the desired direction.
  mpfr_set_q(x.get(), half_y.get_mpq_t(), upper ? MPFR_RNDD : MPFR_RNDU);
  if (mpfr_cmp_si(x.get(), 1) > 0) mpfr_set_si(x.get(), 1, MPFR_RNDN);
  if (mpfr_cmp_si(x.get(), -1) < 0) mpfr_set_si(x.get(), -1, MPFR_RNDN);
  mpfr_acos(ang.get(), x.get(), upper ? MPFR_RNDU : MPFR_RNDD);
  mpfr_const_pi(pi.get(), upper ? MPFR_RNDD : MPFR_RNDU);
  mpfr_div(ang.get(), ang.get(), pi.get(), upper ? MPFR_RNDU : MPFR_RNDD);
  return ang.to_rational();
}

}  // namespace

UnitCirclePoint JumpPoint::point() const {
  if (!exact()) throw PreconditionError("jump point is only known up to an interval");
  return UnitCirclePoint(lower);
}

std::string JumpPoint::to_string() const {
  if (exact()) return point().to_string();
  return "[" + std::to_string(lower.get_d()) + ", " + std::to_string(upper.get_d()) + "]";
}

std::vector<JumpPoint> unit_circle_roots(const IntPolynomial& poly) {
  if (poly.is_zero()) throw PreconditionError("Alexander polynomial vanishes identically");
  IntPolynomial p(poly.coefficients());
  p.strip_variable_powers();
  std::vector<JumpPoint> out;

  auto strip_linear = [&p](long root) {
    const IntPolynomial lin{-root, 1};
    int mult = 0;
    while (p.degree() > 0 && p.evaluate(root) == 0) {
      p = divide_exact(p, lin);
      ++mult;
    }
    return mult;
  };
  strip_linear(1);
  if (int m = strip_linear(-1); m > 0) out.push_back({mpq_class(1), mpq_class(1), m});

  // Cyclotomic factors give exact angles 2k/m.
  std::vector<QPolynomial> cyclotomic_traces;
  for (int m = 3; p.degree() >= 2 && m <= 2 * p.degree() * p.degree() + 2; ++m) {
    const int phi = totient(m);
    if (phi > p.degree()) continue;
    const IntPolynomial& cm = cyclotomic_polynomial(m);
    int mult = 0;
    while (p.degree() >= phi && remainder_monic(p, cm).is_zero()) {
      p = divide_exact(p, cm);
      ++mult;
    }
    if (mult == 0) continue;
    cyclotomic_traces.push_back(to_trace_variable(cm));
    for (int k = 1; k < m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      mpq_class a(2 * k, m);
      a.canonicalize();
      out.push_back({a, a, mult});
    }
  }

  if (p.degree() > 0) {
    const QPolynomial f = to_trace_variable(p);
    std::vector<Sturm> guards;
    for (const auto& c : cyclotomic_traces) guards.emplace_back(c);
    const mpq_class width_goal(1, mpz_class(1) << 48);

    for (const auto& [s, mult] : squarefree_parts(f)) {
      const Sturm sturm(s);
      // Bisection on (-2, 2); endpoints are never roots here.
      std::vector<std::pair<mpq_class, mpq_class>> todo{{mpq_class(-2), mpq_class(2)}};
      std::vector<std::pair<mpq_class, mpq_class>> isolated;
      while (!todo.empty()) {
        auto [lo, hi] = todo.back();
        todo.pop_back();
        const int count = sturm.roots_in(lo, hi);
        if (count == 0) continue;
        if (count == 1) {
          isolated.emplace_back(lo, hi);
          continue;
        }
        // Split at a point that is not itself a root.
        mpq_class mid = (lo + hi) / 2;
        for (long k = 3; s.evaluate(mid) == 0; ++k) mid = lo + (hi - lo) / k;
        todo.emplace_back(lo, mid);
        todo.emplace_back(mid, hi);
      }
      for (auto [lo, hi] : isolated) {
        auto clear_of_guards = [&] {
          for (std::size_t g_i = 0; g_i < guards.size(); ++g_i) {
            const auto& g = guards[g_i];
            if (g.roots_in(lo, hi) != 0 || cyclotomic_traces[g_i].evaluate(lo) == 0) return false;
          }
          return true;
        };
        // Shrink (lo, hi] until it is tight and excludes cyclotomic roots.
        while (lo != hi && (hi - lo > width_goal || !clear_of_guards())) {
          const mpq_class mid = (lo + hi) / 2;
          if (s.evaluate(mid) == 0) {
            lo = hi = mid;
          } else if (sturm.roots_in(lo, mid) == 1) {
            hi = mid;
          } else {
            lo = mid;
          }
        }
        const mpq_class alo = trace_to_angle(hi, false);
        const mpq_class ahi = trace_to_angle(lo, true);
        out.push_back({alo, ahi, mult});
        out.push_back({2 - ahi, 2 - alo, mult});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const JumpPoint& a, const JumpPoint& b) { return a.lower < b.lower; });
  return out;
}

std::vector<JumpPoint> jump_points(const IntMatrix& a) {
  if (!a.square()) throw PreconditionError("Seifert matrix must be square");
  // det(A - t A^T)
  return unit_circle_roots(pencil_determinant(a, -a.transposed()));
}

}  // namespace knotsig
