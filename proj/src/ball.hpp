#pragma once

// Midpoint-radius complex balls over MPFR, used by the certified fallback
// for Levine-Tristram signatures. A ball (re, im; rad) contains every z with
// |z - (re + i im)| <= rad. Radii are always rounded upward.

#include <mpfr.h>

#include "mpfr_util.hpp"

namespace knotsig::detail {

class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec), rad_(prec) {}

  static ComplexBall exact_real(long v, mpfr_prec_t prec) {
    ComplexBall b(prec);
    mpfr_set_si(b.re_.get(), v, MPFR_RNDN);
    return b;
  }

  BigFloat& re() { return re_; }
  BigFloat& im() { return im_; }
  BigFloat& rad() { return rad_; }
  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  const BigFloat& rad() const { return rad_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  // Upper bound on |midpoint|.
  BigFloat mid_abs_upper() const {
    BigFloat a(precision()), b(precision());
    mpfr_abs(a.get(), re_.get(), MPFR_RNDU);
    mpfr_abs(b.get(), im_.get(), MPFR_RNDU);
    mpfr_add(a.get(), a.get(), b.get(), MPFR_RNDU);
    return a;
  }

  // Adds the rounding error of a result with midpoint magnitude <= mag_upper
  // produced by `ops` correctly-rounded operations.
  void add_rounding(const BigFloat& mag_upper, unsigned ops) {
    BigFloat e(precision());
    mpfr_mul_ui(e.get(), mag_upper.get(), ops, MPFR_RNDU);
    mpfr_div_2ui(e.get(), e.get(), static_cast<unsigned long>(precision() - 1), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), e.get(), MPFR_RNDU);
  }

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    ComplexBall r(a.precision());
    mpfr_add(r.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
    mpfr_add(r.im_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
    mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    r.add_rounding(r.mid_abs_upper(), 2);
    return r;
  }

  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    ComplexBall r(a.precision());
    mpfr_sub(r.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
    mpfr_sub(r.im_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
    mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    r.add_rounding(r.mid_abs_upper(), 2);
    return r;
  }

  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    const mpfr_prec_t p = a.precision();
    ComplexBall r(p);
    BigFloat t1(p), t2(p);
    mpfr_mul(t1.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
    mpfr_sub(r.re_.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re_.get(), b.im_.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
    mpfr_add(r.im_.get(), t1.get(), t2.get(), MPFR_RNDN);
    // rad = |a| rb + |b| ra + ra rb, with |a|, |b| bounded by |re| + |im|.
    BigFloat ma = a.mid_abs_upper(), mb = b.mid_abs_upper();
    mpfr_mul(t1.get(), ma.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_mul(t2.get(), mb.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), t1.get(), t2.get(), MPFR_RNDU);
    mpfr_mul(t1.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), t1.get(), MPFR_RNDU);
    mpfr_mul(t1.get(), ma.get(), mb.get(), MPFR_RNDU);
    r.add_rounding(t1, 6);
    return r;
  }

  ComplexBall conj() const {
    ComplexBall r = *this;
    mpfr_neg(r.im_.get(), r.im_.get(), MPFR_RNDN);
    return r;
  }

  // Treats the ball as real: folds |im| into the radius.
  void make_real() {
    BigFloat a(precision());
    mpfr_abs(a.get(), im_.get(), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), a.get(), MPFR_RNDU);
    mpfr_set_zero(im_.get(), 1);
  }

  // Sign of a real ball: +1 / -1 when certified, 0 when the ball meets zero.
  int certified_real_sign() const {
    BigFloat a(precision());
    mpfr_abs(a.get(), re_.get(), MPFR_RNDD);
    if (mpfr_cmp(a.get(), rad_.get()) <= 0) return 0;
    return mpfr_sgn(re_.get()) > 0 ? 1 : -1;
  }

  // Enclosure of 1/x for a real ball certified away from zero.
  ComplexBall real_inverse() const {
    const mpfr_prec_t p = precision();
    ComplexBall r(p);
    mpfr_ui_div(r.re_.get(), 1, re_.get(), MPFR_RNDN);
    // |1/x - 1/c| <= rad / (|c| (|c| - rad))
    BigFloat c(p), d(p);
    mpfr_abs(c.get(), re_.get(), MPFR_RNDD);
    mpfr_sub(d.get(), c.get(), rad_.get(), MPFR_RNDD);
    mpfr_mul(d.get(), d.get(), c.get(), MPFR_RNDD);
    mpfr_div(r.rad_.get(), rad_.get(), d.get(), MPFR_RNDU);
    BigFloat mag(p);
    mpfr_abs(mag.get(), r.re_.get(), MPFR_RNDU);
    r.add_rounding(mag, 1);
    return r;
  }

 private:
  BigFloat re_, im_, rad_;
};

}  // namespace knotsig::detail
