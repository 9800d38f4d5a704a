#include "gepnerkit/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace gepnerkit {

namespace {

mpfr_prec_t max_prec(mpfr_prec_t a, mpfr_prec_t b) {
  return std::max(a, b);
}

}  // namespace

RealInterval::RealInterval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

RealInterval::RealInterval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_cmp(lo_.raw(), hi_.raw()) > 0) {
    throw std::logic_error("RealInterval: lo > hi");
  }
}

RealInterval RealInterval::of_long(long value, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_si(r.lo_.raw(), value, MPFR_RNDD);
  mpfr_set_si(r.hi_.raw(), value, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::of_rational(const Rational& value, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_q(r.lo_.raw(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.raw(), value.get_mpq_t(), MPFR_RNDU);
  return r;
}

mpfr_prec_t RealInterval::precision() const {
  return max_prec(lo_.precision(), hi_.precision());
}

RealInterval RealInterval::operator+(const RealInterval& other) const {
  RealInterval r(max_prec(precision(), other.precision()));
  mpfr_add(r.lo_.raw(), lo_.raw(), other.lo_.raw(), MPFR_RNDD);
  mpfr_add(r.hi_.raw(), hi_.raw(), other.hi_.raw(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::operator-(const RealInterval& other) const {
  RealInterval r(max_prec(precision(), other.precision()));
  mpfr_sub(r.lo_.raw(), lo_.raw(), other.hi_.raw(), MPFR_RNDD);
  mpfr_sub(r.hi_.raw(), hi_.raw(), other.lo_.raw(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::operator*(const RealInterval& other) const {
  // All four endpoint products, each rounded both ways. Slower than a case
  // split on signs but immune to it being wrong.
  mpfr_prec_t prec = max_prec(precision(), other.precision());
  RealInterval r(prec);
  BigFloat t(prec);
  bool first = true;
  for (const BigFloat* a : {&lo_, &hi_}) {
    for (const BigFloat* b : {&other.lo_, &other.hi_}) {
      mpfr_mul(t.raw(), a->raw(), b->raw(), MPFR_RNDD);
      if (first || mpfr_cmp(t.raw(), r.lo_.raw()) < 0) mpfr_set(r.lo_.raw(), t.raw(), MPFR_RNDD);
      mpfr_mul(t.raw(), a->raw(), b->raw(), MPFR_RNDU);
      if (first || mpfr_cmp(t.raw(), r.hi_.raw()) > 0) mpfr_set(r.hi_.raw(), t.raw(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

RealInterval RealInterval::operator-() const {
  RealInterval r(precision());
  mpfr_neg(r.lo_.raw(), hi_.raw(), MPFR_RNDD);
  mpfr_neg(r.hi_.raw(), lo_.raw(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::scaled_by(const Rational& q) const {
  RealInterval r(precision());
  if (sgn(q) == 0) return r;  // exact [0, 0]
  if (sgn(q) > 0) {
    mpfr_mul_q(r.lo_.raw(), lo_.raw(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r.hi_.raw(), hi_.raw(), q.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(r.lo_.raw(), hi_.raw(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r.hi_.raw(), lo_.raw(), q.get_mpq_t(), MPFR_RNDU);
  }
  return r;
}

bool RealInterval::contains_zero() const {
  return lo_.sign() <= 0 && hi_.sign() >= 0;
}

bool RealInterval::contains(const BigFloat& x) const {
  return mpfr_cmp(lo_.raw(), x.raw()) <= 0 && mpfr_cmp(x.raw(), hi_.raw()) <= 0;
}

bool RealInterval::intersects(const RealInterval& other) const {
  return mpfr_cmp(lo_.raw(), other.hi_.raw()) <= 0 && mpfr_cmp(other.lo_.raw(), hi_.raw()) <= 0;
}

bool RealInterval::is_point() const {
  return mpfr_cmp(lo_.raw(), hi_.raw()) == 0;
}

int RealInterval::sign() const {
  if (hi_.sign() < 0) return -1;
  if (lo_.sign() > 0) return 1;
  return 0;
}

BigFloat RealInterval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  return w;
}

ComplexInterval::ComplexInterval(mpfr_prec_t prec) : re_(prec), im_(prec) {}

ComplexInterval::ComplexInterval(RealInterval re, RealInterval im)
    : re_(std::move(re)), im_(std::move(im)) {}

mpfr_prec_t ComplexInterval::precision() const {
  return max_prec(re_.precision(), im_.precision());
}

ComplexInterval ComplexInterval::operator+(const ComplexInterval& other) const {
  return {re_ + other.re_, im_ + other.im_};
}

ComplexInterval ComplexInterval::operator*(const ComplexInterval& other) const {
  return {re_ * other.re_ - im_ * other.im_, re_ * other.im_ + im_ * other.re_};
}

ComplexInterval ComplexInterval::operator-() const {
  return {-re_, -im_};
}

ComplexInterval ComplexInterval::scaled_by(const Rational& q) const {
  return {re_.scaled_by(q), im_.scaled_by(q)};
}

bool ComplexInterval::contains(const BigFloat& re, const BigFloat& im) const {
  return re_.contains(re) && im_.contains(im);
}

bool ComplexInterval::intersects(const ComplexInterval& other) const {
  return re_.intersects(other.re_) && im_.intersects(other.im_);
}

bool ComplexInterval::contains_zero() const {
  return re_.contains_zero() && im_.contains_zero();
}

}  // namespace gepnerkit
