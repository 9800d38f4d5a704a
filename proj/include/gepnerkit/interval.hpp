#pragma once

#include "gepnerkit/bigfloat.hpp"

namespace gepnerkit {

// Closed interval [lo, hi] with outward-rounded dyadic endpoints. Every
// operation preserves the enclosure: if x in a and y in b then x op y is in
// a op b. Results carry the larger precision of the two operands.
class RealInterval {
 public:
  explicit RealInterval(mpfr_prec_t prec = 64);  // the exact point 0
  RealInterval(BigFloat lo, BigFloat hi);        // endpoints taken as given

  static RealInterval of_long(long value, mpfr_prec_t prec);
  static RealInterval of_rational(const Rational& value, mpfr_prec_t prec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t precision() const;

  RealInterval operator+(const RealInterval& other) const;
  RealInterval operator-(const RealInterval& other) const;
  RealInterval operator*(const RealInterval& other) const;
  RealInterval operator-() const;
  RealInterval scaled_by(const Rational& q) const;

  bool contains_zero() const;
  bool contains(const BigFloat& x) const;
  bool intersects(const RealInterval& other) const;
  bool is_point() const;

  // -1 when hi < 0, +1 when lo > 0, 0 when the interval straddles zero.
  int sign() const;

  BigFloat width() const;  // hi - lo, rounded up

 private:
  BigFloat lo_, hi_;
};

// Axis-aligned rectangle { re + i*im : re in re_box, im in im_box }.
class ComplexInterval {
 public:
  explicit ComplexInterval(mpfr_prec_t prec = 64);
  ComplexInterval(RealInterval re, RealInterval im);

  const RealInterval& re() const { return re_; }
  const RealInterval& im() const { return im_; }
  mpfr_prec_t precision() const;

  ComplexInterval operator+(const ComplexInterval& other) const;
  ComplexInterval operator*(const ComplexInterval& other) const;
  ComplexInterval operator-() const;
  ComplexInterval scaled_by(const Rational& q) const;

  bool contains(const BigFloat& re, const BigFloat& im) const;
  bool intersects(const ComplexInterval& other) const;
  bool contains_zero() const;

 private:
  RealInterval re_, im_;
};

}  // namespace gepnerkit
