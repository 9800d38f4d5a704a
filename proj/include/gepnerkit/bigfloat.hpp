#pragma once

#include <mpfr.h>

#include <string>

#include "gepnerkit/rational.hpp"

namespace gepnerkit {

// RAII wrapper over mpfr_t. Deliberately thin: arithmetic happens through the
// raw() handle with an explicit rounding mode at every call site, so directed
// rounding decisions stay visible where they matter.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat of_long(long value, mpfr_prec_t prec);
  static BigFloat of_rational(const Rational& value, mpfr_prec_t prec, mpfr_rnd_t rnd);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int cmp(const BigFloat& other) const { return mpfr_cmp(v_, other.v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Scientific-notation rendering with the given number of significant
  // digits, rounded in the given direction (so an interval endpoint can be
  // printed without losing its enclosure property).
  std::string decimal(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

 private:
  mpfr_t v_;
};

// Rectangular complex value at a fixed precision; used for period series
// coefficients where plain (non-interval) rounding is accounted for
// separately.
struct BigComplex {
  BigFloat re, im;
  explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
};

}  // namespace gepnerkit
