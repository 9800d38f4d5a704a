#include "gepnerkit/bigfloat.hpp"

#include <cstdlib>

namespace gepnerkit {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() {
  mpfr_clear(v_);
}

BigFloat BigFloat::of_long(long value, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, value, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of_rational(const Rational& value, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, value.get_mpq_t(), rnd);
  return r;
}

std::string BigFloat::decimal(int digits, mpfr_rnd_t rnd) const {
  if (digits < 2) digits = 2;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*R*e", digits - 1, rnd, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace gepnerkit
