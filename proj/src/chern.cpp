#include "gepnerkit/chern.hpp"

#include <stdexcept>

namespace gepnerkit {

ChernVector ChernVector::operator+(const ChernVector& other) const {
  return {v0 + other.v0, v1 + other.v1, v2 + other.v2, v3 + other.v3};
}

ChernVector ChernVector::operator-(const ChernVector& other) const {
  return {v0 - other.v0, v1 - other.v1, v2 - other.v2, v3 - other.v3};
}

ChernVector ChernVector::operator-() const {
  return {-v0, -v1, -v2, -v3};
}

ChernVector ChernVector::scaled_by(const Rational& q) const {
  return {v0 * q, v1 * q, v2 * q, v3 * q};
}

std::string ChernVector::to_string() const {
  return "(" + gepnerkit::to_string(v0) + ", " + gepnerkit::to_string(v1) + ", " +
         gepnerkit::to_string(v2) + ", " + gepnerkit::to_string(v3) + ")";
}

Rational rank(const ChernVector& c) {
  return c.v0;
}

Rational h2_ch1(const ChernVector& c) {
  return 5 * c.v1;
}

Rational h_ch2(const ChernVector& c) {
  return 5 * c.v2;
}

Rational ch3_int(const ChernVector& c) {
  return 5 * c.v3;
}

ChernVector twist(const ChernVector& c, const Rational& beta) {
  ChernVector w;
  w.v0 = c.v0;
  w.v1 = c.v1 - beta * c.v0;
  w.v2 = c.v2 - beta * c.v1 + beta * beta * c.v0 / 2;
  w.v3 = c.v3 - beta * c.v2 + beta * beta * c.v1 / 2 - beta * beta * beta * c.v0 / 6;
  return w;
}

Rational euler_char(const ChernVector& c) {
  // td_X = (1, 0, 5/6, 0) in v-units on the quintic (c_1 = 0, c_2 = 10 H^2)
  return 5 * c.v3 + Rational(25, 6) * c.v1;
}

Rational discriminant_H(const ChernVector& c) {
  return 5 * (c.v1 * c.v1 - 2 * c.v0 * c.v2);
}

Rational integrate(const ChernVector& c) {
  return 5 * c.v3;
}

bool is_sheaf_like(const ChernVector& c, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why != nullptr) *why = msg;
    return false;
  };
  if (!is_integer(c.v0)) return fail("rank " + to_string(c.v0) + " is not an integer");
  if (!is_integer(c.v1)) return fail("c_1 coefficient " + to_string(c.v1) + " is not an integer");
  if (!is_integer(2 * h_ch2(c))) {
    return fail("2 H.ch2 = " + to_string(2 * h_ch2(c)) + " is not an integer");
  }
  if (!is_integer(6 * ch3_int(c))) {
    return fail("6 ch3 = " + to_string(6 * ch3_int(c)) + " is not an integer");
  }
  return true;
}

ChernVector structure_sheaf() {
  return {1, 0, 0, 0};
}

ChernVector point_class() {
  return {0, 0, 0, Rational(1, 5)};
}

ChernVector line_bundle(long m) {
  Rational q(m);
  return {1, q, q * q / 2, q * q * q / 6};
}

SurfaceClass::SurfaceClass(long R_, long r_, long dh_, Rational n_)
    : R(R_), r(r_), dh(dh_), n(std::move(n_)) {
  if (R < 0) {
    throw std::invalid_argument("SurfaceClass: R must be non-negative, got " + std::to_string(R));
  }
  if (!is_half_integer(n)) {
    throw std::invalid_argument("SurfaceClass: 2n must be an integer, got n = " +
                                gepnerkit::to_string(n));
  }
}

std::string SurfaceClass::to_string() const {
  return "(R=" + std::to_string(R) + ", r=" + std::to_string(r) + ", dh=" + std::to_string(dh) +
         ", n=" + gepnerkit::to_string(n) + ")";
}

}  // namespace gepnerkit
