#pragma once

#include <string>

#include "gepnerkit/rational.hpp"

namespace gepnerkit {

// Chern character of a class on a smooth quintic 3-fold X with hyperplane
// class H, H^3 = 5. Stored in "v-units": ch_i = v_i * H^i, so all four slots
// are plain rationals and the intersection pairing is carried by the
// integration helpers below (H^2 ch_1 = 5 v_1, H ch_2 = 5 v_2, ch_3 = 5 v_3).
struct ChernVector {
  Rational v0, v1, v2, v3;

  ChernVector() : v0(0), v1(0), v2(0), v3(0) {}
  ChernVector(Rational a0, Rational a1, Rational a2, Rational a3)
      : v0(std::move(a0)), v1(std::move(a1)), v2(std::move(a2)), v3(std::move(a3)) {}

  ChernVector operator+(const ChernVector& other) const;
  ChernVector operator-(const ChernVector& other) const;
  ChernVector operator-() const;
  ChernVector scaled_by(const Rational& q) const;
  bool operator==(const ChernVector& other) const = default;

  std::string to_string() const;  // "(v0, v1, v2, v3)"
};

// Rank and the integrated pairings against powers of H.
Rational rank(const ChernVector& c);        // ch_0
Rational h2_ch1(const ChernVector& c);      // H^2 . ch_1 = 5 v1
Rational h_ch2(const ChernVector& c);       // H  . ch_2 = 5 v2
Rational ch3_int(const ChernVector& c);     // integral of ch_3 = 5 v3

// ch(c (x) O(beta H)) = e^{beta H} ch(c), exact in v-units. twist(c, -1/2)
// is the B-field twist used throughout the charge formulas.
ChernVector twist(const ChernVector& c, const Rational& beta);

// Euler characteristic chi(X, c) by Riemann-Roch on the quintic:
// chi = 5 v3 + (25/6) v1.
Rational euler_char(const ChernVector& c);

// Discriminant pairing (ch_1^2 - 2 ch_0 ch_2) . H = 5 (v1^2 - 2 v0 v2).
Rational discriminant_H(const ChernVector& c);

// Degree-3 integration: 5 v3.
Rational integrate(const ChernVector& c);

// Integrality pattern of an actual sheaf class: v0, v1 integers, and the
// integrated pairings carry at worst the Chern character denominators:
// 2 H.ch2 and 6 ch3 integers. Returns false and explains through *why (when
// given) otherwise.
bool is_sheaf_like(const ChernVector& c, std::string* why = nullptr);

ChernVector structure_sheaf();        // (1, 0, 0, 0)
ChernVector point_class();            // (0, 0, 0, 1/5): integrates to 1
ChernVector line_bundle(long m);      // (1, m, m^2/2, m^3/6)

// The numerical class of a coherent system (O_S^R -> F) on a quintic surface
// S (h^2 = 5): R >= 0 copies of O_S against a sheaf F with rank r, degree
// dh = c_1(F).h, and half-integral ch_2 part n. R = 0 encodes a plain sheaf.
struct SurfaceClass {
  long R = 0;
  long r = 0;
  long dh = 0;
  Rational n = Rational(0);

  SurfaceClass() = default;
  SurfaceClass(long R_, long r_, long dh_, Rational n_);

  std::string to_string() const;
};

}  // namespace gepnerkit
