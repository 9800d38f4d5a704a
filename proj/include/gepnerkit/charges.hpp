#pragma once

#include <array>
#include <utility>

#include "gepnerkit/chern.hpp"
#include "gepnerkit/cyclotomic.hpp"

namespace gepnerkit {

// Linear central charge on ChernVectors. The pairing convention is fixed once
// for the whole library: the four coefficients multiply the integrated
// numbers (ch0, H^2.ch1, H.ch2, ch3) = (v0, 5v1, 5v2, 5v3).
class ChargeCovector {
 public:
  ChargeCovector();
  explicit ChargeCovector(std::array<CycloNumber, 4> z);

  const CycloNumber& coefficient(int k) const { return z_.at(k); }
  const std::array<CycloNumber, 4>& coefficients() const { return z_; }

  CycloNumber evaluate(const ChernVector& c) const;

  bool operator==(const ChargeCovector& other) const = default;

 private:
  std::array<CycloNumber, 4> z_;
};

// The Gepner-point central charge
//   Z(E) = -ch3 + (1/5)(a^3+2a^2+3a-1) H.ch2 + (1/30)(-3a^3+9a-16) H^2.ch1
//          + (a-1) ch0,          a = alpha = exp(2 pi i / 5),
// normalized so that Z(point) = -1.
const ChargeCovector& zG_dagger();

// Real constants of the half-twisted rewrite
//   Z(E) = -ch3^B + a H^2.ch1^B + i (b H.ch2^B + c ch0^B),   B = -H/2:
//   a   = -(1/5)a^3 - (1/5)a^2 - 67/120
//   b i = (1/5)a^3 + (2/5)a^2 + (3/5)a + 3/10
//   c i = (3/8)a^3 + (1/4)a^2 + (5/8)a + 5/16
// All three are real, which the constructor verifies exactly.
struct RewriteCoefficients {
  CycloNumber a, b, c;
};
const RewriteCoefficients& rewrite_coefficients();

// The slope-(-1/2) discriminant bound 2c/b and the coherent-system bound
// 5/8 + c/b, both exact real elements.
const CycloNumber& strong_bg_bound();
const CycloNumber& clifford_bound();

// The rewrite form evaluated on already-B-twisted integrated coordinates
// (used directly by the surface pushforward, which lands in ch^B), and on an
// untwisted class (twists by B = -H/2 first).
CycloNumber rewrite_form_twisted(const ChernVector& chB);
CycloNumber rewrite_form(const ChernVector& c);

// Exact equality of the rewrite form with the defining covector.
bool rewrite_equivalence_check(const ChernVector& c);

// Large-volume charge Z_{B, tH} for rational t > 0: exact real and imaginary
// parts (-ch3^B + (t^2/2) H^2.ch1^B, t H.ch2^B - (5 t^3/6) ch0^B).
std::pair<Rational, Rational> zB_tH(const ChernVector& c, const Rational& t);

// 4x4 exact rational matrix acting on (v0, v1, v2, v3) columns.
class MonodromyMatrix {
 public:
  MonodromyMatrix();  // identity
  static MonodromyMatrix from_columns(const std::array<ChernVector, 4>& cols);

  const Rational& at(int row, int col) const { return m_.at(row).at(col); }

  ChernVector apply(const ChernVector& c) const;
  MonodromyMatrix operator*(const MonodromyMatrix& other) const;
  MonodromyMatrix pow(unsigned n) const;

  Rational determinant() const;
  // Monic characteristic polynomial, coefficients high to low degree:
  // {1, c3, c2, c1, c0} for x^4 + c3 x^3 + c2 x^2 + c1 x + c0.
  std::array<Rational, 5> characteristic_polynomial() const;

  bool operator==(const MonodromyMatrix& other) const = default;

 private:
  std::array<std::array<Rational, 4>, 4> m_;
};

// ch(E(1)) = e^H . ch(E).
ChernVector tensor_O1(const ChernVector& c);

// K-theory shadow of the spherical twist along O_X: c - chi(c) . [O_X].
ChernVector seidel_thomas(const ChernVector& c);

// M = seidel_thomas o tensor_O1; satisfies M^5 = 1 and Z o M = alpha Z for
// the Gepner covector above.
const MonodromyMatrix& monodromy_matrix();

// Residual covector of the eigen equation: k-th entry is Z(M e_k) minus
// lambda Z(e_k) on the basis classes e_k. All-zero iff Z o M = lambda Z.
std::array<CycloNumber, 4> eigen_residual(const ChargeCovector& z, const CycloNumber& lambda);
bool covector_eigen_check(const ChargeCovector& z, const CycloNumber& lambda);

// The library's central identity: Z_G o M = alpha Z_G, residual exactly zero.
bool gepner_eigen_check();

// Solves w o M = lambda w with the normalization w3 = -1 by exact Gaussian
// elimination over the field; throws std::domain_error when lambda is not an
// eigenvalue admitting that normalization.
ChargeCovector eigen_covector(const CycloNumber& lambda);

// -(1 - alpha)^4, the scalar relating the two central charge normalizations.
CycloNumber gepner_scalar();

}  // namespace gepnerkit
