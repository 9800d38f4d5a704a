#pragma once

#include <array>
#include <string>

#include "gepnerkit/interval.hpp"
#include "gepnerkit/rational.hpp"

namespace gepnerkit {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

// An element of the degree-8 cyclotomic field generated by a primitive 20th
// root of unity z = exp(pi*i/10), stored on the power basis 1, z, ..., z^7
// with exact rational coordinates. Products are reduced by
//
//   z^8 = z^6 - z^4 + z^2 - 1.
//
// The field contains both the primitive 5th root alpha = z^4 = exp(2*pi*i/5)
// and the imaginary unit i = z^5, which is all the charge formulas need.
class CycloNumber {
 public:
  CycloNumber();  // zero
  static CycloNumber from_rational(const Rational& value);
  static CycloNumber from_integer(long value);
  static CycloNumber from_coords(const std::array<Rational, 8>& coords);
  static CycloNumber zeta();                 // z
  static CycloNumber zeta_power(long k);     // z^k for any integer k
  static CycloNumber alpha();                // z^4, a primitive 5th root of 1
  static CycloNumber imaginary_unit();       // z^5

  const std::array<Rational, 8>& coords() const { return coords_; }
  const Rational& coord(int k) const { return coords_.at(k); }

  bool is_zero() const;
  bool is_rational() const;  // all coordinates above degree 0 vanish
  const Rational& rational_value() const;  // throws unless is_rational()

  CycloNumber operator+(const CycloNumber& other) const;
  CycloNumber operator-(const CycloNumber& other) const;
  CycloNumber operator-() const;
  CycloNumber operator*(const CycloNumber& other) const;
  CycloNumber operator/(const CycloNumber& other) const;  // throws on zero divisor
  CycloNumber& operator+=(const CycloNumber& other);
  CycloNumber& operator-=(const CycloNumber& other);
  CycloNumber& operator*=(const CycloNumber& other);

  CycloNumber inverse() const;  // throws std::domain_error on zero
  CycloNumber pow(long n) const;
  CycloNumber scaled_by(const Rational& q) const;

  bool operator==(const CycloNumber& other) const = default;

  std::string to_string() const;  // e.g. "3/2 - z^4 + 1/5*z^6"

 private:
  std::array<Rational, 8> coords_;
};

// Complex conjugation (the field is closed under it: conj(z) = z^19).
CycloNumber conj(const CycloNumber& x);

// Real and imaginary parts as field elements: re = (x + conj x)/2,
// im = (x - conj x)/(2i). Both are fixed by conjugation.
CycloNumber re(const CycloNumber& x);
CycloNumber im(const CycloNumber& x);
bool is_real(const CycloNumber& x);

// Certified rectangle enclosing the complex value of x, computed with
// directed rounding at the requested precision (>= 32 bits, else
// std::invalid_argument). Exact rational inputs give degenerate boxes.
ComplexInterval embed(const CycloNumber& x, long precision_bits);

// Exact sign of a real element: decides zero by coordinates, otherwise
// tightens the enclosure (64, 128, ... bits) until zero is excluded. A
// nonzero element separates from zero well before the 16384-bit cap; hitting
// the cap raises std::runtime_error. Throws std::domain_error when im(x) != 0.
Sign sign_of_real(const CycloNumber& x);

}  // namespace gepnerkit
