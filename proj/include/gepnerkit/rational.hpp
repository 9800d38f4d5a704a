#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gepnerkit {

// Exact rational scalar. All K-theoretic bookkeeping in this library is done
// with these; floating point only ever appears inside certified enclosures.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
// or a zero denominator. The result is canonicalized (gcd 1, q > 0).
Rational parse_rational(std::string_view text);

// num/den in lowest terms. The mpq_class two-argument constructor does NOT
// reduce, and GMP arithmetic assumes canonical operands, so every quotient
// whose parts are not known-coprime literals must go through here.
Rational make_ratio(const Rational& num, const Rational& den);

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

// True when 2q is an integer.
bool is_half_integer(const Rational& q);

// q must fit in a signed long (and be integral); throws std::domain_error
// otherwise.
long to_long(const Rational& q);

// A rational extended by the two slope sentinels. Slope functions on torsion
// (or R = 0) classes take these values by convention, and the ordering below
// treats them as genuine endpoints: -inf < every finite value < +inf.
class ExtendedRational {
 public:
  ExtendedRational() : kind_(Kind::Finite) {}
  ExtendedRational(Rational q) : kind_(Kind::Finite), value_(std::move(q)) {}
  ExtendedRational(long v) : ExtendedRational(Rational(v)) {}

  static ExtendedRational positive_infinity() { return ExtendedRational(Kind::PosInf); }
  static ExtendedRational negative_infinity() { return ExtendedRational(Kind::NegInf); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_positive_infinity() const { return kind_ == Kind::PosInf; }
  bool is_negative_infinity() const { return kind_ == Kind::NegInf; }

  // Only valid on finite values; throws std::domain_error otherwise.
  const Rational& finite() const;

  // Total order with the sentinels as endpoints. Two equal sentinels compare
  // as equal (0), which is what slope-tie bookkeeping wants.
  int compare(const ExtendedRational& other) const;

  bool operator==(const ExtendedRational& other) const { return compare(other) == 0; }
  bool operator<(const ExtendedRational& other) const { return compare(other) < 0; }
  bool operator<=(const ExtendedRational& other) const { return compare(other) <= 0; }
  bool operator>(const ExtendedRational& other) const { return compare(other) > 0; }
  bool operator>=(const ExtendedRational& other) const { return compare(other) >= 0; }

  // "-inf", "+inf", or the canonical rational rendering.
  std::string to_string() const;

 private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit ExtendedRational(Kind k) : kind_(k) {}

  Kind kind_;
  Rational value_;
};

}  // namespace gepnerkit
