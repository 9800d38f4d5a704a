#include "gepnerkit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gepnerkit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// "p" or "p/q" with optional leading sign on p; no whitespace, no base
// prefixes. GMP's own parser is more permissive than we want for file input,
// so validate the shape first.
bool valid_shape(std::string_view s) {
  if (s.empty()) return false;
  std::string_view num = s;
  std::string_view den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!all_digits(den)) return false;
  }
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) num.remove_prefix(1);
  return all_digits(num);
}

}  // namespace

Rational make_ratio(const Rational& num, const Rational& den) {
  if (den == 0) throw std::domain_error("make_ratio: zero denominator");
  return num / den;  // mpq division canonicalizes
}

Rational parse_rational(std::string_view text) {
  if (!valid_shape(text)) {
    throw std::invalid_argument("not a rational literal: \"" + std::string(text) + "\"");
  }
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0) {
    throw std::invalid_argument("not a rational literal: \"" + std::string(text) + "\"");
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

bool is_integer(const Rational& q) {
  return mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0;
}

bool is_half_integer(const Rational& q) {
  return is_integer(2 * q);
}

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw std::domain_error("rational does not fit a signed long: " + to_string(q));
  }
  return q.get_num().get_si();
}

const Rational& ExtendedRational::finite() const {
  if (kind_ != Kind::Finite) {
    throw std::domain_error("ExtendedRational: " + to_string() + " has no finite value");
  }
  return value_;
}

int ExtendedRational::compare(const ExtendedRational& other) const {
  if (kind_ != Kind::Finite || other.kind_ != Kind::Finite) {
    auto height = [](Kind k) { return k == Kind::NegInf ? -1 : (k == Kind::PosInf ? 1 : 0); };
    int a = height(kind_), b = height(other.kind_);
    return a < b ? -1 : (a > b ? 1 : 0);
  }
  return cmp(value_, other.value_) < 0 ? -1 : (cmp(value_, other.value_) > 0 ? 1 : 0);
}

std::string ExtendedRational::to_string() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "+inf";
    case Kind::Finite:
      break;
  }
  return gepnerkit::to_string(value_);
}

}  // namespace gepnerkit
