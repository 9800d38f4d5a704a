#include "gepnerkit/cyclotomic.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace gepnerkit {

namespace {

// In-place reduction mod z^8 = z^6 - z^4 + z^2 - 1.
void reduce_mod_phi(std::vector<Rational>& p) {
  if (p.size() < 8) p.resize(8);
  for (int d = static_cast<int>(p.size()) - 1; d >= 8; --d) {
    if (sgn(p[d]) == 0) continue;
    Rational c = std::move(p[d]);
    p[d] = 0;
    p[d - 2] += c;
    p[d - 4] -= c;
    p[d - 6] += c;
    p[d - 8] -= c;
  }
  p.resize(8);
}

int poly_degree(const std::vector<Rational>& p) {
  for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d) {
    if (sgn(p[d]) != 0) return d;
  }
  return -1;
}

// Euclidean division in Q[x]; returns {quotient, remainder}.
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(std::vector<Rational> num,
                                                                    const std::vector<Rational>& den) {
  int dd = poly_degree(den);
  std::vector<Rational> quot(std::max(poly_degree(num) - dd + 1, 1), Rational(0));
  for (int d = poly_degree(num); d >= dd; d = poly_degree(num)) {
    Rational f = num[d] / den[dd];
    quot[d - dd] = f;
    for (int j = 0; j <= dd; ++j) num[d - dd + j] -= f * den[j];
  }
  return {std::move(quot), std::move(num)};
}

std::vector<Rational> phi20() {
  // x^8 - x^6 + x^4 - x^2 + 1, low to high
  std::vector<Rational> p(9, Rational(0));
  p[0] = 1;
  p[2] = -1;
  p[4] = 1;
  p[6] = -1;
  p[8] = 1;
  return p;
}

// Certified boxes for z^k, k = 0..7, with z = exp(pi*i/10). k = 0 and k = 5
// (the imaginary unit) are exact; the rest come from directed cos/sin on an
// enclosure of k*pi/10, which stays inside [0, 7*pi/10] where cos is
// decreasing and sin has its single maximum at pi/2.
std::array<ComplexInterval, 8> zeta_boxes(mpfr_prec_t prec) {
  std::array<ComplexInterval, 8> out;
  BigFloat pi_lo(prec), pi_hi(prec), hpi_lo(prec), hpi_hi(prec);
  mpfr_const_pi(pi_lo.raw(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.raw(), MPFR_RNDU);
  mpfr_div_ui(hpi_lo.raw(), pi_lo.raw(), 2, MPFR_RNDD);
  mpfr_div_ui(hpi_hi.raw(), pi_hi.raw(), 2, MPFR_RNDU);
  for (unsigned k = 0; k < 8; ++k) {
    if (k == 0) {
      out[k] = {RealInterval::of_long(1, prec), RealInterval::of_long(0, prec)};
      continue;
    }
    if (k == 5) {
      out[k] = {RealInterval::of_long(0, prec), RealInterval::of_long(1, prec)};
      continue;
    }
    BigFloat th_lo(prec), th_hi(prec);
    mpfr_mul_ui(th_lo.raw(), pi_lo.raw(), k, MPFR_RNDD);
    mpfr_div_ui(th_lo.raw(), th_lo.raw(), 10, MPFR_RNDD);
    mpfr_mul_ui(th_hi.raw(), pi_hi.raw(), k, MPFR_RNDU);
    mpfr_div_ui(th_hi.raw(), th_hi.raw(), 10, MPFR_RNDU);

    BigFloat c_lo(prec), c_hi(prec);
    mpfr_cos(c_lo.raw(), th_hi.raw(), MPFR_RNDD);
    mpfr_cos(c_hi.raw(), th_lo.raw(), MPFR_RNDU);

    BigFloat sa(prec), sb(prec), s_lo(prec), s_hi(prec);
    mpfr_sin(sa.raw(), th_lo.raw(), MPFR_RNDD);
    mpfr_sin(sb.raw(), th_hi.raw(), MPFR_RNDD);
    mpfr_min(s_lo.raw(), sa.raw(), sb.raw(), MPFR_RNDD);
    mpfr_sin(sa.raw(), th_lo.raw(), MPFR_RNDU);
    mpfr_sin(sb.raw(), th_hi.raw(), MPFR_RNDU);
    mpfr_max(s_hi.raw(), sa.raw(), sb.raw(), MPFR_RNDU);
    if (mpfr_cmp(th_lo.raw(), hpi_hi.raw()) <= 0 && mpfr_cmp(th_hi.raw(), hpi_lo.raw()) >= 0) {
      mpfr_set_ui(s_hi.raw(), 1, MPFR_RNDU);  // theta may straddle pi/2
    }
    out[k] = {RealInterval(std::move(c_lo), std::move(c_hi)),
              RealInterval(std::move(s_lo), std::move(s_hi))};
  }
  return out;
}

}  // namespace

CycloNumber::CycloNumber() {
  coords_.fill(Rational(0));
}

CycloNumber CycloNumber::from_rational(const Rational& value) {
  CycloNumber x;
  x.coords_[0] = value;
  return x;
}

CycloNumber CycloNumber::from_integer(long value) {
  return from_rational(Rational(value));
}

CycloNumber CycloNumber::from_coords(const std::array<Rational, 8>& coords) {
  CycloNumber x;
  x.coords_ = coords;
  return x;
}

CycloNumber CycloNumber::zeta() {
  return zeta_power(1);
}

CycloNumber CycloNumber::zeta_power(long k) {
  long m = k % 20;
  if (m < 0) m += 20;
  std::vector<Rational> p(static_cast<size_t>(m) + 1, Rational(0));
  p[static_cast<size_t>(m)] = 1;
  reduce_mod_phi(p);
  CycloNumber x;
  for (int j = 0; j < 8; ++j) x.coords_[j] = p[j];
  return x;
}

CycloNumber CycloNumber::alpha() {
  return zeta_power(4);
}

CycloNumber CycloNumber::imaginary_unit() {
  return zeta_power(5);
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycloNumber::is_rational() const {
  for (int k = 1; k < 8; ++k) {
    if (sgn(coords_[k]) != 0) return false;
  }
  return true;
}

const Rational& CycloNumber::rational_value() const {
  if (!is_rational()) {
    throw std::domain_error("CycloNumber is not rational: " + to_string());
  }
  return coords_[0];
}

CycloNumber CycloNumber::operator+(const CycloNumber& other) const {
  CycloNumber r = *this;
  r += other;
  return r;
}

CycloNumber CycloNumber::operator-(const CycloNumber& other) const {
  CycloNumber r = *this;
  r -= other;
  return r;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r;
  for (int k = 0; k < 8; ++k) r.coords_[k] = -coords_[k];
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& other) {
  for (int k = 0; k < 8; ++k) coords_[k] += other.coords_[k];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& other) {
  for (int k = 0; k < 8; ++k) coords_[k] -= other.coords_[k];
  return *this;
}

CycloNumber CycloNumber::operator*(const CycloNumber& other) const {
  std::vector<Rational> prod(15, Rational(0));
  for (int i = 0; i < 8; ++i) {
    if (sgn(coords_[i]) == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (sgn(other.coords_[j]) == 0) continue;
      prod[i + j] += coords_[i] * other.coords_[j];
    }
  }
  reduce_mod_phi(prod);
  CycloNumber r;
  for (int k = 0; k < 8; ++k) r.coords_[k] = prod[k];
  return r;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& other) {
  *this = *this * other;
  return *this;
}

CycloNumber CycloNumber::operator/(const CycloNumber& other) const {
  return *this * other.inverse();
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CycloNumber: division by zero");
  // Extended Euclid against Phi_20, tracking only the cofactor of *this:
  // r = s * this (mod Phi_20) holds at every step.
  std::vector<Rational> r0 = phi20();
  std::vector<Rational> r1(coords_.begin(), coords_.end());
  std::vector<Rational> s0(1, Rational(0));
  std::vector<Rational> s1(1, Rational(1));
  while (poly_degree(r1) > 0) {
    auto [q, rem] = poly_divmod(std::move(r0), r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    // s2 = s0 - q * s1
    std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (sgn(q[i]) == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (poly_degree(r1) != 0) {
    throw std::logic_error("CycloNumber::inverse: gcd with Phi_20 not constant");
  }
  Rational g = r1[0];
  for (auto& c : s1) c /= g;
  reduce_mod_phi(s1);
  CycloNumber inv;
  for (int k = 0; k < 8; ++k) inv.coords_[k] = s1[k];
  return inv;
}

CycloNumber CycloNumber::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  CycloNumber acc = from_integer(1);
  CycloNumber base = *this;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

CycloNumber CycloNumber::scaled_by(const Rational& q) const {
  CycloNumber r;
  for (int k = 0; k < 8; ++k) r.coords_[k] = coords_[k] * q;
  return r;
}

std::string CycloNumber::to_string() const {
  std::string out;
  for (int k = 0; k < 8; ++k) {
    if (sgn(coords_[k]) == 0) continue;
    Rational c = coords_[k];
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    Rational mag = abs(c);
    bool unit = (mag == 1);
    if (k == 0) {
      out += gepnerkit::to_string(mag);
    } else {
      if (!unit) {
        out += gepnerkit::to_string(mag);
        out += "*";
      }
      out += (k == 1) ? "z" : "z^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

CycloNumber conj(const CycloNumber& x) {
  // conj(z^k) = z^{-k} = z^{20-k}
  CycloNumber r = CycloNumber::from_rational(x.coord(0));
  for (int k = 1; k < 8; ++k) {
    if (sgn(x.coord(k)) == 0) continue;
    r += CycloNumber::zeta_power(20 - k).scaled_by(x.coord(k));
  }
  return r;
}

CycloNumber re(const CycloNumber& x) {
  return (x + conj(x)).scaled_by(Rational(1, 2));
}

CycloNumber im(const CycloNumber& x) {
  // (x - conj x) / (2i), and 1/(2i) = -i/2 = -(1/2) z^5
  return (x - conj(x)) * CycloNumber::zeta_power(5).scaled_by(Rational(-1, 2));
}

bool is_real(const CycloNumber& x) {
  return x == conj(x);
}

ComplexInterval embed(const CycloNumber& x, long precision_bits) {
  if (precision_bits < 32) {
    throw std::invalid_argument("embed: precision must be at least 32 bits");
  }
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits);
  auto boxes = zeta_boxes(prec);
  ComplexInterval acc(prec);
  for (int k = 0; k < 8; ++k) {
    if (sgn(x.coord(k)) == 0) continue;
    acc = acc + boxes[k].scaled_by(x.coord(k));
  }
  return acc;
}

Sign sign_of_real(const CycloNumber& x) {
  if (!im(x).is_zero()) {
    throw std::domain_error("sign_of_real: nonzero imaginary part in " + x.to_string());
  }
  if (x.is_zero()) return Sign::Zero;
  for (long prec = 64; prec <= 16384; prec *= 2) {
    int s = embed(x, prec).re().sign();
    if (s < 0) return Sign::Negative;
    if (s > 0) return Sign::Positive;
  }
  // Unreachable for genuinely nonzero input: the enclosure width shrinks like
  // 2^-prec while a nonzero algebraic number of this height stays bounded away
  // from zero far above 2^-16384.
  throw std::runtime_error("sign_of_real: undecided at the 16384-bit precision cap");
}

}  // namespace gepnerkit
