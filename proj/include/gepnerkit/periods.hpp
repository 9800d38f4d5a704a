#pragma once

#include <array>
#include <vector>

#include "gepnerkit/bigfloat.hpp"
#include "gepnerkit/cyclotomic.hpp"

namespace gepnerkit {

// Truncated solution branch of the order-4 hypergeometric period equation
// around the orbifold point: the j-th branch is
//
//   w_j(psi) = -(1/5) sum_{m>=1} Gamma(m/5) / (Gamma(m) Gamma(1 - m/5)^4)
//              (5 alpha^{2+j} psi)^m,        j = 0..3,
//
// and coeffs[m-1] stores the full coefficient of psi^m (root of unity and
// 5^m included). Coefficients with m = 0 (mod 5) vanish at the Gamma pole;
// the others follow the exact rational recursion
//
//   c_m = c_{m-5} (m-5)^4 / ((m-1)(m-2)(m-3)(m-4)),
//
// the psi-coefficient form of the period ODE, so within each residue class
// mod 5 the magnitudes |c_m| are strictly decreasing.
struct PeriodSeries {
  int j = 0;
  long terms = 0;
  long precision_bits = 0;
  std::vector<BigComplex> coeffs;
};

// Seeds m = 1..4 from the Gamma closed form at the stated precision, the rest
// by the recursion. Requires 0 <= j <= 3, terms >= 5, precision_bits >= 32.
PeriodSeries build_series(int j, long terms, long precision_bits);

struct PeriodValue {
  BigComplex value;
  BigFloat error_bound;  // |true w_j(psi) - value| <= error_bound, certified
};

// Partial sum at rational psi = psi_re + i psi_im with a geometric tail
// bound (the decreasing-|c_m| property makes the last five computed
// magnitudes dominate every later one). Requires |5 psi| < 1.
PeriodValue varpi_eval(const PeriodSeries& series, const Rational& psi_re, const Rational& psi_im);

using RationalMatrix4 = std::array<std::array<Rational, 4>, 4>;

// Exact matrix P with Phi_i = sum_j P[i][j] w_j; Phi_i is the coefficient of
// the integrated ch_i pairing in the large-moduli central charge.
const RationalMatrix4& phi_coefficients();

// Coefficients of w_j in the charge of O(m): once via P and ch(e^{mH}), once
// via the classical closed-form polynomials
//   ( (5m^3+3m^2+16m+6)/6, -(3m^2+3m+2)/2, -m^2, -m(m-1)/2 ).
std::array<Rational, 4> line_bundle_period_covector(long m);
std::array<Rational, 4> aspinwall_covector(long m);

// Exact agreement of the two expansions for every requested m.
bool aspinwall_check(const std::vector<long>& m_values);

// Substitutes w_j -> alpha^j into -Phi_i (the orbifold-point limit of
// -Z_psi / w_0) and compares all four slots with the Gepner covector.
bool gepner_limit_check();

}  // namespace gepnerkit
