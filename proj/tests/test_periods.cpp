// Period branches around the orbifold point. The series coefficients are
// checked against a completely independent evaluation path: raw MPFR Gamma
// calls at higher precision, with the root-of-unity phase from cos/sin
// rather than the field embedding.

#include <doctest.h>

#include <mpfr.h>

#include <cmath>
#include <complex>

#include "gepnerkit/charges.hpp"
#include "gepnerkit/chern.hpp"
#include "gepnerkit/cyclotomic.hpp"
#include "gepnerkit/periods.hpp"
#include "period_oracle.hpp"

using namespace gepnerkit;
using period_oracle::to_complex;

TEST_CASE("series coefficients match the Gamma closed form to 1e-30") {
  mpfr_t ore, oim;
  mpfr_inits2(period_oracle::kPrec, ore, oim, (mpfr_ptr)nullptr);
  for (int j = 0; j <= 3; ++j) {
    PeriodSeries s = build_series(j, 60, 256);
    for (long m = 1; m <= 50; ++m) {
      if (m % 5 == 0) continue;
      period_oracle::coefficient(j, m, ore, oim);
      CHECK(period_oracle::relative_error(s.coeffs[static_cast<std::size_t>(m - 1)], ore, oim) <
            1e-30);
    }
  }
  mpfr_clears(ore, oim, (mpfr_ptr)nullptr);
}

TEST_CASE("coefficients at multiples of five vanish exactly") {
  for (int j = 0; j <= 3; ++j) {
    PeriodSeries s = build_series(j, 55, 128);
    for (long m = 5; m <= 55; m += 5) {
      CHECK(mpfr_zero_p(s.coeffs[static_cast<std::size_t>(m - 1)].re.raw()));
      CHECK(mpfr_zero_p(s.coeffs[static_cast<std::size_t>(m - 1)].im.raw()));
    }
  }
}

TEST_CASE("coefficients satisfy the rational recursion") {
  PeriodSeries s = build_series(1, 80, 256);
  mpfr_t lhs_re, lhs_im, rhs_re, rhs_im, scale, err, norm;
  mpfr_inits2(256, lhs_re, lhs_im, rhs_re, rhs_im, scale, err, norm, (mpfr_ptr)nullptr);
  for (long m = 6; m <= 80; ++m) {
    const BigComplex& cm = s.coeffs[static_cast<std::size_t>(m - 1)];
    const BigComplex& cp = s.coeffs[static_cast<std::size_t>(m - 6)];
    // c_m (m-1)(m-2)(m-3)(m-4) - c_{m-5} (m-5)^4 = 0
    mpfr_set_si(scale, (m - 1) * (m - 2), MPFR_RNDN);
    mpfr_mul_si(scale, scale, (m - 3) * (m - 4), MPFR_RNDN);
    mpfr_mul(lhs_re, cm.re.raw(), scale, MPFR_RNDN);
    mpfr_mul(lhs_im, cm.im.raw(), scale, MPFR_RNDN);
    mpfr_set_si(scale, (m - 5) * (m - 5), MPFR_RNDN);
    mpfr_mul(scale, scale, scale, MPFR_RNDN);
    mpfr_mul(rhs_re, cp.re.raw(), scale, MPFR_RNDN);
    mpfr_mul(rhs_im, cp.im.raw(), scale, MPFR_RNDN);
    mpfr_sub(lhs_re, lhs_re, rhs_re, MPFR_RNDN);
    mpfr_sub(lhs_im, lhs_im, rhs_im, MPFR_RNDN);
    mpfr_hypot(err, lhs_re, lhs_im, MPFR_RNDN);
    mpfr_hypot(norm, rhs_re, rhs_im, MPFR_RNDN);
    if (mpfr_zero_p(norm)) {
      CHECK(mpfr_zero_p(err));  // both classes vanish at multiples of five
    } else {
      mpfr_div(err, err, norm, MPFR_RNDN);
      CHECK(mpfr_get_d(err, MPFR_RNDN) < 1e-60);
    }
  }
  mpfr_clears(lhs_re, lhs_im, rhs_re, rhs_im, scale, err, norm, (mpfr_ptr)nullptr);
}

TEST_CASE("magnitudes decrease within each residue class") {
  PeriodSeries s = build_series(0, 60, 128);
  for (long m = 6; m <= 60; ++m) {
    if (m % 5 == 0) continue;
    auto mag = [&](long idx) {
      const BigComplex& c = s.coeffs[static_cast<std::size_t>(idx - 1)];
      return std::abs(to_complex(c));
    };
    CHECK(mag(m) < mag(m - 5));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(build_series(4, 50, 128), std::invalid_argument);
  CHECK_THROWS_AS(build_series(-1, 50, 128), std::invalid_argument);
  CHECK_THROWS_AS(build_series(0, 4, 128), std::invalid_argument);
  CHECK_THROWS_AS(build_series(0, 50, 16), std::invalid_argument);
  PeriodSeries s = build_series(0, 50, 128);
  CHECK_THROWS_AS(varpi_eval(s, make_ratio(1, 5), Rational(0)), std::domain_error);
  CHECK_THROWS_AS(varpi_eval(s, make_ratio(3, 20), make_ratio(1, 5)), std::domain_error);
  CHECK_NOTHROW(varpi_eval(s, make_ratio(19, 100), Rational(0)));
}

TEST_CASE("certified tail bound dominates the truncation error") {
  // At |5 psi| = 3/4 the tail is fat enough to measure: the 10-term value
  // must sit within its own certified bound of the 60-term value.
  PeriodSeries coarse = build_series(2, 10, 256);
  PeriodSeries fine = build_series(2, 60, 256);
  for (long num : {1L, 2L, 3L}) {
    PeriodValue v10 = varpi_eval(coarse, make_ratio(num, 20), Rational(0));
    PeriodValue v60 = varpi_eval(fine, make_ratio(num, 20), Rational(0));
    double gap = std::abs(to_complex(v10.value) - to_complex(v60.value));
    double bound10 = mpfr_get_d(v10.error_bound.raw(), MPFR_RNDU);
    double bound60 = mpfr_get_d(v60.error_bound.raw(), MPFR_RNDU);
    CHECK(gap <= bound10);
    CHECK(bound60 < bound10);
    CHECK(bound10 > 0.0);
  }
  // Complex evaluation points are accepted and bounded the same way.
  PeriodValue vc10 = varpi_eval(coarse, make_ratio(1, 10), make_ratio(1, 10));
  PeriodValue vc60 = varpi_eval(fine, make_ratio(1, 10), make_ratio(1, 10));
  double gap = std::abs(to_complex(vc10.value) - to_complex(vc60.value));
  CHECK(gap <= mpfr_get_d(vc10.error_bound.raw(), MPFR_RNDU));
}

TEST_CASE("branch ratios approach powers of alpha near the orbifold point") {
  PeriodSeries s0 = build_series(0, 250, 256);
  PeriodValue w0 = varpi_eval(s0, make_ratio(1, 1000), Rational(0));
  std::complex<double> w0v = to_complex(w0.value);
  const double two_pi_fifth = 2.0 * std::acos(-1.0) / 5.0;
  for (int j = 1; j <= 3; ++j) {
    PeriodSeries sj = build_series(j, 250, 256);
    PeriodValue wj = varpi_eval(sj, make_ratio(1, 1000), Rational(0));
    std::complex<double> target = std::polar(1.0, two_pi_fifth * j);
    CHECK(std::abs(to_complex(wj.value) / w0v - target) < 5e-3);
  }
}

TEST_CASE("polynomial period covectors match the classical closed form") {
  std::vector<long> ms;
  for (long m = -6; m <= 6; ++m) ms.push_back(m);
  CHECK(aspinwall_check(ms));
  for (long m = -6; m <= 6; ++m) {
    auto via_phi = line_bundle_period_covector(m);
    auto classical = aspinwall_covector(m);
    for (int i = 0; i < 4; ++i) CHECK(via_phi[i] == classical[i]);
  }
  // Spot values of the classical polynomials at m = 1:
  // ((5+3+16+6)/6, -(3+3+2)/2, -1, 0).
  auto one = aspinwall_covector(1);
  CHECK(one[0] == Rational(5));
  CHECK(one[1] == Rational(-4));
  CHECK(one[2] == Rational(-1));
  CHECK(one[3] == Rational(0));
}

TEST_CASE("orbifold limit of the period covectors is the charge covector") {
  CHECK(gepner_limit_check());
}
