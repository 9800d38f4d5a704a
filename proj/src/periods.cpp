#include "gepnerkit/periods.hpp"

#include <stdexcept>

#include "gepnerkit/charges.hpp"
#include "gepnerkit/interval.hpp"

namespace gepnerkit {

namespace {

// Gamma(m) for m = 1..4.
const long kSmallFactorial[5] = {0, 1, 1, 2, 6};

// (m-5)^4 / ((m-1)(m-2)(m-3)(m-4)) as an exact rational, m >= 6.
Rational recursion_factor(long m) {
  mpz_class num;
  mpz_class base(m - 5);
  mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), 4);
  mpz_class den = mpz_class(m - 1) * mpz_class(m - 2) * mpz_class(m - 3) * mpz_class(m - 4);
  Rational f(num, den);
  f.canonicalize();
  return f;
}

}  // namespace

PeriodSeries build_series(int j, long terms, long precision_bits) {
  if (j < 0 || j > 3) {
    throw std::invalid_argument("build_series: branch index must be 0..3, got " + std::to_string(j));
  }
  if (terms < 5) {
    throw std::invalid_argument("build_series: need at least 5 terms, got " + std::to_string(terms));
  }
  if (precision_bits < 32) {
    throw std::invalid_argument("build_series: precision must be at least 32 bits");
  }
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 64;

  PeriodSeries s;
  s.j = j;
  s.terms = terms;
  s.precision_bits = precision_bits;
  s.coeffs.reserve(static_cast<size_t>(terms));

  // Fifth roots of unity cos/sin(2 pi k / 5) at working precision.
  std::array<BigComplex, 5> root;
  for (int k = 0; k < 5; ++k) {
    root[k] = BigComplex(prec);
    if (k == 0) {
      mpfr_set_ui(root[k].re.raw(), 1, MPFR_RNDN);
      continue;
    }
    BigFloat theta(prec);
    mpfr_const_pi(theta.raw(), MPFR_RNDN);
    mpfr_mul_ui(theta.raw(), theta.raw(), 2u * static_cast<unsigned>(k), MPFR_RNDN);
    mpfr_div_ui(theta.raw(), theta.raw(), 5, MPFR_RNDN);
    mpfr_cos(root[k].re.raw(), theta.raw(), MPFR_RNDN);
    mpfr_sin(root[k].im.raw(), theta.raw(), MPFR_RNDN);
  }

  for (long m = 1; m <= terms; ++m) {
    BigComplex c(prec);
    if (m % 5 == 0) {
      s.coeffs.push_back(std::move(c));  // Gamma(1 - m/5) pole: exactly zero
      continue;
    }
    if (m <= 4) {
      // magnitude part: (1/5) Gamma(m/5) / (Gamma(m) Gamma(1-m/5)^4) * 5^m
      BigFloat x(prec), g1(prec), g2(prec), mag(prec);
      mpfr_set_si(x.raw(), m, MPFR_RNDN);
      mpfr_div_ui(x.raw(), x.raw(), 5, MPFR_RNDN);
      mpfr_gamma(g1.raw(), x.raw(), MPFR_RNDN);
      mpfr_set_si(x.raw(), 5 - m, MPFR_RNDN);
      mpfr_div_ui(x.raw(), x.raw(), 5, MPFR_RNDN);
      mpfr_gamma(g2.raw(), x.raw(), MPFR_RNDN);
      mpfr_pow_ui(g2.raw(), g2.raw(), 4, MPFR_RNDN);
      mpfr_mul_si(g2.raw(), g2.raw(), kSmallFactorial[m], MPFR_RNDN);
      mpfr_div(mag.raw(), g1.raw(), g2.raw(), MPFR_RNDN);
      mpfr_div_ui(mag.raw(), mag.raw(), 5, MPFR_RNDN);
      mpfr_mul_si(mag.raw(), mag.raw(), [&] {
        long p = 1;
        for (long t = 0; t < m; ++t) p *= 5;
        return p;
      }(), MPFR_RNDN);
      // times -alpha^{(2+j) m}
      int k = static_cast<int>(((2 + j) * m) % 5);
      mpfr_mul(c.re.raw(), mag.raw(), root[k].re.raw(), MPFR_RNDN);
      mpfr_mul(c.im.raw(), mag.raw(), root[k].im.raw(), MPFR_RNDN);
      mpfr_neg(c.re.raw(), c.re.raw(), MPFR_RNDN);
      mpfr_neg(c.im.raw(), c.im.raw(), MPFR_RNDN);
    } else {
      Rational f = recursion_factor(m);
      const BigComplex& prev = s.coeffs[static_cast<size_t>(m - 5 - 1)];
      mpfr_mul_q(c.re.raw(), prev.re.raw(), f.get_mpq_t(), MPFR_RNDN);
      mpfr_mul_q(c.im.raw(), prev.im.raw(), f.get_mpq_t(), MPFR_RNDN);
    }
    s.coeffs.push_back(std::move(c));
  }
  return s;
}

PeriodValue varpi_eval(const PeriodSeries& series, const Rational& psi_re, const Rational& psi_im) {
  Rational norm2 = psi_re * psi_re + psi_im * psi_im;
  if (25 * norm2 >= 1) {
    throw std::domain_error("varpi_eval: |5 psi| < 1 required (supported region)");
  }
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(series.precision_bits) + 64;

  // Certified enclosure of the partial sum of the *stored* coefficients.
  ComplexInterval psi(RealInterval::of_rational(psi_re, prec),
                      RealInterval::of_rational(psi_im, prec));
  ComplexInterval power = psi;
  ComplexInterval acc(prec);
  for (long m = 1; m <= series.terms; ++m) {
    const BigComplex& cm = series.coeffs[static_cast<size_t>(m - 1)];
    if (!(cm.re.is_zero() && cm.im.is_zero())) {
      ComplexInterval cbox(RealInterval(cm.re, cm.re), RealInterval(cm.im, cm.im));
      acc = acc + cbox * power;
    }
    if (m < series.terms) power = power * psi;
  }

  PeriodValue out;
  out.value = BigComplex(static_cast<mpfr_prec_t>(series.precision_bits));
  BigFloat half_width(prec);
  {
    BigFloat mid(prec), w(prec);
    mpfr_add(mid.raw(), acc.re().lo().raw(), acc.re().hi().raw(), MPFR_RNDN);
    mpfr_div_2ui(mid.raw(), mid.raw(), 1, MPFR_RNDN);
    mpfr_set(out.value.re.raw(), mid.raw(), MPFR_RNDN);
    mpfr_add(mid.raw(), acc.im().lo().raw(), acc.im().hi().raw(), MPFR_RNDN);
    mpfr_div_2ui(mid.raw(), mid.raw(), 1, MPFR_RNDN);
    mpfr_set(out.value.im.raw(), mid.raw(), MPFR_RNDN);
    w = acc.re().width();
    half_width = acc.im().width();
    if (mpfr_cmp(w.raw(), half_width.raw()) > 0) half_width = w;
    mpfr_div_2ui(half_width.raw(), half_width.raw(), 1, MPFR_RNDU);
    // midpoint was re-rounded to the output precision
    BigFloat ulp(prec);
    mpfr_set_ui_2exp(ulp.raw(), 1, -static_cast<mpfr_exp_t>(series.precision_bits) + 4, MPFR_RNDU);
    BigFloat scale(prec);
    mpfr_hypot(scale.raw(), out.value.re.raw(), out.value.im.raw(), MPFR_RNDU);
    mpfr_mul(ulp.raw(), ulp.raw(), scale.raw(), MPFR_RNDU);
    mpfr_add(half_width.raw(), half_width.raw(), ulp.raw(), MPFR_RNDU);
  }

  // Geometric tail: |c_m| decreases within each residue class mod 5, so the
  // last five computed magnitudes dominate every m > N, and
  //   sum_{m>N} |c_m| |psi|^m <= M |psi|^{N+1} / (1 - |psi|).
  BigFloat coeff_max(prec);
  BigFloat coeff_overall(prec);
  BigFloat t(prec);
  for (long m = 1; m <= series.terms; ++m) {
    const BigComplex& cm = series.coeffs[static_cast<size_t>(m - 1)];
    mpfr_hypot(t.raw(), cm.re.raw(), cm.im.raw(), MPFR_RNDU);
    if (m > series.terms - 5 && mpfr_cmp(t.raw(), coeff_max.raw()) > 0) {
      mpfr_set(coeff_max.raw(), t.raw(), MPFR_RNDU);
    }
    if (mpfr_cmp(t.raw(), coeff_overall.raw()) > 0) {
      mpfr_set(coeff_overall.raw(), t.raw(), MPFR_RNDU);
    }
  }
  BigFloat abs_psi(prec);
  {
    BigFloat n2 = BigFloat::of_rational(norm2, prec, MPFR_RNDU);
    mpfr_sqrt(abs_psi.raw(), n2.raw(), MPFR_RNDU);
  }
  BigFloat tail(prec);
  mpfr_pow_ui(tail.raw(), abs_psi.raw(), static_cast<unsigned long>(series.terms) + 1, MPFR_RNDU);
  mpfr_mul(tail.raw(), tail.raw(), coeff_max.raw(), MPFR_RNDU);
  BigFloat denom(prec);
  mpfr_ui_sub(denom.raw(), 1, abs_psi.raw(), MPFR_RNDD);
  mpfr_div(tail.raw(), tail.raw(), denom.raw(), MPFR_RNDU);

  // Slack for the seeds/recursion being round-to-nearest dyadics rather than
  // exact: relative error stays far below 2^-(precision_bits+32) because the
  // series was built with 64 guard bits; |psi|/(1-|psi|) < 1 in the supported
  // region, so a single max-coefficient term covers the whole sum.
  BigFloat slack(prec);
  mpfr_set_ui_2exp(slack.raw(), 1, -static_cast<mpfr_exp_t>(series.precision_bits) - 16, MPFR_RNDU);
  mpfr_mul(slack.raw(), slack.raw(), coeff_overall.raw(), MPFR_RNDU);

  out.error_bound = BigFloat(prec);
  mpfr_add(out.error_bound.raw(), half_width.raw(), tail.raw(), MPFR_RNDU);
  mpfr_add(out.error_bound.raw(), out.error_bound.raw(), slack.raw(), MPFR_RNDU);
  return out;
}

const RationalMatrix4& phi_coefficients() {
  static const RationalMatrix4 p = {{
      {Rational(1), Rational(-1), Rational(0), Rational(0)},
      {Rational(8, 15), Rational(-3, 10), Rational(0), Rational(1, 10)},
      {Rational(1, 5), Rational(-3, 5), Rational(-2, 5), Rational(-1, 5)},
      {Rational(1), Rational(0), Rational(0), Rational(0)},
  }};
  return p;
}

std::array<Rational, 4> line_bundle_period_covector(long m) {
  const auto& p = phi_coefficients();
  // integrated pairings of e^{mH}: (1, 5m, 5m^2/2, 5m^3/6)
  ChernVector lb = line_bundle(m);
  std::array<Rational, 4> pair = {rank(lb), h2_ch1(lb), h_ch2(lb), ch3_int(lb)};
  std::array<Rational, 4> out = {Rational(0), Rational(0), Rational(0), Rational(0)};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[j] += pair[static_cast<size_t>(i)] * p[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return out;
}

std::array<Rational, 4> aspinwall_covector(long m) {
  Rational q(m);
  return {
      (5 * q * q * q + 3 * q * q + 16 * q + 6) / 6,
      -(3 * q * q + 3 * q + 2) / 2,
      -q * q,
      -q * (q - 1) / 2,
  };
}

bool aspinwall_check(const std::vector<long>& m_values) {
  for (long m : m_values) {
    if (line_bundle_period_covector(m) != aspinwall_covector(m)) return false;
  }
  return true;
}

bool gepner_limit_check() {
  const auto& p = phi_coefficients();
  const auto& z = zG_dagger();
  for (int i = 0; i < 4; ++i) {
    CycloNumber limit;  // -Phi_i at w_j = alpha^j
    for (int j = 0; j < 4; ++j) {
      limit += CycloNumber::alpha().pow(j).scaled_by(p[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    if (-limit != z.coefficient(i)) return false;
  }
  return true;
}

}  // namespace gepnerkit
