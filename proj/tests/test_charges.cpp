// The central charge covector, its closed rewrite form, the monodromy
// factorization, and the eigen equation tying them together.

#include <doctest.h>

#include <random>

#include "gepnerkit/charges.hpp"
#include "gepnerkit/chern.hpp"
#include "gepnerkit/cyclotomic.hpp"

using namespace gepnerkit;

namespace {

ChernVector random_sheaf_like(std::mt19937& rng) {
  std::uniform_int_distribution<long> small(-6, 6);
  // v2 in (1/10) Z and v3 in (1/30) Z keep the integrated pairings on the
  // integrality pattern of an honest sheaf.
  return ChernVector(Rational(std::abs(small(rng))), Rational(small(rng)),
                     make_ratio(small(rng), 10), make_ratio(small(rng), 30));
}

}  // namespace

TEST_CASE("charge normalization: Z(point) = -1") {
  CHECK(zG_dagger().evaluate(point_class()) == CycloNumber::from_integer(-1));
}

TEST_CASE("charge is linear") {
  std::mt19937 rng(37u);
  for (int trial = 0; trial < 200; ++trial) {
    ChernVector a = random_sheaf_like(rng), b = random_sheaf_like(rng);
    CHECK(zG_dagger().evaluate(a + b) ==
          zG_dagger().evaluate(a) + zG_dagger().evaluate(b));
    CHECK(zG_dagger().evaluate(a.scaled_by(make_ratio(3, 7))) ==
          zG_dagger().evaluate(a).scaled_by(make_ratio(3, 7)));
  }
}

TEST_CASE("rewrite form equals the defining covector") {
  for (long m = -3; m <= 3; ++m) CHECK(rewrite_equivalence_check(line_bundle(m)));
  CHECK(rewrite_equivalence_check(point_class()));
  CHECK(rewrite_equivalence_check(ChernVector(4, -2, -1, make_ratio(-1, 3))));
  std::mt19937 rng(41u);
  for (int trial = 0; trial < 300; ++trial) {
    ChernVector c = random_sheaf_like(rng);
    CHECK(rewrite_equivalence_check(c));
    CHECK(rewrite_form(c) == zG_dagger().evaluate(c));
    CHECK(rewrite_form_twisted(twist(c, make_ratio(-1, 2))) == zG_dagger().evaluate(c));
  }
}

TEST_CASE("rewrite constants are real and sit in their decimal windows") {
  const RewriteCoefficients& rc = rewrite_coefficients();
  CHECK(is_real(rc.a));
  CHECK(is_real(rc.b));
  CHECK(is_real(rc.c));
  auto inside = [](const CycloNumber& x, long target_millionths, long window_millionths) {
    CycloNumber lo = CycloNumber::from_rational(
        make_ratio(target_millionths - window_millionths, 1000000));
    CycloNumber hi = CycloNumber::from_rational(
        make_ratio(target_millionths + window_millionths, 1000000));
    return sign_of_real(x - lo) == Sign::Positive && sign_of_real(hi - x) == Sign::Positive;
  };
  CHECK(inside(rc.a, -234727, 10));
  CHECK(inside(rc.b, 688191, 10));
  CHECK(inside(rc.c, 520938, 10));
  CHECK(inside(strong_bg_bound(), 1513934, 100));
  CHECK(inside(clifford_bound(), 1381966, 10));
  // The two bounds really are built from b and c.
  CHECK(strong_bg_bound() * rc.b == rc.c.scaled_by(Rational(2)));
  CHECK((clifford_bound() - CycloNumber::from_rational(make_ratio(5, 8))) * rc.b == rc.c);
  // And b > c > 0 > a.
  CHECK(sign_of_real(rc.b - rc.c) == Sign::Positive);
  CHECK(sign_of_real(rc.c) == Sign::Positive);
  CHECK(sign_of_real(rc.a) == Sign::Negative);
}

TEST_CASE("large-volume charge") {
  // The class with ch^B = (1, 0, 0, 0) evaluates to (0, -5/6) at t = 1.
  ChernVector c(1, make_ratio(-1, 2), make_ratio(1, 8), make_ratio(-1, 48));
  CHECK(twist(c, make_ratio(-1, 2)) == structure_sheaf());
  auto [re1, im1] = zB_tH(c, Rational(1));
  CHECK(re1 == Rational(0));
  CHECK(im1 == make_ratio(-5, 6));
  // Doubling t scales the real part by t^2 = 4 here (it is pure (t^2/2)
  // H^2.ch1^B) and the imaginary part by the odd polynomial.
  auto [re2, im2] = zB_tH(c, Rational(2));
  CHECK(re2 == Rational(0));
  CHECK(im2 == make_ratio(-20, 3));
  CHECK_THROWS_AS(zB_tH(c, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(zB_tH(c, Rational(-1)), std::domain_error);
}

TEST_CASE("monodromy factorization") {
  const MonodromyMatrix& M = monodromy_matrix();
  CHECK(M.pow(5) == MonodromyMatrix());
  CHECK(M.pow(1) == M);
  for (unsigned k = 1; k < 5; ++k) CHECK_FALSE(M.pow(k) == MonodromyMatrix());
  CHECK(M.determinant() == Rational(1));
  auto cp = M.characteristic_polynomial();
  for (const Rational& coeff : cp) CHECK(coeff == Rational(1));
  // The factorization acts as advertised on line bundles.
  for (long m = -3; m <= 3; ++m) {
    CHECK(tensor_O1(line_bundle(m)) == line_bundle(m + 1));
    ChernVector st = seidel_thomas(line_bundle(m));
    CHECK(st == line_bundle(m) - structure_sheaf().scaled_by(euler_char(line_bundle(m))));
    CHECK(M.apply(line_bundle(m)) == seidel_thomas(line_bundle(m + 1)));
  }
  // apply agrees with matrix multiplication.
  std::mt19937 rng(43u);
  for (int trial = 0; trial < 100; ++trial) {
    ChernVector c = random_sheaf_like(rng);
    CHECK(M.apply(M.apply(c)) == (M * M).apply(c));
  }
}

TEST_CASE("eigen equation singles out the charge covector") {
  CHECK(gepner_eigen_check());
  CHECK(covector_eigen_check(zG_dagger(), CycloNumber::alpha()));
  for (const CycloNumber& r : eigen_residual(zG_dagger(), CycloNumber::alpha())) {
    CHECK(r.is_zero());
  }
  // Solving for the alpha eigen covector with the same normalization
  // reproduces Z; the alpha^2 branch is a different covector.
  CHECK(eigen_covector(CycloNumber::alpha()) == zG_dagger());
  CHECK_FALSE(eigen_covector(CycloNumber::alpha().pow(2)) == zG_dagger());
  CHECK_FALSE(covector_eigen_check(zG_dagger(), CycloNumber::alpha().pow(2)));
  // Z is NOT an eigenvector for the wrong eigenvalue, and a perturbed
  // covector is not an eigenvector at all.
  std::array<CycloNumber, 4> coeffs = zG_dagger().coefficients();
  coeffs[1] = coeffs[1] + CycloNumber::from_integer(1);
  CHECK_FALSE(covector_eigen_check(ChargeCovector(coeffs), CycloNumber::alpha()));
}

TEST_CASE("charge of the rank-4 example") {
  CycloNumber z = zG_dagger().evaluate(ChernVector(4, -2, -1, make_ratio(-1, 3)));
  std::array<Rational, 8> expected{6, 0, -2, 0, 0, 0, -2, 0};
  CHECK(z == CycloNumber::from_coords(expected));
}
