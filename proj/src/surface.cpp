#include "gepnerkit/surface.hpp"

#include <stdexcept>
#include <string>

namespace gepnerkit {

ChernVector pushforward_chB(const SurfaceClass& s) {
  // Integrated pairings divided back into v-units (v = 1, H^2/5, H/5, pt/5).
  Rational R(s.R), r(s.r), dh(s.dh);
  return ChernVector(-R,                                         // ch0^B
                     r - R / 2,                                  // (H^2.ch1^B)/5
                     (dh - Rational(5, 8) * R) / 5,              // (H.ch2^B)/5
                     (s.n + Rational(5, 24) * r - Rational(5, 48) * R) / 5);
}

CycloNumber zG_prime(const SurfaceClass& s) {
  const auto& rc = rewrite_coefficients();
  Rational R(s.R), r(s.r), dh(s.dh);
  CycloNumber out = CycloNumber::from_rational(-s.n - Rational(5, 24) * r + Rational(5, 48) * R);
  out += rc.a.scaled_by(5 * (r - R / 2));
  out += CycloNumber::imaginary_unit() *
         (rc.b.scaled_by(dh - Rational(5, 8) * R) - rc.c.scaled_by(R));
  return out;
}

ExtendedRational mu_prime(const SurfaceClass& s) {
  if (s.R == 0) return ExtendedRational::negative_infinity();
  return ExtendedRational(Rational(5 * (Rational(1, 2) - make_ratio(s.r, s.R))));
}

CliffordResult clifford_verdict(const SurfaceClass& s) {
  if (s.R <= 0 || s.R != 2 * s.r) {
    throw std::domain_error(
        "clifford_verdict: the bound is about systems with R = 2 rank(F) > 0; got " +
        s.to_string());
  }
  CliffordResult out;
  out.margin = CycloNumber::from_rational(make_ratio(s.dh, s.R)) - clifford_bound();
  Sign sign = sign_of_real(out.margin);
  if (sign == Sign::Zero) {
    // impossible: the bound is irrational, dh/R rational
    throw std::logic_error("clifford_verdict: rational slope met the irrational bound");
  }
  out.verdict = sign == Sign::Positive ? Verdict::Pass : Verdict::Fail;
  return out;
}

ProofTrace r2_clifford_certificate(long dh) {
  if (dh <= 0) {
    throw std::domain_error("r2_clifford_certificate: the degree c1(F).h of a destabilizing "
                            "system must be positive, got " +
                            std::to_string(dh));
  }
  const Rational d(dh);
  ProofTrace trace("R = 2 coherent system with rank(F) = 1, c1(F).h = " + std::to_string(dh));

  if (dh >= 3) {
    trace.check("clifford-margin",
                "dh / R = dh/2 exceeds the coherent-system bound 5/8 + c/b = 1.381966...",
                CycloNumber::from_rational(d / 2), Relation::Gt, clifford_bound());
    trace.conclude(trace.overall_pass() ? "CONSISTENT" : "FAIL");
    return trace;
  }

  // dh <= 2: replay the exclusion. F has rank 1; its torsion-free reduction
  // is L (x) I_W for a line bundle L with c1(L).h = dh.
  trace.check("destabilizer-slope",
              "the sub-system (O_S -> 0) has mu' = 5/2 > 0 while the whole system has mu' = 0",
              mu_prime(SurfaceClass(1, 0, 0, Rational(0))).finite(), Relation::Gt, Rational(0));
  trace.assume("sections",
               "stability against (O_S -> 0) forces the map O_S^2 -> F to be injective on "
               "global sections, so h^0(L) >= h^0(F) >= 2 (per the source argument)");
  trace.check("restriction-vanishing",
              "c1(L(-C)).h = c1(L).h - 5 < 0 for the curve section C in |h|, so h^0(L(-C)) = 0 "
              "and restriction embeds H^0(L) into H^0(L|_C)",
              Rational(d - 5), Relation::Lt, Rational(0));
  trace.assume("clifford-theorem",
               "C is a smooth plane quintic curve (genus 6, not hyperelliptic) and L|_C is "
               "special, so Clifford's theorem bounds h^0(L|_C) <= deg(L|_C)/2 + 1; the "
               "inequality is strict because L|_C is neither 0 nor K_C (per the source argument)");
  trace.check("clifford-contradiction",
              "h^0(L|_C) >= 2 is incompatible with the strict bound h^0(L|_C) < dh/2 + 1, "
              "because dh/2 + 1 <= 2: no number satisfies 2 <= x < 2",
              Rational(d / 2 + 1), Relation::Le, Rational(2));

  trace.conclude(trace.overall_pass() ? "EXCLUDED" : "FAIL");
  return trace;
}

}  // namespace gepnerkit
