#pragma once

#include "gepnerkit/charges.hpp"
#include "gepnerkit/chern.hpp"
#include "gepnerkit/cyclotomic.hpp"
#include "gepnerkit/rational.hpp"
#include "gepnerkit/trace.hpp"

namespace gepnerkit {

// Numerical calculus for coherent systems (O_S^R -> F) on a smooth quintic
// surface S in X (hyperplane section, h^2 = 5), pushed forward to X.

// ch^B of the pushforward of the system, B = -H/2, as a ChernVector in
// v-units; the integrated pairings read
//   (ch0^B, H^2.ch1^B, H.ch2^B, ch3^B)
//     = (-R, 5(r - R/2), dh - (5/8) R, n + (5/24) r - (5/48) R).
ChernVector pushforward_chB(const SurfaceClass& s);

// The induced central charge on the system, written out directly:
//   Z = -n - (5/24) r + (5/48) R + 5 a (r - R/2) + i (b (dh - (5/8) R) - c R).
// Coincides exactly with rewrite_form_twisted(pushforward_chB(s)).
CycloNumber zG_prime(const SurfaceClass& s);

// Slope of the system: mu' = -H^2.ch1^B / R = 5 (1/2 - r/R), with the
// convention mu' = -inf when R = 0.
ExtendedRational mu_prime(const SurfaceClass& s);

// Degree bound for R = 2 rank(F) systems: passes iff dh / R exceeds the
// coherent-system bound 5/8 + c/b, decided by the exact sign of the margin.
struct CliffordResult {
  Verdict verdict;
  CycloNumber margin;  // dh/R - (5/8 + c/b); never exactly zero
};
CliffordResult clifford_verdict(const SurfaceClass& s);

// Machine-checked case analysis for R = 2, rank(F) = 1 systems: degrees
// dh <= 2 are excluded through the strict Clifford estimate on the curve
// section, dh >= 3 is consistent with the bound. dh <= 0 is rejected.
ProofTrace r2_clifford_certificate(long dh);

}  // namespace gepnerkit
