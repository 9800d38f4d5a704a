#pragma once

#include "gepnerkit/chern.hpp"
#include "gepnerkit/cyclotomic.hpp"
#include "gepnerkit/trace.hpp"

namespace gepnerkit {

// Classical discriminant inequality Delta(E) . H >= 0 for a slope-semistable
// sheaf class of positive rank (the caller vouches for semistability; only
// the arithmetic is decided here). Throws std::domain_error on rank < 1.
Verdict classical_bg(const ChernVector& c);

// The sharpened bound at slope -1/2: Delta . H / rank^2 > 2c/b. Requires an
// even rank >= 2 with v1 = -v0/2 exactly (the hypothesis of the bound);
// anything else throws std::domain_error explaining the slope condition.
// The margin Delta.H/rank^2 - 2c/b is returned exactly; it can never be zero
// because the bound is irrational.
struct StrongBGResult {
  Verdict verdict = Verdict::Fail;
  CycloNumber margin;
};
StrongBGResult strong_bg_verdict(const ChernVector& c);

// Discriminant floor 2 - 2/rank^2 for stable sheaves on a (2,5) K3 surface;
// rank >= 2 required.
Rational k3_bound(long rank);

// Machine-checked case analysis excluding rank-two slope,-1/2 stable sheaves
// with c2 . H = 2 (the one value wedged between the classical bound and the
// sharpened one); c2H >= 3 instead certifies consistency with an exact
// positive margin. c2H < 2 is rejected: the classical inequality already
// forces c2 . H >= 5/4, hence >= 2 by integrality.
ProofTrace rank2_certificate(long c2H);

}  // namespace gepnerkit
