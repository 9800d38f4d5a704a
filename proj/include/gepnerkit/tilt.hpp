#pragma once

#include <string>
#include <vector>

#include "gepnerkit/charges.hpp"
#include "gepnerkit/chern.hpp"
#include "gepnerkit/cyclotomic.hpp"
#include "gepnerkit/interval.hpp"
#include "gepnerkit/rational.hpp"
#include "gepnerkit/trace.hpp"

namespace gepnerkit {

// Stability of an actual sheaf is never computed here -- it arrives as a
// declared label, and the library checks the arithmetic consequences.
enum class StabilityTag { MuSemistable, MuStable, TorsionDim1, Unknown };

std::string stability_tag_name(StabilityTag t);
StabilityTag stability_tag_from_name(const std::string& s);

// A K-theory class with its position in the tilted heart (shift 0 for the
// torsion part, 1 for shifted torsion-free) and its declared stability.
struct LabeledClass {
  ChernVector ch;
  int shift = 0;  // 0 or 1
  StabilityTag tag = StabilityTag::Unknown;

  LabeledClass() = default;
  // Validates shift in {0, 1} and, for torsion-dim<=1, v0 = v1 = 0;
  // throws std::invalid_argument otherwise.
  LabeledClass(ChernVector c, int shift_, StabilityTag tag_);

  // (-1)^shift . ch, the class the charge actually sees.
  ChernVector effective_class() const;
};

// Twisted slope on Coh(X) at B = -H/2: H^2.ch1^B / rank = 5(v1 + v0/2)/v0,
// with the torsion convention mu = +inf when v0 = 0.
ExtendedRational mu_BH(const ChernVector& c);

// The two sides of the torsion pair defining the tilted heart: semistable
// classes of positive slope (and torsion) belong to T, slope <= 0 to F, and
// an unknown label gets an honest refusal.
enum class TiltSide { T, F, NotClassifiable };
std::string tilt_side_name(TiltSide s);
TiltSide classify_tilt(const LabeledClass& x);

// Exact real slope value extended by the +inf sentinel, ordered by the exact
// sign of differences. Construction from a complex (im != 0) value throws.
class SlopeKey {
 public:
  SlopeKey() = default;  // zero
  SlopeKey(Rational q);
  SlopeKey(CycloNumber v);
  static SlopeKey positive_infinity();

  bool is_positive_infinity() const { return infinite_; }
  const CycloNumber& finite() const;  // throws on +inf

  int compare(const SlopeKey& other) const;
  bool operator==(const SlopeKey& other) const { return compare(other) == 0; }

  std::string to_string() const;

 private:
  bool infinite_ = false;
  CycloNumber value_;
};

// Slope induced by the central charge: Im Z(x) / H^2.ch1^B(x) on the
// shift-adjusted class, +inf when the denominator vanishes.
SlopeKey nu_G(const LabeledClass& x);

// Certified interval containing arg(Z(c))/pi normalized into (0, 2].
// Values on the axes (Z real or purely imaginary) come back as exact points
// 1, 2, 1/2, 3/2; otherwise the width shrinks with the requested precision.
// Throws std::domain_error when Z(c) = 0.
RealInterval phase_G(const ChernVector& c, long precision_bits = 256);

// Arithmetic shadow of the positivity lemma for the conjectural heart, on a
// class decomposed into the generating pieces: shifted mu-stable sheaves
// with H^2.ch1^B = 0, and torsion classes of dimension <= 1. Checks, piece
// by piece and for the sum: H^2.ch1^B >= 0; Im Z >= 0 (using the sharpened
// discriminant bound on each stable piece -- the conjecture-dependent
// input); and -Re Z > 0 when Im Z = 0. A piece that is not of generator
// shape throws std::domain_error.
ProofTrace lemma_property_check(const std::vector<LabeledClass>& decomposition);
ProofTrace lemma_property_check(const LabeledClass& x);

// Harder-Narasimhan bookkeeping: sort declared pieces by strictly
// decreasing slope key. The verdict fails when `strict` is set and two
// pieces with different classes share a key, or when a piece fails the
// sheaf-like integrality / parity screen (2 v1 + v0 must be an integer).
struct HNPiece {
  ChernVector ch;
  SlopeKey key;
};
struct HNResult {
  std::vector<HNPiece> pieces;  // sorted, weakly decreasing keys
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> notes;  // one line per reason the verdict failed
};
HNResult hn_sort(std::vector<HNPiece> pieces, bool strict);

}  // namespace gepnerkit
