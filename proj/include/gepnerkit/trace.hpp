#pragma once

#include <string>
#include <vector>

#include "gepnerkit/cyclotomic.hpp"
#include "gepnerkit/rational.hpp"

namespace gepnerkit {

enum class Verdict { Pass, Fail };

// constant + q_coeff * |Q|, where |Q| ranges over all non-negative values: a
// one-variable affine form for claims quantified over the symbolic point
// count of a duality defect. Order relations compare for every |Q| >= 0.
struct LinearPoly {
  Rational constant = Rational(0);
  Rational q_coeff = Rational(0);

  LinearPoly() = default;
  LinearPoly(Rational c, Rational q) : constant(std::move(c)), q_coeff(std::move(q)) {}

  LinearPoly operator+(const LinearPoly& other) const;
  LinearPoly operator-(const LinearPoly& other) const;
  LinearPoly scaled_by(const Rational& f) const;
  bool operator==(const LinearPoly& other) const = default;

  std::string to_string() const;  // "-1/6 + 1/2|Q|"
};

// One side of a trace step: nothing (assumption steps), an exact rational, a
// cyclotomic value, or an affine form in |Q|.
class TraceValue {
 public:
  enum class Kind { None, Rational, Cyclo, Poly };

  TraceValue() : kind_(Kind::None) {}
  TraceValue(Rational r) : kind_(Kind::Rational), rat_(std::move(r)) {}
  TraceValue(long v) : TraceValue(Rational(v)) {}
  TraceValue(CycloNumber c) : kind_(Kind::Cyclo), cyclo_(std::move(c)) {}
  TraceValue(LinearPoly p) : kind_(Kind::Poly), poly_(std::move(p)) {}

  Kind kind() const { return kind_; }
  const Rational& rational() const;
  const CycloNumber& cyclo() const;
  const LinearPoly& poly() const;

  bool operator==(const TraceValue& other) const = default;
  std::string to_string() const;

 private:
  Kind kind_;
  Rational rat_;
  CycloNumber cyclo_;
  LinearPoly poly_;
};

enum class Relation { Eq, Lt, Le, Gt, Ge, Assumption };

std::string relation_symbol(Relation r);
Relation relation_from_symbol(const std::string& s);

// Decides lhs <rel> rhs exactly. Rational-vs-rational compares directly;
// anything involving a CycloNumber goes through exact equality or
// sign_of_real of the difference; affine forms compare for all |Q| >= 0.
// Assumption steps are vacuously true. Mixing polys with cyclotomic values
// is unsupported and throws.
bool evaluate_relation(const TraceValue& lhs, Relation rel, const TraceValue& rhs);

struct ProofStep {
  std::string name;
  std::string claim;
  TraceValue lhs, rhs;
  Relation relation = Relation::Assumption;
  Verdict verdict = Verdict::Pass;

  bool operator==(const ProofStep& other) const = default;
};

// Ordered list of named arithmetic claims with verdicts; serializes a
// case-analysis argument so it can be re-run from its own record.
class ProofTrace {
 public:
  explicit ProofTrace(std::string title) : title_(std::move(title)) {}

  // Evaluates the relation now and records the step with its verdict.
  void check(std::string name, std::string claim, TraceValue lhs, Relation rel, TraceValue rhs);
  // Records a quoted, non-arithmetic input ("per the source argument").
  void assume(std::string name, std::string claim);
  void add_step(ProofStep step);

  const std::string& title() const { return title_; }
  const std::vector<ProofStep>& steps() const { return steps_; }

  bool overall_pass() const;  // every step passed

  // EXCLUDED / CONSISTENT / PASS / FAIL — the headline the caller assigns.
  const std::string& conclusion() const { return conclusion_; }
  void conclude(std::string text) { conclusion_ = std::move(text); }

  // Re-evaluates every arithmetic step from the stored values; true iff each
  // recorded verdict matches the re-derived one.
  bool replay() const;

  std::string to_markdown() const;

  bool operator==(const ProofTrace& other) const = default;

 private:
  std::string title_;
  std::vector<ProofStep> steps_;
  std::string conclusion_;
};

}  // namespace gepnerkit
