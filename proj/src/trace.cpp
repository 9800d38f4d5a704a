#include "gepnerkit/trace.hpp"

#include <stdexcept>

namespace gepnerkit {

LinearPoly LinearPoly::operator+(const LinearPoly& other) const {
  return {constant + other.constant, q_coeff + other.q_coeff};
}

LinearPoly LinearPoly::operator-(const LinearPoly& other) const {
  return {constant - other.constant, q_coeff - other.q_coeff};
}

LinearPoly LinearPoly::scaled_by(const Rational& f) const {
  return {constant * f, q_coeff * f};
}

std::string LinearPoly::to_string() const {
  if (sgn(q_coeff) == 0) return gepnerkit::to_string(constant);
  std::string out;
  if (sgn(constant) != 0) out = gepnerkit::to_string(constant) + " + ";
  return out + gepnerkit::to_string(q_coeff) + "|Q|";
}

const Rational& TraceValue::rational() const {
  if (kind_ != Kind::Rational) throw std::logic_error("TraceValue: not a rational");
  return rat_;
}

const CycloNumber& TraceValue::cyclo() const {
  if (kind_ != Kind::Cyclo) throw std::logic_error("TraceValue: not a cyclotomic value");
  return cyclo_;
}

const LinearPoly& TraceValue::poly() const {
  if (kind_ != Kind::Poly) throw std::logic_error("TraceValue: not an affine form");
  return poly_;
}

std::string TraceValue::to_string() const {
  switch (kind_) {
    case Kind::None:
      return "";
    case Kind::Rational:
      return gepnerkit::to_string(rat_);
    case Kind::Cyclo:
      return cyclo_.to_string();
    case Kind::Poly:
      return poly_.to_string();
  }
  return "";
}

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::Eq:
      return "=";
    case Relation::Lt:
      return "<";
    case Relation::Le:
      return "<=";
    case Relation::Gt:
      return ">";
    case Relation::Ge:
      return ">=";
    case Relation::Assumption:
      return "assumption";
  }
  return "?";
}

Relation relation_from_symbol(const std::string& s) {
  if (s == "=") return Relation::Eq;
  if (s == "<") return Relation::Lt;
  if (s == "<=") return Relation::Le;
  if (s == ">") return Relation::Gt;
  if (s == ">=") return Relation::Ge;
  if (s == "assumption") return Relation::Assumption;
  throw std::invalid_argument("unknown relation symbol: \"" + s + "\"");
}

namespace {

bool compare_with_sign(int s, Relation rel) {
  switch (rel) {
    case Relation::Eq:
      return s == 0;
    case Relation::Lt:
      return s < 0;
    case Relation::Le:
      return s <= 0;
    case Relation::Gt:
      return s > 0;
    case Relation::Ge:
      return s >= 0;
    case Relation::Assumption:
      return true;
  }
  return false;
}

// f(q) <rel> 0 for every q >= 0, for the affine form f.
bool poly_relation(const LinearPoly& f, Relation rel) {
  int c = sgn(f.constant);
  int q = sgn(f.q_coeff);
  switch (rel) {
    case Relation::Eq:
      return c == 0 && q == 0;
    case Relation::Le:
      return c <= 0 && q <= 0;
    case Relation::Lt:
      return c < 0 && q <= 0;
    case Relation::Ge:
      return c >= 0 && q >= 0;
    case Relation::Gt:
      return c > 0 && q >= 0;
    case Relation::Assumption:
      return true;
  }
  return false;
}

}  // namespace

bool evaluate_relation(const TraceValue& lhs, Relation rel, const TraceValue& rhs) {
  using Kind = TraceValue::Kind;
  if (rel == Relation::Assumption) return true;
  if (lhs.kind() == Kind::None || rhs.kind() == Kind::None) {
    throw std::logic_error("evaluate_relation: arithmetic relation with an empty side");
  }
  // Affine forms in |Q|: promote rationals to constant forms.
  if (lhs.kind() == Kind::Poly || rhs.kind() == Kind::Poly) {
    if (lhs.kind() == Kind::Cyclo || rhs.kind() == Kind::Cyclo) {
      throw std::logic_error("evaluate_relation: affine form vs cyclotomic unsupported");
    }
    LinearPoly a = lhs.kind() == Kind::Poly ? lhs.poly() : LinearPoly(lhs.rational(), Rational(0));
    LinearPoly b = rhs.kind() == Kind::Poly ? rhs.poly() : LinearPoly(rhs.rational(), Rational(0));
    return poly_relation(a - b, rel);
  }
  if (lhs.kind() == Kind::Rational && rhs.kind() == Kind::Rational) {
    return compare_with_sign(cmp(lhs.rational(), rhs.rational()), rel);
  }
  // At least one cyclotomic side: exact equality, or sign of the difference.
  CycloNumber a = lhs.kind() == Kind::Cyclo ? lhs.cyclo() : CycloNumber::from_rational(lhs.rational());
  CycloNumber b = rhs.kind() == Kind::Cyclo ? rhs.cyclo() : CycloNumber::from_rational(rhs.rational());
  if (rel == Relation::Eq) return a == b;
  return compare_with_sign(static_cast<int>(sign_of_real(a - b)), rel);
}

void ProofTrace::check(std::string name, std::string claim, TraceValue lhs, Relation rel,
                       TraceValue rhs) {
  ProofStep step;
  step.name = std::move(name);
  step.claim = std::move(claim);
  step.verdict = evaluate_relation(lhs, rel, rhs) ? Verdict::Pass : Verdict::Fail;
  step.lhs = std::move(lhs);
  step.rhs = std::move(rhs);
  step.relation = rel;
  steps_.push_back(std::move(step));
}

void ProofTrace::assume(std::string name, std::string claim) {
  ProofStep step;
  step.name = std::move(name);
  step.claim = std::move(claim);
  step.relation = Relation::Assumption;
  step.verdict = Verdict::Pass;
  steps_.push_back(std::move(step));
}

void ProofTrace::add_step(ProofStep step) {
  steps_.push_back(std::move(step));
}

bool ProofTrace::overall_pass() const {
  for (const auto& s : steps_) {
    if (s.verdict != Verdict::Pass) return false;
  }
  return true;
}

bool ProofTrace::replay() const {
  for (const auto& s : steps_) {
    Verdict again = evaluate_relation(s.lhs, s.relation, s.rhs) ? Verdict::Pass : Verdict::Fail;
    if (again != s.verdict) return false;
  }
  return true;
}

namespace {

std::string escape_cell(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else out += ch;
  }
  return out;
}

}  // namespace

std::string ProofTrace::to_markdown() const {
  std::string out = "## " + title_ + "\n\n";
  out += "| step | claim | check | verdict |\n";
  out += "|---|---|---|---|\n";
  for (const auto& s : steps_) {
    std::string check = s.relation == Relation::Assumption
                            ? "(assumption)"
                            : s.lhs.to_string() + " " + relation_symbol(s.relation) + " " +
                                  s.rhs.to_string();
    out += "| " + escape_cell(s.name) + " | " + escape_cell(s.claim) + " | " + escape_cell(check) +
           " | " + (s.verdict == Verdict::Pass ? "PASS" : "FAIL") + " |\n";
  }
  out += "\n**" + conclusion_ + "**\n";
  return out;
}

}  // namespace gepnerkit
