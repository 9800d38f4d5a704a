#include "gepnerkit/json_io.hpp"

#include <stdexcept>

namespace gepnerkit {

namespace {

// Shared complaint shape so the CLI can map any malformed input to exit 2.
[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("malformed input: " + what);
}

const Json& expect_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    bad(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

long expect_integer(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (is_integer(q)) return to_long(q);
  }
  bad(std::string(what) + " must be an integer");
}

}  // namespace

Json rational_to_json(const Rational& q) {
  return to_string(q);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad("expected a rational as a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json cyclo_to_json(const CycloNumber& x) {
  Json out = Json::array();
  for (const Rational& c : x.coords()) out.push_back(to_string(c));
  return out;
}

CycloNumber cyclo_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 8) bad("expected 8 basis coordinates");
  std::array<Rational, 8> coords;
  for (int k = 0; k < 8; ++k) coords[static_cast<std::size_t>(k)] = rational_from_json(j.at(k));
  return CycloNumber::from_coords(coords);
}

Json chern_to_json(const ChernVector& c) {
  Json ch = Json::array({to_string(c.v0), to_string(c.v1), to_string(c.v2), to_string(c.v3)});
  return Json{{"ch", std::move(ch)}};
}

ChernVector chern_from_json(const Json& j) {
  const Json& arr = j.is_object() ? expect_field(j, "ch") : j;
  if (!arr.is_array() || arr.size() != 4) bad("expected {\"ch\": [v0, v1, v2, v3]}");
  return ChernVector(rational_from_json(arr.at(0)), rational_from_json(arr.at(1)),
                     rational_from_json(arr.at(2)), rational_from_json(arr.at(3)));
}

Json real_interval_to_json(const RealInterval& box, int digits) {
  return Json{{"lo", box.lo().decimal(digits, MPFR_RNDD)},
              {"hi", box.hi().decimal(digits, MPFR_RNDU)}};
}

Json box_to_json(const ComplexInterval& box, int digits) {
  return Json{{"re_lo", box.re().lo().decimal(digits, MPFR_RNDD)},
              {"re_hi", box.re().hi().decimal(digits, MPFR_RNDU)},
              {"im_lo", box.im().lo().decimal(digits, MPFR_RNDD)},
              {"im_hi", box.im().hi().decimal(digits, MPFR_RNDU)}};
}

Json surface_class_to_json(const SurfaceClass& s) {
  return Json{{"R", s.R}, {"r", s.r}, {"dh", s.dh}, {"n", to_string(s.n)}};
}

SurfaceClass surface_class_from_json(const Json& j) {
  long R = expect_integer(expect_field(j, "R"), "R");
  long r = expect_integer(expect_field(j, "r"), "r");
  long dh = expect_integer(expect_field(j, "dh"), "dh");
  Rational n = j.contains("n") ? rational_from_json(j.at("n")) : Rational(0);
  return SurfaceClass(R, r, dh, std::move(n));
}

Json trace_value_to_json(const TraceValue& v) {
  switch (v.kind()) {
    case TraceValue::Kind::None:
      return nullptr;
    case TraceValue::Kind::Rational:
      return Json{{"kind", "rational"}, {"value", to_string(v.rational())}};
    case TraceValue::Kind::Cyclo:
      return Json{{"kind", "cyclotomic"}, {"value", cyclo_to_json(v.cyclo())}};
    case TraceValue::Kind::Poly:
      return Json{{"kind", "affine"},
                  {"constant", to_string(v.poly().constant)},
                  {"q_coeff", to_string(v.poly().q_coeff)}};
  }
  return nullptr;
}

TraceValue trace_value_from_json(const Json& j) {
  if (j.is_null()) return TraceValue();
  std::string kind = expect_field(j, "kind").get<std::string>();
  if (kind == "rational") return TraceValue(rational_from_json(expect_field(j, "value")));
  if (kind == "cyclotomic") return TraceValue(cyclo_from_json(expect_field(j, "value")));
  if (kind == "affine") {
    return TraceValue(LinearPoly(rational_from_json(expect_field(j, "constant")),
                                 rational_from_json(expect_field(j, "q_coeff"))));
  }
  bad("unknown trace value kind \"" + kind + "\"");
}

Json trace_to_json(const ProofTrace& t) {
  Json steps = Json::array();
  for (const ProofStep& s : t.steps()) {
    steps.push_back(Json{{"name", s.name},
                         {"claim", s.claim},
                         {"lhs", trace_value_to_json(s.lhs)},
                         {"relation", relation_symbol(s.relation)},
                         {"rhs", trace_value_to_json(s.rhs)},
                         {"verdict", s.verdict == Verdict::Pass ? "PASS" : "FAIL"}});
  }
  return Json{{"title", t.title()}, {"steps", std::move(steps)}, {"conclusion", t.conclusion()}};
}

ProofTrace trace_from_json(const Json& j) {
  ProofTrace t(expect_field(j, "title").get<std::string>());
  const Json& steps = expect_field(j, "steps");
  if (!steps.is_array()) bad("\"steps\" must be an array");
  for (const Json& js : steps) {
    ProofStep s;
    s.name = expect_field(js, "name").get<std::string>();
    s.claim = expect_field(js, "claim").get<std::string>();
    s.lhs = trace_value_from_json(expect_field(js, "lhs"));
    s.relation = relation_from_symbol(expect_field(js, "relation").get<std::string>());
    s.rhs = trace_value_from_json(expect_field(js, "rhs"));
    std::string verdict = expect_field(js, "verdict").get<std::string>();
    if (verdict != "PASS" && verdict != "FAIL") bad("verdict must be PASS or FAIL");
    s.verdict = verdict == "PASS" ? Verdict::Pass : Verdict::Fail;
    t.add_step(std::move(s));
  }
  t.conclude(expect_field(j, "conclusion").get<std::string>());
  return t;
}

Json labeled_class_to_json(const LabeledClass& x) {
  Json out = chern_to_json(x.ch);
  out["shift"] = x.shift;
  out["tag"] = stability_tag_name(x.tag);
  return out;
}

LabeledClass labeled_class_from_json(const Json& j) {
  ChernVector ch = chern_from_json(j);
  long shift = j.contains("shift") ? expect_integer(j.at("shift"), "shift") : 0;
  StabilityTag tag = StabilityTag::Unknown;
  if (j.contains("tag")) {
    try {
      tag = stability_tag_from_name(j.at("tag").get<std::string>());
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
  }
  try {
    return LabeledClass(std::move(ch), static_cast<int>(shift), tag);
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

Json slope_key_to_json(const SlopeKey& k) {
  if (k.is_positive_infinity()) return "+inf";
  if (k.finite().is_rational()) return to_string(k.finite().rational_value());
  return cyclo_to_json(k.finite());
}

SlopeKey slope_key_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "+inf") return SlopeKey::positive_infinity();
  if (j.is_array()) {
    try {
      return SlopeKey(cyclo_from_json(j));
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
  }
  return SlopeKey(rational_from_json(j));
}

std::vector<HNPiece> hn_pieces_from_json(const Json& j) {
  const Json& arr = j.is_object() ? expect_field(j, "pieces") : j;
  if (!arr.is_array()) bad("expected {\"pieces\": [...]}");
  std::vector<HNPiece> out;
  out.reserve(arr.size());
  for (const Json& jp : arr) {
    HNPiece p;
    p.ch = chern_from_json(jp);
    p.key = slope_key_from_json(expect_field(jp, "key"));
    out.push_back(std::move(p));
  }
  return out;
}

Json hn_result_to_json(const HNResult& r) {
  Json pieces = Json::array();
  for (const HNPiece& p : r.pieces) {
    Json jp = chern_to_json(p.ch);
    jp["key"] = slope_key_to_json(p.key);
    pieces.push_back(std::move(jp));
  }
  Json notes = Json::array();
  for (const std::string& n : r.notes) notes.push_back(n);
  return Json{{"pieces", std::move(pieces)},
              {"verdict", r.verdict == Verdict::Pass ? "PASS" : "FAIL"},
              {"notes", std::move(notes)}};
}

std::vector<LabeledClass> labeled_classes_from_json(const Json& j) {
  const Json& arr = j.is_object() ? expect_field(j, "pieces") : j;
  if (!arr.is_array()) bad("expected {\"pieces\": [...]}");
  std::vector<LabeledClass> out;
  out.reserve(arr.size());
  for (const Json& jp : arr) out.push_back(labeled_class_from_json(jp));
  return out;
}

}  // namespace gepnerkit
