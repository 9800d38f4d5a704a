// Serialization: byte-deterministic rendering, lossless round trips, and
// loud rejection of malformed input.

#include <doctest.h>

#include "gepnerkit/bg.hpp"
#include "gepnerkit/chern.hpp"
#include "gepnerkit/cyclotomic.hpp"
#include "gepnerkit/json_io.hpp"
#include "gepnerkit/tilt.hpp"

using namespace gepnerkit;

TEST_CASE("rational round trip") {
  for (const char* text : {"0", "7", "-3", "1/2", "-22/7", "355/113"}) {
    Rational q = parse_rational(text);
    CHECK(rational_from_json(rational_to_json(q)) == q);
    CHECK(rational_to_json(q).get<std::string>() == text);
  }
  // Integers are accepted on input.
  CHECK(rational_from_json(Json(5)) == Rational(5));
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json("banana")), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
}

TEST_CASE("cyclotomic and class round trips") {
  CycloNumber x = strong_bg_bound() * CycloNumber::zeta() - CycloNumber::from_rational(make_ratio(2, 3));
  CHECK(cyclo_from_json(cyclo_to_json(x)) == x);
  CHECK(cyclo_to_json(x).size() == 8);
  CHECK_THROWS_AS(cyclo_from_json(Json::array({"1", "2"})), std::invalid_argument);

  ChernVector c(4, -2, -1, make_ratio(-1, 3));
  CHECK(chern_from_json(chern_to_json(c)) == c);
  // Both the wrapped and the bare spelling parse.
  CHECK(chern_from_json(Json::parse(R"({"ch": ["4","-2","-1","-1/3"]})")) == c);
  CHECK(chern_from_json(Json::parse(R"(["4","-2","-1","-1/3"])")) == c);
  CHECK_THROWS_AS(chern_from_json(Json::parse(R"(["1","2","3"])")), std::invalid_argument);
  CHECK_THROWS_AS(chern_from_json(Json::parse(R"({"no": 1})")), std::invalid_argument);

  SurfaceClass s(2, 1, 3, make_ratio(-1, 2));
  SurfaceClass back = surface_class_from_json(surface_class_to_json(s));
  CHECK(back.R == s.R);
  CHECK(back.r == s.r);
  CHECK(back.dh == s.dh);
  CHECK(back.n == s.n);
  CHECK_THROWS_AS(surface_class_from_json(Json::parse(R"({"R": 2})")), std::invalid_argument);
  CHECK_THROWS_AS(surface_class_from_json(Json::parse(R"({"R": 2, "r": 1, "dh": 0, "n": "1/3"})")),
                  std::invalid_argument);
}

TEST_CASE("boxes render as outward-rounded decimal strings") {
  Json box = box_to_json(embed(CycloNumber::alpha(), 256), 20);
  for (const char* key : {"re_lo", "re_hi", "im_lo", "im_hi"}) {
    CHECK(box.contains(key));
    CHECK(box.at(key).is_string());
  }
  // alpha = exp(2 pi i/5): re ~ 0.309017, im ~ 0.951057, and lo <= hi as
  // decimals.
  double re_lo = std::stod(box.at("re_lo").get<std::string>());
  double re_hi = std::stod(box.at("re_hi").get<std::string>());
  double im_lo = std::stod(box.at("im_lo").get<std::string>());
  CHECK(re_lo <= re_hi);
  CHECK(re_lo == doctest::Approx(0.309017).epsilon(1e-5));
  CHECK(im_lo == doctest::Approx(0.951057).epsilon(1e-5));
}

TEST_CASE("trace round trip is lossless") {
  ProofTrace t = rank2_certificate(2);
  Json j = trace_to_json(t);
  ProofTrace back = trace_from_json(j);
  CHECK(back == t);
  CHECK(back.replay());
  CHECK(trace_to_json(back).dump() == j.dump());  // byte-stable

  // Every value kind survives: rational, cyclotomic, affine form, empty.
  ProofTrace mixed("kinds");
  mixed.check("r", "rational", Rational(1), Relation::Lt, Rational(2));
  mixed.check("c", "cyclotomic", TraceValue(strong_bg_bound()), Relation::Gt,
              TraceValue(Rational(1)));
  mixed.check("p", "affine", TraceValue(LinearPoly(make_ratio(-1, 6), make_ratio(1, 2))),
              Relation::Eq, TraceValue(LinearPoly(make_ratio(-1, 6), make_ratio(1, 2))));
  mixed.assume("a", "quoted input");
  mixed.conclude("PASS");
  CHECK(trace_from_json(trace_to_json(mixed)) == mixed);

  // A tampered verdict in the serialized form still parses, but replay
  // exposes it.
  Json forged = trace_to_json(mixed);
  forged["steps"][0]["verdict"] = "FAIL";
  ProofTrace dishonest = trace_from_json(forged);
  CHECK_FALSE(dishonest.replay());

  CHECK_THROWS_AS(trace_from_json(Json::parse(R"({"title": "x"})")), std::invalid_argument);
}

TEST_CASE("labeled classes and slope keys") {
  LabeledClass x(ChernVector(2, -1, make_ratio(-1, 5), 0), 1, StabilityTag::MuStable);
  LabeledClass back = labeled_class_from_json(labeled_class_to_json(x));
  CHECK(back.ch == x.ch);
  CHECK(back.shift == 1);
  CHECK(back.tag == StabilityTag::MuStable);
  CHECK_THROWS_AS(labeled_class_from_json(Json::parse(R"({"ch": ["1","0","0","0"], "shift": 3})")),
                  std::invalid_argument);

  SlopeKey inf = SlopeKey::positive_infinity();
  CHECK(slope_key_from_json(slope_key_to_json(inf)) == inf);
  SlopeKey q(make_ratio(-5, 2));
  CHECK(slope_key_from_json(slope_key_to_json(q)) == q);
  SlopeKey alg{strong_bg_bound()};
  CHECK(slope_key_from_json(slope_key_to_json(alg)) == alg);
  CHECK_THROWS_AS(slope_key_from_json(Json("-inf")), std::invalid_argument);

  std::vector<HNPiece> pieces = hn_pieces_from_json(Json::parse(
      R"({"pieces": [{"ch": ["1","0","0","0"], "key": "0"},
                     {"ch": ["0","0","0","1/5"], "key": "+inf"}]})"));
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[1].key.is_positive_infinity());
  HNResult res = hn_sort(std::move(pieces), false);
  Json rendered = hn_result_to_json(res);
  CHECK(rendered.at("verdict") == "PASS");
  CHECK(rendered.at("pieces").size() == 2);

  std::vector<LabeledClass> decomposition = labeled_classes_from_json(Json::parse(
      R"([{"ch": ["0","0","0","1/5"], "shift": 0, "tag": "torsion-dim<=1"}])"));
  REQUIRE(decomposition.size() == 1);
  CHECK(decomposition[0].tag == StabilityTag::TorsionDim1);
}

TEST_CASE("deterministic rendering") {
  ProofTrace t = rank2_certificate(3);
  CHECK(trace_to_json(t).dump(2) == trace_to_json(rank2_certificate(3)).dump(2));
  Json a = chern_to_json(ChernVector(1, 2, make_ratio(3, 7), 0));
  Json b = chern_to_json(ChernVector(1, 2, make_ratio(3, 7), 0));
  CHECK(a.dump() == b.dump());
}
