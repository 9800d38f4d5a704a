#pragma once

#include <json.hpp>

#include "gepnerkit/chern.hpp"
#include "gepnerkit/cyclotomic.hpp"
#include "gepnerkit/interval.hpp"
#include "gepnerkit/tilt.hpp"
#include "gepnerkit/trace.hpp"

namespace gepnerkit {

// All serialization goes through ordered_json so that identical data always
// renders byte-identically. Exact values travel as strings ("p/q", basis
// coordinate arrays); floating enclosures as decimal strings with directed
// rounding, never as JSON numbers.
using Json = nlohmann::ordered_json;

// Rational <-> "p/q"
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// CycloNumber <-> array of 8 "p/q" strings on the basis 1, z, ..., z^7.
Json cyclo_to_json(const CycloNumber& x);
CycloNumber cyclo_from_json(const Json& j);

// ChernVector <-> {"ch": ["v0","v1","v2","v3"]}; the bare 4-array is also
// accepted on input.
Json chern_to_json(const ChernVector& c);
ChernVector chern_from_json(const Json& j);

// Certified rectangle -> {"re_lo","re_hi","im_lo","im_hi"} as decimal
// strings with the given significant digits, endpoints rounded outward so
// the printed box still encloses the value.
Json box_to_json(const ComplexInterval& box, int digits = 20);
Json real_interval_to_json(const RealInterval& box, int digits = 20);

// SurfaceClass <-> {"R","r","dh","n"}.
Json surface_class_to_json(const SurfaceClass& s);
SurfaceClass surface_class_from_json(const Json& j);

// TraceValue / ProofStep / ProofTrace; round-trips losslessly.
Json trace_value_to_json(const TraceValue& v);
TraceValue trace_value_from_json(const Json& j);
Json trace_to_json(const ProofTrace& t);
ProofTrace trace_from_json(const Json& j);

// LabeledClass <-> {"ch", "shift", "tag"}.
Json labeled_class_to_json(const LabeledClass& x);
LabeledClass labeled_class_from_json(const Json& j);

// SlopeKey <-> "+inf" | "p/q" | array of 8 coordinates.
Json slope_key_to_json(const SlopeKey& k);
SlopeKey slope_key_from_json(const Json& j);

// HN pieces: {"pieces": [{"ch": ..., "key": ...}]} on input; results carry
// the sorted pieces, the verdict, and the failure notes.
std::vector<HNPiece> hn_pieces_from_json(const Json& j);
Json hn_result_to_json(const HNResult& r);

// Decomposition for the heart check: {"pieces": [LabeledClass...]}.
std::vector<LabeledClass> labeled_classes_from_json(const Json& j);

}  // namespace gepnerkit
