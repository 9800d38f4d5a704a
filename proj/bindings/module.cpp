// Python extension: thin wrappers over the exact-arithmetic core. Values
// cross the boundary as strings ("p/q" rationals, 8-entry coordinate lists)
// so that nothing is silently rounded; floats appear only as certified-box
// midpoints clearly labeled as approximations.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

#include "gepnerkit/bg.hpp"
#include "gepnerkit/charges.hpp"
#include "gepnerkit/chern.hpp"
#include "gepnerkit/cyclotomic.hpp"
#include "gepnerkit/json_io.hpp"
#include "gepnerkit/periods.hpp"
#include "gepnerkit/surface.hpp"
#include "gepnerkit/tilt.hpp"
#include "gepnerkit/trace.hpp"
#include "gepnerkit/verify.hpp"

namespace py = pybind11;
namespace gk = gepnerkit;
using gk::Json;

namespace {

gk::Rational rational_arg(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return gk::Rational(h.cast<long>());
  if (py::isinstance<py::str>(h)) return gk::parse_rational(h.cast<std::string>());
  throw py::type_error("expected an int or a rational string like \"-1/3\"");
}

gk::ChernVector chern_arg(const py::sequence& seq) {
  if (py::len(seq) != 4) throw py::value_error("a class needs exactly 4 entries");
  return gk::ChernVector(rational_arg(seq[0]), rational_arg(seq[1]), rational_arg(seq[2]),
                         rational_arg(seq[3]));
}

gk::SurfaceClass surface_arg(long R, long r, long dh, const py::handle& n) {
  return gk::SurfaceClass(R, r, dh, rational_arg(n));
}

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      throw py::value_error("unsupported JSON payload");
  }
}

Json py_to_json(const py::handle& h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return h.cast<long long>();
  if (py::isinstance<py::float_>(h)) return h.cast<double>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::dict>(h)) {
    Json out = Json::object();
    for (const auto& item : h.cast<py::dict>()) {
      out[item.first.cast<std::string>()] = py_to_json(item.second);
    }
    return out;
  }
  if (py::isinstance<py::sequence>(h)) {
    Json out = Json::array();
    for (const auto& item : h.cast<py::sequence>()) out.push_back(py_to_json(item));
    return out;
  }
  throw py::type_error("unsupported input value");
}

std::vector<std::string> coord_strings(const gk::CycloNumber& x) {
  std::vector<std::string> out;
  out.reserve(8);
  for (const gk::Rational& c : x.coords()) out.push_back(gk::to_string(c));
  return out;
}

std::vector<std::string> chern_strings(const gk::ChernVector& c) {
  return {gk::to_string(c.v0), gk::to_string(c.v1), gk::to_string(c.v2), gk::to_string(c.v3)};
}

double to_double(const gk::BigFloat& x) { return mpfr_get_d(x.raw(), MPFR_RNDN); }

std::complex<double> midpoint(const gk::CycloNumber& x, long bits) {
  gk::ComplexInterval box = gk::embed(x, bits);
  return {(to_double(box.re().lo()) + to_double(box.re().hi())) / 2,
          (to_double(box.im().lo()) + to_double(box.im().hi())) / 2};
}

py::dict box_dict(const gk::CycloNumber& x, long bits) {
  return json_to_py(gk::box_to_json(gk::embed(x, bits), 20)).cast<py::dict>();
}

py::dict trace_dict(const gk::ProofTrace& t) {
  py::dict out = json_to_py(gk::trace_to_json(t)).cast<py::dict>();
  out["overall_pass"] = t.overall_pass() && t.replay();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "exact arithmetic for quintic central charges, monodromy, periods, discriminant "
      "bounds, and stability certificates";

  // --- central charges -----------------------------------------------------
  m.def(
      "zG_coords", [](const py::sequence& ch) { return coord_strings(gk::zG_dagger().evaluate(chern_arg(ch))); },
      py::arg("ch"),
      "exact coordinates (powers 0..7 of the primitive 20th root) of the charge of a class");
  m.def(
      "zG_value",
      [](const py::sequence& ch, long precision_bits) {
        return midpoint(gk::zG_dagger().evaluate(chern_arg(ch)), precision_bits);
      },
      py::arg("ch"), py::arg("precision_bits") = 256,
      "complex midpoint of the certified charge enclosure");
  m.def(
      "zG_box",
      [](const py::sequence& ch, long precision_bits) {
        return box_dict(gk::zG_dagger().evaluate(chern_arg(ch)), precision_bits);
      },
      py::arg("ch"), py::arg("precision_bits") = 256,
      "certified enclosure of the charge, 20-digit outward-rounded decimal endpoints");
  m.def(
      "zB_tH",
      [](const py::sequence& ch, const py::handle& t) {
        auto [re_part, im_part] = gk::zB_tH(chern_arg(ch), rational_arg(t));
        return py::make_tuple(gk::to_string(re_part), gk::to_string(im_part));
      },
      py::arg("ch"), py::arg("t") = 1, "exact (re, im) of the large-volume charge at rational t > 0");
  m.def(
      "rewrite_check", [](const py::sequence& ch) { return gk::rewrite_equivalence_check(chern_arg(ch)); },
      py::arg("ch"), "the closed rewrite form agrees with the defining covector on this class");
  m.def(
      "rewrite_constants",
      [](long precision_bits) {
        const gk::RewriteCoefficients& rc = gk::rewrite_coefficients();
        py::dict out;
        for (auto [name, value] : {std::pair<const char*, const gk::CycloNumber*>{"a", &rc.a},
                                   {"b", &rc.b},
                                   {"c", &rc.c}}) {
          py::dict entry;
          entry["coords"] = coord_strings(*value);
          entry["value"] = midpoint(*value, precision_bits).real();
          out[name] = entry;
        }
        return out;
      },
      py::arg("precision_bits") = 256,
      "the three real constants of the closed charge form, exact and approximate");
  m.def(
      "strong_bg_bound", [](long bits) { return midpoint(gk::strong_bg_bound(), bits).real(); },
      py::arg("precision_bits") = 256, "2c/b, the sharpened discriminant threshold (approximate)");
  m.def(
      "clifford_bound", [](long bits) { return midpoint(gk::clifford_bound(), bits).real(); },
      py::arg("precision_bits") = 256, "5/8 + c/b, the restriction degree threshold (approximate)");

  // --- monodromy and periods -----------------------------------------------
  m.def("eigen_check", &gk::gepner_eigen_check,
        "Z o M = alpha Z with exactly zero residual on all basis classes");
  m.def(
      "monodromy_order_check",
      [] { return gk::monodromy_matrix().pow(5) == gk::MonodromyMatrix(); }, "M^5 = identity, exact");
  m.def(
      "aspinwall_check",
      [](long m_min, long m_max) {
        std::vector<long> ms;
        for (long v = m_min; v <= m_max; ++v) ms.push_back(v);
        return gk::aspinwall_check(ms);
      },
      py::arg("m_min") = -3, py::arg("m_max") = 3,
      "period covectors of line bundles match the classical polynomials, exact");
  m.def("gepner_limit_check", &gk::gepner_limit_check,
        "orbifold limit of the period covectors reproduces the charge covector, exact");
  m.def(
      "period",
      [](int j, const py::handle& psi_re, const py::handle& psi_im, long terms, long precision_bits) {
        gk::PeriodSeries s = gk::build_series(j, terms, precision_bits);
        gk::PeriodValue v = gk::varpi_eval(s, rational_arg(psi_re), rational_arg(psi_im));
        std::complex<double> value(to_double(v.value.re), to_double(v.value.im));
        return py::make_tuple(value, to_double(v.error_bound));
      },
      py::arg("j"), py::arg("psi_re"), py::arg("psi_im") = 0, py::arg("terms") = 250,
      py::arg("precision_bits") = 256,
      "(value, certified_error_bound) for the j-th period branch at rational psi, |5 psi| < 1");

  // --- discriminant bounds and certificates ----------------------------------
  m.def(
      "classical_bg", [](const py::sequence& ch) { return gk::classical_bg(chern_arg(ch)) == gk::Verdict::Pass; },
      py::arg("ch"), "Delta.H >= 0");
  m.def(
      "strong_bg",
      [](const py::sequence& ch, long bits) {
        gk::StrongBGResult r = gk::strong_bg_verdict(chern_arg(ch));
        py::dict out;
        out["pass"] = r.verdict == gk::Verdict::Pass;
        out["margin_coords"] = coord_strings(r.margin);
        out["margin"] = midpoint(r.margin, bits).real();
        return out;
      },
      py::arg("ch"), py::arg("precision_bits") = 256,
      "sharpened bound Delta.H / rank^2 > 2c/b on even-rank slope -1/2 classes");
  m.def(
      "k3_bound", [](long rank) { return gk::to_string(gk::k3_bound(rank)); }, py::arg("rank"),
      "discriminant floor 2 - 2/rank^2 on the polarized K3 section");
  m.def(
      "rank2_certificate", [](long c2h) { return trace_dict(gk::rank2_certificate(c2h)); },
      py::arg("c2h"), "case analysis for rank-2 slope -1/2 classes; replayed before returning");
  m.def(
      "euler_char", [](const py::sequence& ch) { return gk::to_string(gk::euler_char(chern_arg(ch))); },
      py::arg("ch"), "Riemann-Roch Euler characteristic");
  m.def(
      "discriminant_H", [](const py::sequence& ch) { return gk::to_string(gk::discriminant_H(chern_arg(ch))); },
      py::arg("ch"), "Delta.H = H.(ch1^2 - 2 ch0 ch2)");
  m.def(
      "twist", [](const py::sequence& ch, const py::handle& beta) { return chern_strings(gk::twist(chern_arg(ch), rational_arg(beta))); },
      py::arg("ch"), py::arg("beta"), "e^(-beta H) . ch");
  m.def(
      "is_sheaf_like",
      [](const py::sequence& ch) {
        std::string why;
        bool ok = gk::is_sheaf_like(chern_arg(ch), &why);
        return py::make_tuple(ok, why);
      },
      py::arg("ch"), "(bool, reason): integrality pattern of an honest sheaf class");

  // --- coherent systems on the surface section -------------------------------
  m.def(
      "pushforward",
      [](long R, long r, long dh, const py::handle& n) {
        return chern_strings(gk::pushforward_chB(surface_arg(R, r, dh, n)));
      },
      py::arg("R"), py::arg("r"), py::arg("dh"), py::arg("n") = 0,
      "B-twisted 3-fold class of the complex O_S^R -> F");
  m.def(
      "zG_prime_coords",
      [](long R, long r, long dh, const py::handle& n) {
        return coord_strings(gk::zG_prime(surface_arg(R, r, dh, n)));
      },
      py::arg("R"), py::arg("r"), py::arg("dh"), py::arg("n") = 0,
      "exact coordinates of the surface-level charge");
  m.def(
      "mu_prime",
      [](long R, long r, long dh, const py::handle& n) {
        return gk::mu_prime(surface_arg(R, r, dh, n)).to_string();
      },
      py::arg("R"), py::arg("r"), py::arg("dh"), py::arg("n") = 0,
      "slope 5(1/2 - r/R); \"-inf\" when R = 0");
  m.def(
      "clifford_check",
      [](long R, long r, long dh, const py::handle& n, long bits) {
        gk::CliffordResult res = gk::clifford_verdict(surface_arg(R, r, dh, n));
        py::dict out;
        out["pass"] = res.verdict == gk::Verdict::Pass;
        out["margin_coords"] = coord_strings(res.margin);
        out["margin"] = midpoint(res.margin, bits).real();
        return out;
      },
      py::arg("R"), py::arg("r"), py::arg("dh"), py::arg("n") = 0, py::arg("precision_bits") = 256,
      "degree bound dh/R > 5/8 + c/b for R = 2 rank(F) systems");
  m.def(
      "clifford_certificate", [](long dh) { return trace_dict(gk::r2_clifford_certificate(dh)); },
      py::arg("dh"), "curve-restriction case analysis for R = 2, rank-1 systems");

  // --- tilt slopes, phases, filtrations --------------------------------------
  m.def(
      "mu_BH", [](const py::sequence& ch) { return gk::mu_BH(chern_arg(ch)).to_string(); },
      py::arg("ch"), "twisted slope H^2.ch1^B / ch0; \"+inf\" on torsion");
  m.def(
      "phase",
      [](const py::sequence& ch, long precision_bits) {
        gk::RealInterval p = gk::phase_G(chern_arg(ch), precision_bits);
        return py::make_tuple(mpfr_get_d(p.lo().raw(), MPFR_RNDD), mpfr_get_d(p.hi().raw(), MPFR_RNDU));
      },
      py::arg("ch"), py::arg("precision_bits") = 256,
      "certified (lo, hi) enclosure of the charge phase in (0, 2]");
  m.def(
      "hn_sort",
      [](const py::handle& pieces, bool strict) {
        std::vector<gk::HNPiece> parsed =
            gk::hn_pieces_from_json(Json{{"pieces", py_to_json(pieces)}});
        return json_to_py(gk::hn_result_to_json(gk::hn_sort(std::move(parsed), strict)));
      },
      py::arg("pieces"), py::arg("strict") = false,
      "sort [{'ch': [...], 'key': ...}] by decreasing slope key; verdict FAIL on non-sheaf-like "
      "classes or (strict) ties between distinct classes");
  m.def(
      "heart_check",
      [](const py::handle& pieces) {
        return trace_dict(gk::lemma_property_check(gk::labeled_classes_from_json(py_to_json(pieces))));
      },
      py::arg("pieces"),
      "positivity trace for a class decomposed into shifted slope-boundary stable sheaves and "
      "torsion pieces: [{'ch': [...], 'shift': 0|1, 'tag': ...}]");

  // --- full battery -----------------------------------------------------------
  m.def(
      "verify_all",
      [](long precision_bits, long terms) {
        gk::VerifyOptions opts;
        opts.precision_bits = precision_bits;
        opts.terms = terms;
        py::list out;
        for (const gk::CheckResult& r : gk::verify_all(opts)) {
          py::dict row;
          row["check"] = r.name;
          row["pass"] = r.pass;
          row["detail"] = r.detail;
          out.append(row);
        }
        return out;
      },
      py::arg("precision_bits") = 256, py::arg("terms") = 250,
      "every identity check and certificate; list of {check, pass, detail} rows");
}
