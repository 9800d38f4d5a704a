// Command-line front end: every library operation behind one binary with
// deterministic JSON (default) or markdown output.
//
// Exit codes: 0 = all requested checks pass / certificate coherent,
//             1 = a check failed or a claimed certificate did not replay,
//             2 = malformed input (bad flags, bad JSON, out-of-domain values).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
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

namespace gk = gepnerkit;
using gk::Json;

namespace {

struct RunConfig {
  long precision_bits = 256;
  long terms = 250;
  std::string format = "json";  // "json" | "md"
  bool strict = false;
};

constexpr int kBoxDigits = 20;

// --ch accepts inline JSON or a path to a JSON file.
Json load_json_arg(const std::string& arg) {
  std::string text = arg;
  // Heuristic: anything that starts like JSON is parsed in place; otherwise
  // the argument is a file name.
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos ||
      (text[first] != '[' && text[first] != '{' && text[first] != '"')) {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open input file \"" + arg + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
}

void emit(const Json& j, const RunConfig& cfg) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
  }
}

Json check_row(const std::string& name, bool pass, const std::string& detail) {
  return Json{{"check", name}, {"verdict", pass ? "PASS" : "FAIL"}, {"detail", detail}};
}

// Markdown rendering of a [{check, verdict, detail}] table.
void emit_check_table(const std::string& title, const Json& rows, const RunConfig& cfg) {
  if (cfg.format == "json") {
    emit(Json{{"title", title}, {"checks", rows}}, cfg);
    return;
  }
  std::cout << "# " << title << "\n\n| check | verdict | detail |\n|---|---|---|\n";
  for (const auto& r : rows) {
    std::cout << "| " << r.at("check").get<std::string>() << " | "
              << r.at("verdict").get<std::string>() << " | " << r.at("detail").get<std::string>()
              << " |\n";
  }
}

bool table_all_pass(const Json& rows) {
  for (const auto& r : rows) {
    if (r.at("verdict").get<std::string>() != "PASS") return false;
  }
  return true;
}

// A certificate run succeeds when the stored verdicts replay and the
// conclusion is the coherent one for its branch (anything but FAIL).
int emit_trace(const gk::ProofTrace& trace, const RunConfig& cfg) {
  if (cfg.format == "md") {
    std::cout << trace.to_markdown();
  } else {
    emit(gk::trace_to_json(trace), cfg);
  }
  bool ok = trace.overall_pass() && trace.replay() && trace.conclusion() != "FAIL";
  return ok ? 0 : 1;
}

Json cyclo_report(const gk::CycloNumber& value, long precision_bits) {
  return Json{{"coords", gk::cyclo_to_json(value)},
              {"box", gk::box_to_json(gk::embed(value, precision_bits), kBoxDigits)}};
}

// ---------------------------------------------------------------------------

int cmd_charge(const std::string& ch_arg, const std::string& surface_arg, const std::string& t_arg,
               const RunConfig& cfg) {
  Json out;
  bool pass = true;
  if (!ch_arg.empty()) {
    gk::ChernVector c = gk::chern_from_json(load_json_arg(ch_arg));
    out["class"] = gk::chern_to_json(c);
    gk::CycloNumber z = gk::zG_dagger().evaluate(c);
    out["zG"] = cyclo_report(z, cfg.precision_bits);
    bool rewrite_ok = gk::rewrite_equivalence_check(c);
    pass = pass && rewrite_ok;
    out["rewrite_check"] = rewrite_ok ? "PASS" : "FAIL";
    gk::Rational t = gk::parse_rational(t_arg);
    auto [re_part, im_part] = gk::zB_tH(c, t);
    out["zB_tH"] = Json{{"t", gk::to_string(t)},
                        {"re", gk::to_string(re_part)},
                        {"im", gk::to_string(im_part)}};
  } else if (!surface_arg.empty()) {
    gk::SurfaceClass s = gk::surface_class_from_json(load_json_arg(surface_arg));
    out["system"] = gk::surface_class_to_json(s);
    gk::CycloNumber z = gk::zG_prime(s);
    out["zG_prime"] = cyclo_report(z, cfg.precision_bits);
    out["pushforward_chB"] = gk::chern_to_json(gk::pushforward_chB(s));
    out["mu_prime"] = gk::mu_prime(s).to_string();
    bool identity_ok = z == gk::rewrite_form_twisted(gk::pushforward_chB(s));
    pass = pass && identity_ok;
    out["identity_check"] = identity_ok ? "PASS" : "FAIL";
  } else {
    throw std::invalid_argument("charge: pass --ch CLASS or --surface SYSTEM");
  }
  if (cfg.format == "md") {
    std::cout << out.dump(2) << "\n";  // the exact values are the readable form
  } else {
    emit(out, cfg);
  }
  return pass ? 0 : 1;
}

int cmd_monodromy_check(const RunConfig& cfg) {
  Json rows = Json::array();
  rows.push_back(check_row("eigen-check", gk::gepner_eigen_check(),
                           "Z o M = alpha Z, residual exactly zero on all basis classes"));
  rows.push_back(check_row("monodromy-order", gk::monodromy_matrix().pow(5) == gk::MonodromyMatrix(),
                           "M^5 = identity exactly"));
  auto cp = gk::monodromy_matrix().characteristic_polynomial();
  bool cp_ok = true;
  for (const auto& c : cp) cp_ok = cp_ok && c == 1;
  rows.push_back(check_row("characteristic-polynomial", cp_ok, "char(M) = x^4+x^3+x^2+x+1"));
  bool ev_ok = gk::eigen_covector(gk::CycloNumber::alpha()) == gk::zG_dagger();
  rows.push_back(check_row("eigen-covector", ev_ok,
                           "solving w o M = alpha w with w3 = -1 reproduces the charge covector"));
  rows.push_back(check_row(
      "determinant", gk::monodromy_matrix().determinant() == 1, "det M = 1 (unipotent factors)"));
  emit_check_table("monodromy checks", rows, cfg);
  return table_all_pass(rows) ? 0 : 1;
}

int cmd_periods(int j, const std::string& psi_arg, const RunConfig& cfg) {
  auto comma = psi_arg.find(',');
  gk::Rational psi_re = gk::parse_rational(psi_arg.substr(0, comma));
  gk::Rational psi_im =
      comma == std::string::npos ? gk::Rational(0) : gk::parse_rational(psi_arg.substr(comma + 1));
  gk::PeriodSeries series = gk::build_series(j, cfg.terms, cfg.precision_bits);
  gk::PeriodValue v = gk::varpi_eval(series, psi_re, psi_im);
  Json out{{"j", j},
           {"psi", Json{{"re", gk::to_string(psi_re)}, {"im", gk::to_string(psi_im)}}},
           {"terms", cfg.terms},
           {"precision_bits", cfg.precision_bits},
           {"value", Json{{"re", v.value.re.decimal(kBoxDigits)},
                          {"im", v.value.im.decimal(kBoxDigits)}}},
           {"error_bound", v.error_bound.decimal(6, MPFR_RNDU)}};
  if (cfg.format == "md") {
    std::cout << out.dump(2) << "\n";
  } else {
    emit(out, cfg);
  }
  return 0;
}

int cmd_aspinwall_check(const RunConfig& cfg) {
  std::vector<long> ms;
  for (long m = -3; m <= 3; ++m) ms.push_back(m);
  Json rows = Json::array();
  rows.push_back(check_row("aspinwall", gk::aspinwall_check(ms),
                           "period covector of O(m) = classical polynomials, m = -3..3, exact"));
  rows.push_back(check_row("gepner-limit", gk::gepner_limit_check(),
                           "orbifold limit of -Phi reproduces the charge covector exactly"));
  emit_check_table("period identity checks", rows, cfg);
  return table_all_pass(rows) ? 0 : 1;
}

int cmd_bg_check(const std::string& ch_arg, const RunConfig& cfg) {
  gk::ChernVector c = gk::chern_from_json(load_json_arg(ch_arg));
  Json rows = Json::array();
  std::string why;
  bool sheafish = gk::is_sheaf_like(c, &why);
  rows.push_back(check_row("sheaf-like", sheafish,
                           sheafish ? "integrality pattern of a sheaf class" : why));
  bool classical = gk::classical_bg(c) == gk::Verdict::Pass;
  rows.push_back(check_row("classical-bg",
                           classical, "Delta.H = " + gk::to_string(gk::discriminant_H(c)) +
                                          (classical ? " >= 0" : " < 0")));
  Json out{{"class", gk::chern_to_json(c)}};
  bool strong_applicable = gk::is_integer(c.v0) && c.v0 >= 2 && gk::is_integer(c.v0 / 2) &&
                           c.v1 == -c.v0 / 2;
  if (strong_applicable) {
    gk::StrongBGResult r = gk::strong_bg_verdict(c);
    rows.push_back(check_row(
        "strong-bg", r.verdict == gk::Verdict::Pass,
        "Delta.H / rank^2 = " + gk::to_string(gk::Rational(gk::discriminant_H(c) / (c.v0 * c.v0))) +
            " vs 2c/b = 1.5139..."));
    out["strong_margin"] = cyclo_report(r.margin, cfg.precision_bits);
  } else {
    out["strong_margin"] = nullptr;
    rows.push_back(check_row("strong-bg", true,
                             "not applicable: needs even rank >= 2 with c1/rank = -H/2"));
  }
  out["checks"] = rows;
  if (cfg.format == "md") {
    emit_check_table("discriminant checks", rows, cfg);
  } else {
    emit(out, cfg);
  }
  return table_all_pass(rows) ? 0 : 1;
}

int cmd_clifford_check(long R, long r, long dh, const std::string& n_arg, const RunConfig& cfg) {
  gk::SurfaceClass s(R, r, dh, gk::parse_rational(n_arg));
  gk::CliffordResult res = gk::clifford_verdict(s);
  Json out{{"system", gk::surface_class_to_json(s)},
           {"verdict", res.verdict == gk::Verdict::Pass ? "PASS" : "FAIL"},
           {"margin", cyclo_report(res.margin, cfg.precision_bits)},
           {"bound", cyclo_report(gk::clifford_bound(), cfg.precision_bits)},
           {"mu_prime", gk::mu_prime(s).to_string()}};
  if (cfg.format == "md") {
    std::cout << out.dump(2) << "\n";
  } else {
    emit(out, cfg);
  }
  return res.verdict == gk::Verdict::Pass ? 0 : 1;
}

int cmd_hn(const std::string& input, bool strict, const RunConfig& cfg) {
  std::vector<gk::HNPiece> pieces = gk::hn_pieces_from_json(load_json_arg(input));
  gk::HNResult result = gk::hn_sort(std::move(pieces), strict || cfg.strict);
  if (cfg.format == "md") {
    std::cout << gk::hn_result_to_json(result).dump(2) << "\n";
  } else {
    emit(gk::hn_result_to_json(result), cfg);
  }
  return result.verdict == gk::Verdict::Pass ? 0 : 1;
}

int cmd_heart_check(const std::string& input, const RunConfig& cfg) {
  std::vector<gk::LabeledClass> pieces = gk::labeled_classes_from_json(load_json_arg(input));
  Json summary = Json::array();
  for (const gk::LabeledClass& p : pieces) {
    Json row = gk::labeled_class_to_json(p);
    row["mu_BH"] = gk::mu_BH(p.ch).to_string();
    row["tilt_side"] = gk::tilt_side_name(gk::classify_tilt(p));
    row["nu_G"] = gk::slope_key_to_json(gk::nu_G(p));
    summary.push_back(std::move(row));
  }
  gk::ProofTrace trace = gk::lemma_property_check(pieces);
  if (cfg.format == "md") {
    std::cout << trace.to_markdown();
    return trace.overall_pass() && trace.replay() ? 0 : 1;
  }
  emit(Json{{"pieces", std::move(summary)}, {"positivity", gk::trace_to_json(trace)}}, cfg);
  return trace.overall_pass() && trace.replay() ? 0 : 1;
}

int cmd_verify_all(const RunConfig& cfg) {
  gk::VerifyOptions opts;
  opts.precision_bits = cfg.precision_bits;
  opts.terms = cfg.terms;
  std::vector<gk::CheckResult> results = gk::verify_all(opts);
  Json rows = Json::array();
  for (const gk::CheckResult& r : results) rows.push_back(check_row(r.name, r.pass, r.detail));
  emit_check_table("full verification suite", rows, cfg);
  return gk::all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for quintic central charges, monodromy, periods, "
               "discriminant bounds, and stability certificates"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--precision-bits", cfg.precision_bits,
                 "working precision for numeric enclosures (>= 32)")
      ->envname("GEPNERKIT_PRECISION")
      ->capture_default_str();
  app.add_option("--terms", cfg.terms, "period series truncation (>= 5)")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "md"}))
      ->capture_default_str();
  app.add_flag("--strict", cfg.strict, "strict tie handling where applicable");

  std::string ch_arg, surface_arg, t_arg = "1", psi_arg = "1/1000,0", n_arg = "0", input_arg;
  int j_arg = 0;
  long c2h = 0, R = 0, r = 0, dh = 0;
  bool hn_strict = false;

  CLI::App* charge = app.add_subcommand("charge", "evaluate the central charges on a class");
  charge->add_option("--ch", ch_arg, "3-fold class, inline JSON or file");
  charge->add_option("--surface", surface_arg, "coherent system {R,r,dh,n}, inline JSON or file");
  charge->add_option("--t", t_arg, "large-volume parameter t > 0 (rational)");

  app.add_subcommand("monodromy-check", "eigen equation, M^5, characteristic polynomial");

  CLI::App* periods = app.add_subcommand("periods", "evaluate a period branch near the orbifold point");
  periods->add_option("--j", j_arg, "branch index 0..3")->check(CLI::Range(0, 3));
  periods->add_option("--psi", psi_arg, "evaluation point RE,IM with |5 psi| < 1 (rationals)");

  app.add_subcommand("aspinwall-check", "polynomial period covectors and the orbifold limit");

  CLI::App* bg = app.add_subcommand("bg-check", "discriminant inequalities on a class");
  bg->add_option("--ch", ch_arg, "3-fold class, inline JSON or file")->required();

  CLI::App* r2 = app.add_subcommand("rank2-certificate",
                                    "case analysis for rank-2 slope -1/2 classes");
  r2->add_option("--c2h", c2h, "c2 . H (integer >= 2)")->required();

  CLI::App* cliff = app.add_subcommand("clifford-check", "degree bound for R = 2 rank(F) systems");
  cliff->add_option("--R", R, "number of O_S summands")->required();
  cliff->add_option("--r", r, "rank of F")->required();
  cliff->add_option("--dh", dh, "degree c1(F).h")->required();
  cliff->add_option("--n", n_arg, "half-integral ch2 part");

  CLI::App* cliffcert = app.add_subcommand("clifford-certificate",
                                           "curve-restriction case analysis for R = 2, rank 1");
  cliffcert->add_option("--dh", dh, "degree c1(F).h (integer >= 1)")->required();

  CLI::App* hn = app.add_subcommand("hn", "sort declared pieces by decreasing slope key");
  hn->add_option("--input", input_arg, "pieces JSON, inline or file")->required();
  hn->add_flag("--strict", hn_strict, "fail on tied keys between distinct classes");

  CLI::App* heart = app.add_subcommand("heart-check",
                                       "classify labeled classes and replay the positivity trace");
  heart->add_option("--input", input_arg, "labeled classes JSON, inline or file")->required();

  app.add_subcommand("verify-all", "run every identity check and certificate");

  // Global flags (--format, --precision-bits, ...) are accepted after the
  // subcommand name as well.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage/error text
    return 2;
  }

  if (cfg.precision_bits < 32) {
    std::cerr << "error: --precision-bits must be at least 32\n";
    return 2;
  }
  if (cfg.terms < 5) {
    std::cerr << "error: --terms must be at least 5\n";
    return 2;
  }

  try {
    if (charge->parsed()) return cmd_charge(ch_arg, surface_arg, t_arg, cfg);
    if (app.get_subcommand("monodromy-check")->parsed()) return cmd_monodromy_check(cfg);
    if (periods->parsed()) return cmd_periods(j_arg, psi_arg, cfg);
    if (app.get_subcommand("aspinwall-check")->parsed()) return cmd_aspinwall_check(cfg);
    if (bg->parsed()) return cmd_bg_check(ch_arg, cfg);
    if (r2->parsed()) return emit_trace(gk::rank2_certificate(c2h), cfg);
    if (cliff->parsed()) return cmd_clifford_check(R, r, dh, n_arg, cfg);
    if (cliffcert->parsed()) return emit_trace(gk::r2_clifford_certificate(dh), cfg);
    if (hn->parsed()) return cmd_hn(input_arg, hn_strict, cfg);
    if (heart->parsed()) return cmd_heart_check(input_arg, cfg);
    if (app.get_subcommand("verify-all")->parsed()) return cmd_verify_all(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
