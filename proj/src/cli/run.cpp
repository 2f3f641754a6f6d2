#include "rkt/cli/run.hpp"

#include "rkt/abgrp/snf.hpp"
#include "rkt/cli/json_io.hpp"
#include "rkt/cli/verify.hpp"
#include "rkt/ktheory/kappa.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace rkt::cli {

namespace {

using abgrp::GroupDescriptor;
using numfield::NumberField;

struct Options {
  std::string field = "x";
  std::string gamma;
  std::size_t truncate = 3;
  std::string algebra;
  std::string system;
  std::string style = "standard";
  std::string resolution = "require_split";
  std::string matrix;
  std::string identify;
  std::string suite;
  std::string grading;
  unsigned long modulus = 2;
  long involution = -1;
  long degree = -1;
  bool pretty = false;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input:
    case ErrorKind::Unsupported:
    case ErrorKind::Ambiguous:
      return 2;
    case ErrorKind::Hypothesis:
      return 3;
    case ErrorKind::CrossCheck:
    case ErrorKind::Internal:
      return 4;
  }
  return 4;
}

std::size_t verify_horizon() {
  const char* env = std::getenv("RKT_VERIFY_DEPTH");
  if (!env || !*env) return 64;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  require(end && *end == '\0' && v >= 1 && v <= 100000, ErrorKind::Input,
          "RKT_VERIFY_DEPTH must be an integer between 1 and 100000");
  return static_cast<std::size_t>(v);
}

Json field_json(const NumberField& K) {
  Json j;
  j["field"] = K.spec();
  j["degree"] = K.degree;
  j["signature"] = {K.r1, K.r2};
  j["discriminant"] = integer_json(K.discriminant_of_poly);
  j["roots_of_unity_order"] = K.roots_of_unity_order;
  j["unit_rank"] = K.unit_rank();
  Json roots = Json::array();
  for (const auto& r : K.real_roots) roots.push_back({r.lo.get_str(), r.hi.get_str()});
  j["real_root_intervals"] = roots;
  return j;
}

Json cmd_field_info(const Options& o) {
  NumberField K = numfield::parse_field(o.field);
  Json j = field_json(K);
  if (K.degree == 2 && K.r1 == 2) {
    auto u = numfield::fundamental_unit_real_quadratic(K);
    j["fundamental_unit"] = {{"coords", numfield::to_string(u)}, {"text", numfield::pretty(u)},
                             {"norm", numfield::norm(K, u).get_str()}, {"sign_parity", numfield::sign_parity(K, u)}};
  }
  if (!o.gamma.empty()) {
    Json g = Json::array();
    for (const auto& b : numfield::parse_elements(K, o.gamma)) {
      require(!numfield::is_zero(b), ErrorKind::Input, "elements must be nonzero to have a sign vector");
      g.push_back({{"element", numfield::to_string(b)},
                   {"signs", numfield::real_sign_vector(K, b)},
                   {"sign_parity", numfield::sign_parity(K, b)},
                   {"norm", numfield::norm(K, b).get_str()}});
    }
    j["gamma"] = g;
  }
  j["citations"] = Json::array();
  return j;
}

Json cmd_residues(const Options& o) {
  NumberField K = numfield::parse_field(o.field);
  auto rs = numfield::residue_system(K, o.modulus, numfield::parse_style(o.style));
  Json j;
  j["field"] = K.spec();
  j["modulus"] = rs.modulus;
  j["style"] = numfield::style_name(rs.style);
  j["count"] = rs.representatives.size();
  j["representatives"] = rs.representatives;
  j["citations"] = Json::array();
  return j;
}

Json matrix_argument(const std::string& text) {
  require(!text.empty(), ErrorKind::Input, "snf needs --matrix (inline JSON or a path)");
  std::string t = text;
  t.erase(0, t.find_first_not_of(" \t\n"));
  if (!t.empty() && t.front() == '[') {
    try {
      return Json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::Input, std::string("--matrix is not valid JSON: ") + e.what());
    }
  }
  Json j = read_json_file(text);
  return j.is_object() && j.contains("matrix") ? j["matrix"] : j;
}

Json cmd_snf(const Options& o) {
  IntMatrix A = int_matrix_from_json(matrix_argument(o.matrix));
  auto r = abgrp::smith_normal_form(A);
  if (!(r.U * r.D * r.V == A)) fail(ErrorKind::CrossCheck, "Smith form does not reproduce the input matrix");
  Json j;
  Json diag = Json::array();
  for (const auto& d : r.diagonal()) diag.push_back(integer_json(d));
  j["diagonal"] = diag;
  j["U"] = to_json(r.U);
  j["D"] = to_json(r.D);
  j["V"] = to_json(r.V);
  j["cokernel"] = abgrp::cokernel(A).to_string();
  j["citations"] = Json::array();
  return j;
}

IntVector parse_vector(const std::string& s) {
  IntVector v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_integer(item));
  require(!v.empty(), ErrorKind::Input, "empty vector in --identify");
  return v;
}

// "i:v~j:w" with v, w comma-separated coordinates.
std::tuple<std::size_t, IntVector, std::size_t, IntVector> parse_identify(const std::string& s) {
  auto tilde = s.find('~');
  require(tilde != std::string::npos, ErrorKind::Input, "--identify expects level:vector~level:vector");
  auto side = [&](const std::string& part) {
    auto colon = part.find(':');
    require(colon != std::string::npos, ErrorKind::Input, "--identify expects level:vector~level:vector");
    Integer level = parse_integer(part.substr(0, colon));
    require(level >= 1 && level.fits_ulong_p(), ErrorKind::Input, "levels start at 1");
    return std::pair<std::size_t, IntVector>(level.get_ui(), parse_vector(part.substr(colon + 1)));
  };
  auto [li, v] = side(s.substr(0, tilde));
  auto [lj, w] = side(s.substr(tilde + 1));
  return {li, v, lj, w};
}

Json cmd_colim(const Options& o) {
  require(!o.system.empty(), ErrorKind::Input, "colim needs --system <path.json>");
  auto sys = system_from_json(read_json_file(o.system));
  Json j = to_json(abgrp::colimit(sys));
  if (!o.identify.empty()) {
    auto [li, v, lj, w] = parse_identify(o.identify);
    std::optional<std::size_t> horizon;
    if (std::getenv("RKT_VERIFY_DEPTH")) horizon = verify_horizon();
    auto r = abgrp::identified(sys, li, v, lj, w, horizon);
    j["identify"] = {{"query", o.identify}, {"identified", r.identified}, {"exact", r.exact}, {"decided_at", r.decided_at}};
  }
  j["citations"] = Json::array();
  return j;
}

Json cmd_pv(const Options& o) {
  auto res = ktheory::parse_resolution(o.resolution);
  ktheory::GradedKGroup g;
  ktheory::ActionDescriptor act;
  Json j;
  if (o.involution >= 0) {
    require(o.system.empty(), ErrorKind::Input, "use either --involution or --system, not both");
    require(o.involution <= 12, ErrorKind::Unsupported, "--involution is limited to m <= 12");
    auto m = static_cast<unsigned>(o.involution);
    g = ktheory::involution_domain(m);
    act = ktheory::involution_action(m);
    j["input"] = {{"involution", m}};
  } else {
    require(!o.system.empty(), ErrorKind::Input, "pv needs --system <path.json> or --involution <m>");
    auto in = pv_input_from_json(read_json_file(o.system));
    g = in.group;
    act = in.action;
    j["input"] = {{"system", o.system}};
  }
  j["input"]["k0"] = g.k0.to_string();
  j["input"]["k1"] = g.k1.to_string();
  j["resolution"] = ktheory::resolution_name(res);
  Json r = to_json(ktheory::pv_step(g, act, res));
  for (auto& [k, v] : r.items()) j[k] = v;
  j["citations"] = {"Pimsner-Voiculescu six-term exact sequence"};
  return j;
}

Json cmd_kgroups(const Options& o) {
  std::optional<ktheory::Grading> grading;
  if (!o.grading.empty()) grading = ktheory::parse_grading(o.grading);
  ktheory::ClassificationReport r;
  if (o.algebra == "A0" || o.algebra == "B0") {
    unsigned n = o.degree >= 1 ? static_cast<unsigned>(o.degree) : static_cast<unsigned>(numfield::parse_field(o.field).degree);
    require(n >= 1 && n <= 8, ErrorKind::Unsupported, "A0/B0 are supported for degrees 1..8");
    r = o.algebra == "A0" ? ktheory::report_A0(n) : ktheory::report_B0(n);
  } else if (o.algebra == "A_full_Q") {
    r = ktheory::report_full_adele_Q(o.truncate, grading.value_or(ktheory::Grading::Even));
  } else if (o.algebra == "A" || o.algebra == "B") {
    NumberField K = numfield::parse_field(o.field);
    std::vector<numfield::FieldElement> gamma;
    if (!o.gamma.empty()) gamma = numfield::parse_elements(K, o.gamma);
    r = o.algebra == "A" ? ktheory::classify_A(K, o.truncate, gamma, grading) : ktheory::classify_B(K, gamma, o.truncate, grading);
    Json j;
    j["field"] = field_json(K);
    j["field"].erase("real_root_intervals");
    Json rep = to_json(r);
    for (auto& [k, v] : rep.items()) j[k] = v;
    return j;
  } else {
    fail(ErrorKind::Input, "--algebra must be one of A, B, A0, B0, A_full_Q");
  }
  Json j = to_json(r);
  if (r.exact) j["exact"] = to_json(*r.exact);
  return j;
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.pretty)
    out << pretty(j);
  else
    out << j.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact K-theory calculator for ring C*-algebras of number fields", "rkt"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_pretty = [&](CLI::App* s) { s->add_flag("--pretty", o.pretty, "Human-readable output"); };
  auto add_field = [&](CLI::App* s) { s->add_option("--field", o.field, "Minimal polynomial, e.g. \"x^2-2\"; \"x\" is Q"); };

  auto* fi = app.add_subcommand("field-info", "Signature, discriminant, roots of unity, sign data");
  add_field(fi);
  fi->add_option("--gamma", o.gamma, "Elements \"c0,c1,...;...\" in the power basis");
  add_pretty(fi);

  auto* rs = app.add_subcommand("residues", "Residue system of O/dO in the power basis");
  add_field(rs);
  rs->add_option("--modulus", o.modulus, "d >= 1")->check(CLI::PositiveNumber);
  rs->add_option("--style", o.style, "standard or centered");
  add_pretty(rs);

  auto* sn = app.add_subcommand("snf", "Smith normal form with transforms");
  sn->add_option("--matrix", o.matrix, "Inline JSON rows or a path to a JSON file")->required();
  add_pretty(sn);

  auto* co = app.add_subcommand("colim", "Colimit of a directed system of free abelian groups");
  co->add_option("--system", o.system, "System JSON file")->required();
  co->add_option("--identify", o.identify, "Query \"i:v~j:w\", e.g. \"1:1,0,0~1:0,2,0\"");
  add_pretty(co);

  auto* pv = app.add_subcommand("pv", "One Pimsner-Voiculescu step");
  pv->add_option("--system", o.system, "PV input JSON file");
  pv->add_option("--involution", o.involution, "Use the alternating involution on (Z^(2^m), Z^(2^m))");
  pv->add_option("--resolution", o.resolution, "require_split, elementary_divisors or report_both");
  add_pretty(pv);

  auto* kg = app.add_subcommand("kgroups", "Classification report for A, B, A0, B0 or A_full_Q");
  kg->add_option("--algebra", o.algebra, "A, B, A0, B0 or A_full_Q")->required();
  add_field(kg);
  kg->add_option("--gamma", o.gamma, "Generators of Gamma, \"c0,c1,...;...\"");
  kg->add_option("--truncate", o.truncate, "Number of Gamma generators in truncations");
  kg->add_option("--grading-offset", o.grading, "even or odd");
  kg->add_option("--degree", o.degree, "Degree n for A0/B0 (defaults to the degree of --field)");
  add_pretty(kg);

  auto* ve = app.add_subcommand("verify", "Run an assertion battery");
  ve->add_option("--suite", o.suite, "q-case, kappa, colim or classify")->required();
  add_pretty(ve);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (o.truncate > 20) fail(ErrorKind::Unsupported, "--truncate is limited to 20");
    Json j;
    int code = 0;
    if (*fi)
      j = cmd_field_info(o);
    else if (*rs)
      j = cmd_residues(o);
    else if (*sn)
      j = cmd_snf(o);
    else if (*co)
      j = cmd_colim(o);
    else if (*pv)
      j = cmd_pv(o);
    else if (*kg)
      j = cmd_kgroups(o);
    else {
      auto result = run_suite(o.suite, verify_horizon());
      j = result.to_json();
      code = result.passed() ? 0 : 4;
    }
    emit(j, o, out);
    return code;
  } catch (const numfield::FieldSpecException& e) {
    Json j{{"error", kind_name(e.kind())}, {"code", numfield::code_name(e.code())}, {"message", e.what()}};
    err << j.dump() << "\n";
    return exit_code(e.kind());
  } catch (const Error& e) {
    Json j{{"error", kind_name(e.kind())}, {"message", e.what()}};
    if (e.kind() == ErrorKind::Hypothesis)
      j["citation"] = "the A classification assumes the roots of unity of K are exactly +1 and -1";
    err << j.dump() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 4;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace rkt::cli
