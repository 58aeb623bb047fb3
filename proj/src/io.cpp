#include "circent/io.hpp"

#include "circent/error.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace circent {

namespace {

Json cplx_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const Json& j, std::size_t index) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorKind::ParseError, "element " + std::to_string(index) + " is not a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json coeffs_to_json(CoeffView c) {
  Json out = Json::array();
  for (const auto& z : c) out.push_back(cplx_to_json(z));
  return out;
}

Coeffs coeffs_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "coefficients must be an array");
  Coeffs out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) throw Error(ErrorKind::ParseError, "element " + std::to_string(i) + " is not a [re, im] pair");
    out.push_back(cplx_from_json(j[i], i));
  }
  return out;
}

CirclePoly parse_polynomial(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "invalid JSON at position " + std::to_string(e.byte) + ": " + e.what());
  }
  auto from_angles = [](const Json& arr, cplx leading) {
    std::vector<double> angles;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_number()) throw Error(ErrorKind::ParseError, "angle " + std::to_string(i) + " is not a number");
      angles.push_back(arr[i].get<double>());
    }
    return CirclePoly::from_angles(angles, leading);
  };
  if (j.is_object()) {
    if (j.contains("coefficients")) return CirclePoly::from_coefficients(coeffs_from_json(j["coefficients"]));
    if (j.contains("angles")) {
      const cplx lead = j.contains("leading") ? cplx_from_json(j["leading"], 0) : cplx{1.0};
      return from_angles(j["angles"], lead);
    }
    throw Error(ErrorKind::ParseError, "object needs \"coefficients\" or \"angles\"");
  }
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::ParseError, "expected a non-empty array");
  if (j[0].is_array()) return CirclePoly::from_coefficients(coeffs_from_json(j));
  return from_angles(j, 1.0);
}

Json poly_to_json(const CirclePoly& p) {
  return {{"degree", p.degree()},
          {"coefficients", coeffs_to_json(p.coeffs())},
          {"angles", p.angles()},
          {"leading", cplx_to_json(p.leading())}};
}

Json report_to_json(const EntropyReport& r) {
  Json j;
  j["n"] = r.n;
  j["eta"] = cplx_to_json(r.eta);
  j["simple_zeros"] = r.simple_zeros;
  j["N"] = r.norm;
  j["E"] = r.entropy;
  j["jensen_term"] = r.jensen;
  j["polar_term"] = r.polar;
  j["gamma"] = r.gamma;
  j["remainder"] = r.remainder;
  j["bounds"] = {{"main", r.main_bound},
                 {"strengthened", r.strengthened_bound},
                 {"polar", r.polar_bound},
                 {"jensen", r.jensen_bound}};
  j["gaps"] = {{"main", r.main_gap},
               {"strengthened", r.strengthened_gap},
               {"polar", r.polar_gap},
               {"jensen", r.jensen_gap}};
  j["split_residual"] = r.split_residual;
  j["moment_formula"] = {{"polar_term", r.moment_value},
                         {"norm", r.moment_norm},
                         {"polar_residual", r.moment_residual},
                         {"norm_residual", r.moment_norm_residual},
                         {"advisory", r.moment_advisory}};
  j["routes"] = {{"entropy", r.entropy_route}, {"jensen_term", r.jensen_route}};
  if (r.entropy_quadrature) {
    j["quadrature"] = {{"E", *r.entropy_quadrature},
                       {"jensen_term", *r.jensen_quadrature},
                       {"route_residual", r.route_residual}};
  }
  j["extremal"] = r.extremal;
  j["extremal_margin"] = r.extremal_margin;
  j["violations"] = r.violations;
  j["ok"] = r.ok();
  return j;
}

Json moments_to_json(const MomentSequence& m) {
  Json vals = Json::array();
  for (const auto& v : m.values) vals.push_back(cplx_to_json(v));
  Json over = Json::array();
  for (const auto& v : m.over_range) over.push_back(cplx_to_json(v));
  return {{"metadata",
           {{"degree", m.degree},
            {"simple_zeros", m.simple_zeros},
            {"truncation_order", m.truncation_order},
            {"outside_hypotheses", m.outside_hypotheses()}}},
          {"moments", vals},
          {"over_range", over}};
}

Json extremal_to_json(const ExtremalResult& r) {
  Json trace = Json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"restart", t.index},
                     {"start", t.start},
                     {"iterations", t.iterations},
                     {"evaluations", t.evaluations},
                     {"best", t.best},
                     {"converged", t.converged}});
  return {{"n", r.n},
          {"angles", r.angles},
          {"entropy", r.entropy},
          {"gap", r.gap},
          {"angle_gap_deviation", r.angle_gap_deviation},
          {"converged", r.converged},
          {"best_restart", r.best_restart},
          {"min_objective_seen", r.min_objective_seen},
          {"lower_bound_violations", r.lower_bound_violations},
          {"trace", trace}};
}

Json coalescence_to_json(const CoalescenceTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"epsilon", r.epsilon},
                    {"E", r.entropy},
                    {"jensen_term", r.jensen},
                    {"polar_term", r.polar},
                    {"gamma", r.gamma},
                    {"N", r.norm},
                    {"moment_formula", r.moment_value},
                    {"max_deviation", r.max_deviation()}});
  return {{"limit",
           {{"E", t.entropy}, {"jensen_term", t.jensen}, {"polar_term", t.polar}, {"gamma", t.gamma}, {"N", t.norm}}},
          {"rows", rows}};
}

Json suite_summary_to_json(const SuiteSummary& s) {
  return {{"instances", s.instances},
          {"failures", s.failures},
          {"input_errors", s.input_errors},
          {"min_gap",
           {{"main", s.min_main_gap},
            {"strengthened", s.min_strengthened_gap},
            {"polar", s.min_polar_gap},
            {"jensen", s.min_jensen_gap}}},
          {"max_residual",
           {{"split", s.max_split_residual},
            {"moment_identity", s.max_moment_residual},
            {"norm_identity", s.max_moment_norm_residual},
            {"moment_vanishing", s.max_vanishing},
            {"route_agreement", s.max_route_residual}}},
          {"min_slack", {{"moment_bound", s.min_bound_slack}, {"schur", s.min_schur_slack}}}};
}

Json suite_to_json(const SuiteResult& r) {
  Json rows = Json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"seed", x.seed},
                    {"n", x.n},
                    {"simple_zeros", x.simple_zeros},
                    {"forced_multiple", x.forced_multiple},
                    {"N", x.norm},
                    {"E", x.entropy},
                    {"jensen_term", x.jensen},
                    {"polar_term", x.polar},
                    {"gamma", x.gamma},
                    {"gaps",
                     {{"main", x.main_gap},
                      {"strengthened", x.strengthened_gap},
                      {"polar", x.polar_gap},
                      {"jensen", x.jensen_gap}}},
                    {"split_residual", x.split_residual},
                    {"moment_residual", x.moment_residual},
                    {"moment_norm_residual", x.moment_norm_residual},
                    {"vanishing", x.vanishing},
                    {"bound_slack", x.bound_slack},
                    {"schur_slack", x.schur_slack},
                    {"route_residual", x.route_residual},
                    {"extremal", x.extremal},
                    {"status", x.status},
                    {"detail", x.detail}});
  return {{"summary", suite_summary_to_json(r.summary)}, {"rows", rows}};
}

std::string coalescence_to_csv(const CoalescenceTable& t) {
  std::ostringstream os;
  os << "epsilon,E,jensen_term,polar_term,gamma,N,moment_formula,d_E,d_jensen,d_polar,d_gamma,d_N,d_moment\n";
  for (const auto& r : t.rows) {
    for (double v : {r.epsilon, r.entropy, r.jensen, r.polar, r.gamma, r.norm, r.moment_value, r.d_entropy,
                     r.d_jensen, r.d_polar, r.d_gamma, r.d_norm})
      os << format_double(v) << ',';
    os << format_double(r.d_moment) << '\n';
  }
  return os.str();
}

std::string trace_to_csv(const ExtremalResult& r) {
  std::ostringstream os;
  os << "restart,start,iterations,evaluations,best,converged\n";
  for (const auto& t : r.trace)
    os << t.index << ',' << t.start << ',' << t.iterations << ',' << t.evaluations << ',' << format_double(t.best)
       << ',' << (t.converged ? 1 : 0) << '\n';
  return os.str();
}

QuadratureConfig quadrature_config_from_json(const Json& j, QuadratureConfig base) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "quadrature config must be an object");
  try {
    if (j.contains("base_nodes")) base.base_nodes = j["base_nodes"].get<int>();
    if (j.contains("tolerance")) base.tolerance = j["tolerance"].get<double>();
    if (j.contains("max_depth")) base.max_depth = j["max_depth"].get<int>();
    if (j.contains("window")) base.window = j["window"].get<double>();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("quadrature config: ") + e.what());
  }
  return base;
}

Json quadrature_config_to_json(const QuadratureConfig& c) {
  return {{"base_nodes", c.base_nodes}, {"tolerance", c.tolerance}, {"max_depth", c.max_depth}, {"window", c.window}};
}

}  // namespace circent
