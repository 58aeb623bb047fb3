#pragma once

// JSON and CSV encodings. Coefficients are arrays of [re, im] pairs, lowest
// degree first; roots are arrays of angles in radians.

#include "circent/blaschke.hpp"
#include "circent/entropy.hpp"
#include "circent/extremal.hpp"
#include "circent/log_integrals.hpp"
#include "circent/polycircle.hpp"
#include "circent/suite.hpp"

#include <json.hpp>

#include <string>

namespace circent {

using Json = nlohmann::json;

Json coeffs_to_json(CoeffView c);
/// Accepts [[re, im], ...]. Throws ParseError.
Coeffs coeffs_from_json(const Json& j);

/// Parses a polynomial given as text:
///   [[re,im], ...]                   coefficient list
///   [theta, ...]                     root angles, leading factor 1
///   {"coefficients": [...]} or {"angles": [...], "leading": [re,im]}
/// Throws ParseError (with position) or the construction errors.
CirclePoly parse_polynomial(const std::string& text);

Json poly_to_json(const CirclePoly& p);
Json report_to_json(const EntropyReport& r);
Json moments_to_json(const MomentSequence& m);
Json extremal_to_json(const ExtremalResult& r);
Json coalescence_to_json(const CoalescenceTable& t);
Json suite_summary_to_json(const SuiteSummary& s);
/// Rows and summary.
Json suite_to_json(const SuiteResult& r);

/// One row per epsilon.
std::string coalescence_to_csv(const CoalescenceTable& t);
/// One row per restart.
std::string trace_to_csv(const ExtremalResult& r);

/// {base_nodes, tolerance, max_depth, window}; missing keys keep defaults.
QuadratureConfig quadrature_config_from_json(const Json& j, QuadratureConfig base = {});
Json quadrature_config_to_json(const QuadratureConfig& c);

/// Shortest round-trip decimal for CSV output.
std::string format_double(double v);

}  // namespace circent
