#include "circent/cli.hpp"

#include "circent/entropy.hpp"
#include "circent/error.hpp"
#include "circent/extremal.hpp"
#include "circent/io.hpp"
#include "circent/suite.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

namespace circent {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 42;
  int precision_bits = 53;
  double tolerance = tol::gap;
  double eq_tolerance = tol::eq;
  double identity_tolerance = 1e-8;
  QuadratureConfig quadrature{};
  std::string out;
  std::string format;
  unsigned threads = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Defaults from the file named by CIRCENT_CONFIG, overridden later by flags.
void apply_config_file(Common& c) {
  const char* path = std::getenv("CIRCENT_CONFIG");
  if (path == nullptr || *path == '\0') return;
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("config ") + path + " at position " + std::to_string(e.byte));
  }
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "config must be a JSON object");
  try {
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("precision")) c.precision_bits = j["precision"].get<int>();
    if (j.contains("tolerance")) c.tolerance = j["tolerance"].get<double>();
    if (j.contains("eq_tolerance")) c.eq_tolerance = j["eq_tolerance"].get<double>();
    if (j.contains("identity_tolerance")) c.identity_tolerance = j["identity_tolerance"].get<double>();
    if (j.contains("threads")) c.threads = j["threads"].get<unsigned>();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("config: ") + e.what());
  }
  if (j.contains("quadrature")) c.quadrature = quadrature_config_from_json(j["quadrature"], c.quadrature);
}

Precision precision_of(int bits) {
  if (bits == 53) return Precision::Double;
  if (bits == 64) return Precision::Extended;
  throw UsageError("--precision must be 53 or 64");
}

void emit(const Common& c, const std::string& payload, std::ostream& out) {
  if (c.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + c.out);
  f << payload;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// "n=6 omega=1" with optional omega=re,im, theta=<angle of omega>, c=re[,im].
CirclePoly parse_binomial(const std::string& text) {
  std::istringstream ss(text);
  std::string tok;
  int n = 0;
  cplx omega = 1.0;
  cplx c = 1.0;
  auto number_pair = [](const std::string& v) {
    const auto comma = v.find(',');
    try {
      if (comma == std::string::npos) return cplx{std::stod(v), 0.0};
      return cplx{std::stod(v.substr(0, comma)), std::stod(v.substr(comma + 1))};
    } catch (const std::exception&) {
      throw UsageError("bad number in --binomial: " + v);
    }
  };
  while (ss >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw UsageError("--binomial expects key=value tokens, got " + tok);
    const std::string key = tok.substr(0, eq);
    const std::string value = tok.substr(eq + 1);
    if (key == "n") {
      try {
        n = std::stoi(value);
      } catch (const std::exception&) {
        throw UsageError("bad degree in --binomial: " + value);
      }
    } else if (key == "omega") {
      omega = number_pair(value);
    } else if (key == "theta") {
      omega = std::polar(1.0, number_pair(value).real());
    } else if (key == "c") {
      c = number_pair(value);
    } else {
      throw UsageError("unknown --binomial key " + key);
    }
  }
  if (n < 1) throw UsageError("--binomial needs n >= 1");
  return CirclePoly::binomial(n, omega, c);
}

std::string input_text(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!arg.empty() && arg[0] == '@') return read_file(arg.substr(1));
  std::ifstream probe(arg);
  if (probe.good() && arg.find_first_of("[{") == std::string::npos) return read_file(arg);
  return arg;
}

CirclePoly load_polynomial(const std::string& input, const std::string& binomial,
                           const std::optional<std::string>& leading) {
  if (!binomial.empty()) {
    if (!input.empty()) throw UsageError("give either a polynomial or --binomial, not both");
    return parse_binomial(binomial);
  }
  if (input.empty()) throw UsageError("missing polynomial input");
  const std::string text = input_text(input);
  if (!leading) return parse_polynomial(text);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "invalid JSON at position " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_array() || j.empty() || !j[0].is_number()) throw UsageError("--leading applies to angle lists only");
  const auto comma = leading->find(',');
  cplx lead;
  try {
    lead = comma == std::string::npos ? cplx{std::stod(*leading), 0.0}
                                      : cplx{std::stod(leading->substr(0, comma)), std::stod(leading->substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("bad --leading value " + *leading);
  }
  return parse_polynomial(Json{{"angles", j}, {"leading", {lead.real(), lead.imag()}}}.dump());
}

std::pair<int, int> parse_degrees(const std::string& s) {
  static const std::regex range(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, range)) throw UsageError("--degrees expects a..b or a single degree");
  const int lo = std::stoi(m[1].str());
  const int hi = m[2].matched ? std::stoi(m[2].str()) : lo;
  if (lo < 1 || hi < lo) throw UsageError("--degrees range must satisfy 1 <= a <= b");
  return {lo, hi};
}

}  // namespace

std::vector<double> parse_schedule(const std::string& s) {
  static const std::regex dyadic(R"(^\s*2\^-(\d+)\s*\.\.\s*2\^-(\d+)\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, dyadic)) {
    const int a = std::stoi(m[1].str());
    const int b = std::stoi(m[2].str());
    if (b < a) throw Error(ErrorKind::InvalidArgument, "schedule must decrease");
    return dyadic_schedule(a, b);
  }
  std::vector<double> out;
  std::istringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad schedule entry " + tok);
    }
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty schedule");
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropy functionals of polynomials with all zeros on the unit circle"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "circent 1.0");

  Common common;
  try {
    apply_config_file(common);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  auto add_common = [&](CLI::App* sub, bool with_seed) {
    sub->add_option("--precision", common.precision_bits, "Mantissa bits: 53 (double) or 64 (extended)")
        ->check(CLI::IsMember({53, 64}));
    sub->add_option("--tolerance", common.tolerance, "Allowed negative slack for inequality gaps");
    sub->add_option("--out", common.out, "Write the payload to this file instead of stdout");
    sub->add_option("--quad-nodes", common.quadrature.base_nodes, "Quadrature base grid size");
    sub->add_option("--quad-tolerance", common.quadrature.tolerance, "Quadrature tolerance");
    sub->add_option("--quad-depth", common.quadrature.max_depth, "Quadrature refinement depth");
    sub->add_option("--quad-window", common.quadrature.window, "Window around circle zeros");
    if (with_seed) sub->add_option("--seed", common.seed, "Master seed");
  };

  std::string input;
  std::string binomial;
  std::optional<std::string> leading;
  bool cross_check = false;

  auto* verify = app.add_subcommand("verify", "Check all inequalities for one polynomial");
  verify->add_option("input", input, "JSON coefficients, angles, @file or -");
  verify->add_option("--binomial", binomial, "Binomial c(omega + z^n), e.g. \"n=6 omega=1\"");
  verify->add_option("--leading", leading, "Leading factor re[,im] for angle input");
  verify->add_flag("--cross-check", cross_check, "Also evaluate the integrals by quadrature");
  verify->add_option("--eq-tolerance", common.eq_tolerance, "Relative tolerance for the equality case");
  verify->add_option("--identity-tolerance", common.identity_tolerance, "Moment identity tolerance relative to N");
  add_common(verify, false);

  std::string degrees = "1..12";
  int count = 100;
  double multiple_fraction = 0.1;
  int inject = 0;
  bool no_schur = false;
  auto* suite = app.add_subcommand("suite", "Run the random property corpus");
  suite->add_option("--degrees", degrees, "Degree range a..b")->capture_default_str();
  suite->add_option("--count", count, "Instances per degree")->capture_default_str();
  suite->add_option("--format", common.format, "Per-instance rows for --out: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  suite->add_option("--multiple-fraction", multiple_fraction, "Share of instances with multiple zeros");
  suite->add_option("--inject-off-circle", inject, "Corrupt every k-th instance (0 = never)");
  suite->add_flag("--cross-check", cross_check, "Also compare against quadrature");
  suite->add_flag("--no-schur", no_schur, "Skip the contraction triples");
  suite->add_option("--threads", common.threads, "Worker threads (0 = all cores)");
  add_common(suite, true);

  int K = 50;
  auto* fourier = app.add_subcommand("fourier-h", "Fourier coefficients of |1+w|^2 log|1+w|^2");
  fourier->add_option("K", K, "Largest index")->required()->check(CLI::NonNegativeNumber);
  fourier->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  fourier->add_option("--out", common.out, "Output file");

  int n = 2;
  int restarts = 8;
  std::string trace_path;
  SearchConfig search_cfg;
  auto* search = app.add_subcommand("search", "Minimize the normalized entropy over zero angles");
  search->add_option("n", n, "Degree")->required()->check(CLI::PositiveNumber);
  search->add_option("--restarts", restarts, "Number of restarts")->check(CLI::PositiveNumber);
  search->add_option("--max-evaluations", search_cfg.max_evaluations, "Budget per restart");
  search->add_option("--diameter-tolerance", search_cfg.diameter_tol, "Simplex diameter tolerance");
  search->add_option("--hops", search_cfg.hops, "Basin-hopping rounds per restart")->check(CLI::NonNegativeNumber);
  search->add_option("--trace", trace_path, "Write the restart trace as CSV");
  search->add_option("--threads", common.threads, "Worker threads (0 = all cores)");
  search->add_option("--seed", common.seed, "Master seed");
  search->add_option("--out", common.out, "Output file");

  std::string schedule = "2^-1..2^-20";
  double coalesce_tol = 1e-4;
  auto* coalesce = app.add_subcommand("coalesce", "Perturb multiple zeros apart and follow the functionals");
  coalesce->add_option("input", input, "JSON coefficients, angles, @file or -");
  coalesce->add_option("--binomial", binomial, "Binomial input");
  coalesce->add_option("--leading", leading, "Leading factor for angle input");
  coalesce->add_option("--schedule", schedule, "Epsilons: 2^-a..2^-b or a comma list")->capture_default_str();
  coalesce->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  coalesce->add_option("--final-tolerance", coalesce_tol, "Largest allowed deviation on the last row");
  coalesce->add_option("--seed", common.seed, "Permutation seed for the perturbation");
  coalesce->add_option("--out", common.out, "Output file");

  int extra = 6;
  int order = -1;
  auto* moments_cmd = app.add_subcommand("moments", "Moment sequence of the Blaschke quotient");
  moments_cmd->add_option("input", input, "JSON coefficients, angles, @file or -");
  moments_cmd->add_option("--binomial", binomial, "Binomial input");
  moments_cmd->add_option("--leading", leading, "Leading factor for angle input");
  moments_cmd->add_option("--extra", extra, "Over-range moments to report")->check(CLI::NonNegativeNumber);
  moments_cmd->add_option("--order", order, "Series truncation order (default 4n + 8)");
  moments_cmd->add_option("--precision", common.precision_bits, "53 or 64")->check(CLI::IsMember({53, 64}));
  moments_cmd->add_option("--out", common.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Precision precision = precision_of(common.precision_bits);
    if (*verify) {
      const CirclePoly p = load_polynomial(input, binomial, leading);
      VerifyOptions opts;
      opts.precision = precision;
      opts.cross_check = cross_check;
      opts.quadrature = common.quadrature;
      opts.gap_tol = common.tolerance;
      opts.eq_tol = common.eq_tolerance;
      opts.identity_tol = common.identity_tolerance;
      const EntropyReport rep = verify_main(p, opts);
      emit(common, dump(report_to_json(rep)), out);
      return rep.ok() ? kExitOk : kExitViolation;
    }
    if (*suite) {
      SuiteConfig cfg;
      std::tie(cfg.degree_min, cfg.degree_max) = parse_degrees(degrees);
      if (count < 1) throw UsageError("--count must be positive");
      cfg.count = count;
      cfg.seed = common.seed;
      cfg.precision = precision;
      cfg.quadrature = common.quadrature;
      cfg.gap_tol = common.tolerance;
      cfg.multiple_fraction = multiple_fraction;
      cfg.inject_off_circle_every = inject;
      cfg.cross_check = cross_check;
      cfg.schur = !no_schur;
      cfg.threads = common.threads;
      const SuiteResult res = run_suite(cfg);
      if (!common.out.empty())
        emit(common, common.format == "json" ? dump(suite_to_json(res)) : suite_to_csv(res), out);
      out << dump(suite_summary_to_json(res.summary));
      return res.ok() ? kExitOk : kExitViolation;
    }
    if (*fourier) {
      std::ostringstream os;
      Json rows = Json::array();
      double worst = 0.0;
      if (common.format != "json") os << "k,exact,value,quadrature,residual\n";
      for (int k = 0; k <= K; ++k) {
        const Rational exact = h_fourier(k);
        const double value = static_cast<double>(exact);
        const double quad = h_fourier_quadrature(k);
        const double res = std::abs(quad - value);
        worst = std::max(worst, res);
        if (common.format == "json") {
          rows.push_back({{"k", k}, {"exact", exact.str()}, {"value", value}, {"quadrature", quad}, {"residual", res}});
        } else {
          os << k << ',' << exact.str() << ',' << format_double(value) << ',' << format_double(quad) << ','
             << format_double(res) << '\n';
        }
      }
      emit(common, common.format == "json" ? dump({{"rows", rows}, {"max_residual", worst}}) : os.str(), out);
      return worst < 1e-9 ? kExitOk : kExitViolation;
    }
    if (*search) {
      search_cfg.seed = common.seed;
      search_cfg.threads = common.threads;
      const ExtremalResult r = minimize(n, restarts, search_cfg);
      if (!trace_path.empty()) {
        std::ofstream f(trace_path, std::ios::binary);
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + trace_path);
        f << trace_to_csv(r);
      }
      emit(common, dump(extremal_to_json(r)), out);
      if (!r.converged) err << "warning: " << to_string(ErrorKind::NoConvergence) << ": no restart converged\n";
      return r.lower_bound_violations == 0 ? kExitOk : kExitViolation;
    }
    if (*coalesce) {
      const CirclePoly p = load_polynomial(input, binomial, leading);
      const std::vector<double> eps = parse_schedule(schedule);
      const CoalescenceTable t = coalescence_experiment(p, eps, common.seed);
      emit(common, common.format == "json" ? dump(coalescence_to_json(t)) : coalescence_to_csv(t), out);
      return t.rows.back().max_deviation() < coalesce_tol ? kExitOk : kExitViolation;
    }
    if (*moments_cmd) {
      const CirclePoly p = load_polynomial(input, binomial, leading);
      const CirclePoly s = normalize_self_inversive(p).normalized;
      const MomentSequence m = moments(polar_factor(s), extra, order, precision);
      emit(common, dump(moments_to_json(m)), out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitInputError;
  }
  return kExitUsage;
}

}  // namespace circent
