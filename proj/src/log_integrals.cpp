#include "circent/log_integrals.hpp"

#include "circent/detail/kernels.hpp"
#include "circent/error.hpp"
#include "circent/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace circent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double max_abs(CoeffView c) {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

// Drops exact zeros and rounding-level coefficients from the top.
Coeffs trim_top(CoeffView c, double rel = 4.0 * std::numeric_limits<double>::epsilon()) {
  const double cut = rel * max_abs(c);
  std::size_t n = c.size();
  while (n > 0 && std::abs(c[n - 1]) <= cut) --n;
  return Coeffs(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
}

void require_nonzero(CoeffView c, const char* what) {
  if (max_abs(c) == 0.0) throw Error(ErrorKind::ZeroPolynomial, std::string(what) + " is identically zero");
}

template <class T>
double spectral_impl(CoeffView a, const FactoredPoly& b, SpectralCertificate* cert) {
  const auto av = detail::convert<T, double>(a);
  const auto c = detail::autocorrelation<T>(av);
  detail::CVec<T> roots;
  roots.reserve(b.roots.size());
  double near = 0.0;
  for (const auto& r : b.roots) {
    const double dev = std::abs(std::abs(r) - 1.0);
    if (dev < tol::sep) near = std::max(near, dev);
    roots.emplace_back(static_cast<T>(r.real()), static_cast<T>(r.imag()));
  }
  const std::complex<T> lead{static_cast<T>(b.leading.real()), static_cast<T>(b.leading.imag())};
  if (cert) cert->near_boundary = std::max(cert->near_boundary, near);
  return static_cast<double>(detail::log_pair_from_roots<T>(c, lead, roots));
}

// Roots and pairing both carried out in T.
template <class T>
double spectral_from_coeffs(CoeffView a, const Coeffs& b, SpectralCertificate* cert) {
  const auto av = detail::convert<T, double>(a);
  const auto c = detail::autocorrelation<T>(av);
  const auto bl = detail::convert<T, double>(b);
  detail::CVec<T> roots;
  if (bl.size() > 1) {
    double worst = 0.0;
    for (auto r : detail::companion_eigenvalues<T>(bl)) {
      for (int it = 0; it < 3; ++it) r = detail::newton_polish<T>(bl, r);
      worst = std::max(worst, static_cast<double>(detail::backward_residual<T>(bl, r)));
      roots.push_back(r);
    }
    if (worst > tol::root)
      throw Error(ErrorKind::IllConditioned, "root residual " + std::to_string(worst) + " exceeds tolerance");
    if (cert) cert->max_root_residual = std::max(cert->max_root_residual, worst);
  }
  return static_cast<double>(detail::log_pair_from_roots<T>(c, bl.back(), roots));
}

}  // namespace

TrigSquare::TrigSquare(CoeffView a) : pos_(detail::autocorrelation<double>(a)) {}

cplx TrigSquare::coeff(int k) const {
  const auto ak = static_cast<std::size_t>(std::abs(k));
  if (ak >= pos_.size()) return {};
  return k >= 0 ? pos_[ak] : std::conj(pos_[ak]);
}

double TrigSquare::eval(double t) const {
  double s = pos_[0].real();
  for (std::size_t k = 1; k < pos_.size(); ++k)
    s += 2.0 * (pos_[k] * std::polar(1.0, static_cast<double>(k) * t)).real();
  return s;
}

TrigSquare trig_square(CoeffView a) {
  require_nonzero(a, "A");
  return TrigSquare(trim_top(a, 0.0));
}

RootCertificate poly_roots(CoeffView b, double root_tol) {
  require_nonzero(b, "B");
  const Coeffs c = trim_top(b);
  RootCertificate cert;
  cert.roots_at_infinity = static_cast<int>(b.size() - c.size());
  cert.leading = c.back();
  if (c.size() == 1) return cert;
  cert.roots = detail::companion_eigenvalues<double>(c);
  for (auto& r : cert.roots) {
    r = detail::newton_polish<double>(c, r);
    const double res = detail::backward_residual<double>(c, r);
    cert.residuals.push_back(res);
    cert.max_residual = std::max(cert.max_residual, res);
  }
  if (cert.max_residual > root_tol)
    throw Error(ErrorKind::IllConditioned,
                "root residual " + std::to_string(cert.max_residual) + " exceeds tolerance");
  return cert;
}

double log_pair_spectral(CoeffView a, const FactoredPoly& b, SpectralCertificate* cert,
                         Precision precision) {
  require_nonzero(a, "A");
  if (b.leading == cplx{}) throw Error(ErrorKind::ZeroPolynomial, "B is identically zero");
  return precision == Precision::Extended ? spectral_impl<long double>(a, b, cert)
                                          : spectral_impl<double>(a, b, cert);
}

double log_pair_spectral(CoeffView a, CoeffView b, SpectralCertificate* cert, Precision precision) {
  require_nonzero(a, "A");
  if (precision == Precision::Extended) {
    require_nonzero(b, "B");
    return spectral_from_coeffs<long double>(a, trim_top(b), cert);
  }
  const RootCertificate rc = poly_roots(b);
  if (cert) cert->max_root_residual = std::max(cert->max_root_residual, rc.max_residual);
  return spectral_impl<double>(a, FactoredPoly{rc.leading, rc.roots}, cert);
}

FactoredPoly polar_factor_roots(const CirclePoly& p, SpectralCertificate* cert) {
  const int n = p.degree();
  const Coeffs& a = p.coeffs();
  Coeffs q(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) q[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)] * (static_cast<double>(n - j) / n);

  // Clusters of p's roots; a zero of multiplicity m of p is a zero of
  // multiplicity m - 1 of q.
  const auto& roots = p.roots();
  std::vector<bool> used(roots.size(), false);
  std::vector<cplx> known;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && !(std::abs(roots[i] - roots[j]) > tol::sep)) {
        used[j] = true;
        known.push_back(roots[i]);
      }
    }
  }

  // Deflation and eigenvalues run in long double: clustered zeros of p make
  // the remaining roots of q ill-conditioned in double.
  using LC = std::complex<long double>;
  const Coeffs top = trim_top(q, 1e-14);
  std::vector<LC> cof(top.begin(), top.end());
  for (const auto& tau : known) {
    // Synthetic division by (z - tau).
    const std::size_t d = cof.size() - 1;
    if (d == 0) throw Error(ErrorKind::IllConditioned, "polar factor degree exhausted during deflation");
    std::vector<LC> s(d);
    s[d - 1] = cof[d];
    for (std::size_t k = d - 1; k > 0; --k) s[k - 1] = cof[k] + LC(tau) * s[k];
    cof = std::move(s);
  }

  FactoredPoly out;
  out.roots = known;
  out.leading = cplx(cof.back());
  if (cof.size() > 1) {
    const Coeffs cof_d(cof.begin(), cof.end());
    for (auto r : detail::companion_eigenvalues<long double>(cof)) {
      for (int it = 0; it < 3; ++it) r = detail::newton_polish<long double>(cof, r);
      const cplx rd(r);
      const double res = detail::backward_residual<double>(cof_d, rd);
      if (cert) cert->max_root_residual = std::max(cert->max_root_residual, res);
      if (res > tol::root)
        throw Error(ErrorKind::IllConditioned, "polar factor root residual " + std::to_string(res));
      out.roots.push_back(rd);
    }
  }
  return out;
}

QuadratureReport log_pair_quadrature_report(CoeffView a_in, CoeffView b_in,
                                            const QuadratureConfig& config) {
  require_nonzero(a_in, "A");
  require_nonzero(b_in, "B");
  if (config.base_nodes < 16 || config.max_depth < 1 || !(config.tolerance > 0.0) ||
      !(config.window > 0.0))
    throw Error(ErrorKind::InvalidArgument, "invalid quadrature configuration");
  const Coeffs a = trim_top(a_in, 0.0);
  const Coeffs b = trim_top(b_in, 0.0);
  const double scale = std::max(1.0, parseval_norm(a));
  const double tol = config.tolerance * scale;

  QuadratureReport rep;
  // x log x = 0 at x = 0, and a zero of B alone is a null set.
  auto integrand_at = [&](cplx z) {
    const double bb = std::norm(detail::horner<double>(b, z));
    if (bb == 0.0) return 0.0;
    const double aa = std::norm(detail::horner<double>(a, z));
    if (aa == 0.0) return 0.0;
    return aa * std::log(bb);
  };

  // Near-zeros of B on the circle: grid minima refined by Newton.
  std::vector<double> singular;
  const int N = config.base_nodes;
  if (b.size() > 1) {
    std::vector<double> mag(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
      mag[static_cast<std::size_t>(i)] = std::abs(detail::horner<double>(b, std::polar(1.0, kTwoPi * i / N)));
    const double radius = std::max(config.window, 40.0 / N);
    for (int i = 0; i < N; ++i) {
      const double prev = mag[static_cast<std::size_t>((i + N - 1) % N)];
      const double next = mag[static_cast<std::size_t>((i + 1) % N)];
      const double here = mag[static_cast<std::size_t>(i)];
      if (!(here < prev && here <= next)) continue;
      cplx z = std::polar(1.0, kTwoPi * i / N);
      for (int it = 0; it < 200; ++it) {
        const cplx d = detail::horner_derivative<double>(b, z);
        const cplx v = detail::horner<double>(b, z);
        if (v == cplx{} || d == cplx{}) break;
        const cplx step = v / d;
        z -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
      }
      if (!(std::isfinite(z.real()) && std::isfinite(z.imag()))) continue;
      if (std::abs(std::abs(z) - 1.0) >= radius) continue;
      double ang = std::arg(z);
      if (ang < 0) ang += kTwoPi;
      // Newton may wander; keep only zeros near the detected minimum.
      double off = std::abs(ang - kTwoPi * i / N);
      off = std::min(off, kTwoPi - off);
      if (off > 8.0 * kTwoPi / N + radius) continue;
      singular.push_back(ang);
    }
    std::sort(singular.begin(), singular.end());
    singular.erase(std::unique(singular.begin(), singular.end(),
                               [](double x, double y) { return std::abs(x - y) < 1e-13; }),
                   singular.end());
    if (singular.size() > 1 && kTwoPi - singular.back() + singular.front() < 1e-13) singular.pop_back();
  }
  rep.singular_points = static_cast<int>(singular.size());

  auto f = [&](double t) { return integrand_at(std::polar(1.0, t)); };

  if (singular.empty()) {
    const double full = trapezoid_mean(f, N);
    const double half = trapezoid_mean(f, N / 2);
    rep.evaluations = N + N / 2;
    if (std::abs(full - half) <= tol) {
      rep.value = full;
      rep.error_estimate = std::abs(full - half);
      return rep;
    }
    singular.push_back(0.0);  // fall through to the adaptive route on [0, 2pi]
  }

  rep.adaptive = true;
  const std::size_t m = singular.size();
  const double piece_tol = tol * kTwoPi / static_cast<double>(3 * m);
  constexpr double kSMax = 37.0;  // e^{-37} is below the resolution of t
  double total = 0.0;
  double err = 0.0;
  bool exhausted = false;
  auto add = [&](const AdaptiveResult& r) {
    total += r.value;
    err += r.error;
    rep.evaluations += r.evaluations;
    exhausted = exhausted || r.depth_exhausted;
  };
  for (std::size_t i = 0; i < m; ++i) {
    const double lo = singular[i];
    const double hi = i + 1 < m ? singular[i + 1] : singular[0] + kTwoPi;
    const double len = hi - lo;
    const double w = std::min(config.window, 0.5 * len);
    const cplx zlo = std::polar(1.0, lo);
    const cplx zhi = std::polar(1.0, hi);
    // t = lo + e^{-s} and t = hi - e^{-s}; rotating the endpoint keeps tiny
    // offsets from being rounded away.
    auto left = [&](double s) {
      const double e = std::exp(-s);
      return integrand_at(zlo * std::polar(1.0, e)) * e;
    };
    auto right = [&](double s) {
      const double e = std::exp(-s);
      return integrand_at(zhi * std::polar(1.0, -e)) * e;
    };
    const double s0 = -std::log(w);
    add(gauss_kronrod_adaptive(left, s0, kSMax, piece_tol, config.max_depth));
    add(gauss_kronrod_adaptive(right, s0, kSMax, piece_tol, config.max_depth));
    if (len > 2.0 * w) add(gauss_kronrod_adaptive(f, lo + w, hi - w, piece_tol, config.max_depth));
  }
  rep.value = total / kTwoPi;
  rep.error_estimate = err / kTwoPi;
  if (exhausted && rep.error_estimate > tol)
    throw Error(ErrorKind::BudgetExceeded,
                "refinement depth exhausted with error estimate " + std::to_string(rep.error_estimate));
  return rep;
}

RatioFunctionalValue ratio_functional(const CirclePoly& p, Route route, const QuadratureConfig& config,
                                      Precision precision) {
  RatioFunctionalValue out;
  if (route == Route::Spectral) {
    out.entropy_term = log_pair_spectral(p.coeffs(), FactoredPoly{p.leading(), p.roots()}, nullptr, precision);
    out.jensen_term = log_pair_spectral(p.coeffs(), polar_factor_roots(p), nullptr, precision);
    out.route = "spectral";
  } else {
    const int n = p.degree();
    Coeffs q(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      q[static_cast<std::size_t>(j)] = p.coeffs()[static_cast<std::size_t>(j)] * (static_cast<double>(n - j) / n);
    out.entropy_term = log_pair_quadrature(p.coeffs(), p.coeffs(), config);
    out.jensen_term = log_pair_quadrature(p.coeffs(), q, config);
    out.route = "quadrature";
  }
  out.value = out.entropy_term - out.jensen_term;
  return out;
}

}  // namespace circent
