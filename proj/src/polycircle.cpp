#include "circent/polycircle.hpp"

#include "circent/detail/kernels.hpp"
#include "circent/error.hpp"
#include "circent/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace circent {

namespace {

double max_abs(CoeffView c) {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

double coeff_distance(CoeffView a, CoeffView b) {
  const std::size_t n = std::max(a.size(), b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx x = i < a.size() ? a[i] : cplx{};
    const cplx y = i < b.size() ? b[i] : cplx{};
    d = std::max(d, std::abs(x - y));
  }
  return d;
}

// Groups roots by single linkage at distance `tol`.
std::vector<std::vector<cplx>> cluster(const std::vector<cplx>& roots, double tol) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(roots[i] - roots[j]) < tol) parent[find(i)] = find(j);
  std::vector<std::vector<cplx>> groups;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[r])].push_back(roots[i]);
  }
  return groups;
}

}  // namespace

CirclePoly::CirclePoly(std::vector<cplx> roots, cplx leading)
    : roots_(std::move(roots)), leading_(leading) {
  coeffs_ = detail::expand_roots<double>(leading_, roots_);
}

CirclePoly CirclePoly::from_roots(std::vector<cplx> roots, cplx leading, double unimod_tol) {
  if (leading == cplx{}) throw Error(ErrorKind::ZeroLeading, "leading factor is zero");
  if (roots.empty()) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double m = std::abs(roots[i]);
    if (!(std::abs(m - 1.0) <= unimod_tol))
      throw Error(ErrorKind::NonUnimodularRoot,
                  "root " + std::to_string(i) + " has modulus " + std::to_string(m));
    roots[i] /= m;
  }
  return CirclePoly(std::move(roots), leading);
}

CirclePoly CirclePoly::from_angles(const std::vector<double>& angles, cplx leading) {
  std::vector<cplx> roots;
  roots.reserve(angles.size());
  for (double a : angles) roots.push_back(std::polar(1.0, a));
  return from_roots(std::move(roots), leading);
}

CirclePoly CirclePoly::binomial(int n, cplx omega, cplx c) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  if (std::abs(std::abs(omega) - 1.0) > tol::unimod)
    throw Error(ErrorKind::NonUnimodularRoot, "omega must be unimodular");
  // z^n = -omega
  const double base = std::arg(-omega);
  std::vector<cplx> roots;
  for (int k = 0; k < n; ++k)
    roots.push_back(std::polar(1.0, (base + 2.0 * std::numbers::pi * k) / n));
  CirclePoly p = from_roots(std::move(roots), c);
  // The expansion leaves O(eps) rubbish in the middle coefficients; the
  // binomial is exactly known.
  std::fill(p.coeffs_.begin(), p.coeffs_.end(), cplx{});
  p.coeffs_.front() = c * omega;
  p.coeffs_.back() = c;
  return p;
}

CirclePoly CirclePoly::from_coefficients(const Coeffs& coeffs, double circle_tol,
                                         double cluster_tol) {
  Coeffs c = coeffs;
  while (!c.empty() && c.back() == cplx{}) c.pop_back();
  if (c.empty()) throw Error(ErrorKind::ZeroPolynomial, "all coefficients are zero");
  if (c.size() < 2) throw Error(ErrorKind::InvalidArgument, "constant polynomial");
  if (c.front() == cplx{}) throw Error(ErrorKind::RootsOffCircle, "root at the origin");

  std::vector<cplx> raw = detail::companion_eigenvalues<double>(c);
  for (auto& r : raw) r = detail::newton_polish<double>(c, r);
  const double scale = max_abs(c);
  const double reproduce_tol = 1e-9 * scale;

  // Preferred: merge clusters into exact multiple roots.
  std::vector<cplx> merged;
  double worst = 0.0;
  for (const auto& g : cluster(raw, cluster_tol)) {
    cplx centroid{};
    for (const auto& r : g) centroid += r;
    centroid /= static_cast<double>(g.size());
    worst = std::max(worst, std::abs(std::abs(centroid) - 1.0));
    for (std::size_t k = 0; k < g.size(); ++k) merged.push_back(centroid / std::abs(centroid));
  }
  if (worst <= circle_tol) {
    const Coeffs re = detail::expand_roots<double>(c.back(), merged);
    if (coeff_distance(re, c) <= reproduce_tol) return CirclePoly(std::move(merged), c.back());
  }

  std::vector<cplx> projected;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double m = std::abs(raw[i]);
    if (std::abs(m - 1.0) > circle_tol)
      throw Error(ErrorKind::RootsOffCircle,
                  "recovered root " + std::to_string(i) + " has modulus " + std::to_string(m));
    projected.push_back(raw[i] / m);
  }
  const Coeffs re = detail::expand_roots<double>(c.back(), projected);
  if (coeff_distance(re, c) > reproduce_tol)
    throw Error(ErrorKind::RootsOffCircle, "unimodular roots do not reproduce the coefficients");
  return CirclePoly(std::move(projected), c.back());
}

std::vector<double> CirclePoly::angles() const {
  std::vector<double> out;
  out.reserve(roots_.size());
  for (const auto& r : roots_) {
    double a = std::arg(r);
    if (a < 0) a += 2.0 * std::numbers::pi;
    out.push_back(a);
  }
  return out;
}

CirclePoly CirclePoly::scaled(cplx eta) const {
  if (eta == cplx{}) throw Error(ErrorKind::ZeroLeading, "scale factor is zero");
  CirclePoly out = *this;
  out.leading_ *= eta;
  for (auto& x : out.coeffs_) x *= eta;
  return out;
}

CirclePoly CirclePoly::symmetrized() const {
  CirclePoly out = *this;
  const std::size_t m = coeffs_.size();
  for (std::size_t j = 0; j < m; ++j) out.coeffs_[j] = 0.5 * (coeffs_[j] + std::conj(coeffs_[m - 1 - j]));
  out.leading_ = out.coeffs_.back();
  return out;
}

bool CirclePoly::simple_zeros(double sep) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t j = i + 1; j < roots_.size(); ++j)
      if (!(std::abs(roots_[i] - roots_[j]) > sep)) return false;
  return true;
}

Coeffs reflect(CoeffView f, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  const auto size = static_cast<std::size_t>(n) + 1;
  for (std::size_t j = size; j < f.size(); ++j)
    if (f[j] != cplx{})
      throw Error(ErrorKind::DegreeOverflow,
                  "coefficient of degree " + std::to_string(j) + " exceeds n = " + std::to_string(n));
  Coeffs out(size, cplx{});
  for (std::size_t j = 0; j < size; ++j) {
    const std::size_t src = size - 1 - j;
    if (src < f.size()) out[j] = std::conj(f[src]);
  }
  return out;
}

bool is_self_inversive(CoeffView coeffs, double expand_tol) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  const Coeffs r = reflect(coeffs, n);
  return coeff_distance(r, coeffs) <= expand_tol * max_abs(coeffs);
}

PolarDecomposition polar_factor(const CirclePoly& p, double expand_tol) {
  const int n = p.degree();
  if (!is_self_inversive(p.coeffs(), expand_tol))
    throw Error(ErrorKind::NotSelfInversive, "reflect(p) differs from p");
  const Coeffs& a = p.coeffs();
  PolarDecomposition d{p, Coeffs(static_cast<std::size_t>(n)), Coeffs(static_cast<std::size_t>(n) + 1),
                       p.simple_zeros()};
  for (int j = 0; j <= n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    if (j < n) d.q[uj] = a[uj] * (static_cast<double>(n - j) / n);
    d.qstar[uj] = j == 0 ? cplx{} : a[uj] * (static_cast<double>(j) / n);
  }
  return d;
}

NormalizationResult normalize_self_inversive(const CirclePoly& p, EtaBranch branch,
                                             double expand_tol) {
  const Coeffs& a = p.coeffs();
  const Coeffs ps = reflect(a, p.degree());
  cplx num{};
  double den = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    num += ps[j] * std::conj(a[j]);
    den += std::norm(a[j]);
  }
  cplx lambda = num / den;
  if (std::abs(lambda) == 0.0)
    throw Error(ErrorKind::InconsistentReflection, "p* is orthogonal to p");
  lambda /= std::abs(lambda);
  double resid = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) resid = std::max(resid, std::abs(ps[j] - lambda * a[j]));
  if (resid > expand_tol * max_abs(a))
    throw Error(ErrorKind::InconsistentReflection,
                "p*/p is not a unimodular constant (residual " + std::to_string(resid) + ")");

  cplx eta = std::sqrt(lambda);
  if (eta.real() < 0.0) eta = -eta;
  if (branch == EtaBranch::Canonical && std::abs(eta.real()) <= tol::unimod && eta.imag() < 0.0)
    eta = -eta;
  eta /= std::abs(eta);
  return {eta, lambda, p.scaled(eta).symmetrized()};
}

double parseval_norm(CoeffView coeffs) {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  return s;
}

double gamma_remainder(const CirclePoly& p) {
  const int n = p.degree();
  const Coeffs& a = p.coeffs();
  double s = 0.0;
  for (int j = 1; j < n; ++j)
    s += static_cast<double>(j) * (n - j) / (static_cast<double>(n) * n) * std::norm(a[static_cast<std::size_t>(j)]);
  return s;
}

double weighted_form_Sn(CoeffView g, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "S_n requires n >= 2");
  double s = 0.0;
  for (int j = 1; j < n && static_cast<std::size_t>(j) < g.size(); ++j)
    s += static_cast<double>(n - j) / j * std::norm(g[static_cast<std::size_t>(j)]);
  return s;
}

double partial_energy_Al(CoeffView g, int l) {
  if (l < 0) throw Error(ErrorKind::InvalidArgument, "l must be nonnegative");
  double s = 0.0;
  for (int j = 0; j <= l && static_cast<std::size_t>(j) < g.size(); ++j)
    s += std::norm(g[static_cast<std::size_t>(j)]);
  return s;
}

CirclePoly perturb_roots(const CirclePoly& p, double epsilon, std::uint64_t seed) {
  if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");
  const int n = p.degree();
  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (seed != 0) {
    Rng rng(seed);
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[static_cast<std::size_t>(rng.next() % i)]);
  }
  std::vector<cplx> roots = p.roots();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const double shift = epsilon * static_cast<double>(k + 1) / n;
    roots[order[k]] *= std::polar(1.0, shift);
  }
  CirclePoly moved = CirclePoly::from_roots(std::move(roots), p.leading());
  if (!moved.simple_zeros())
    throw Error(ErrorKind::SeparationFailure, "rotated roots are not pairwise distinct");
  return normalize_self_inversive(moved, EtaBranch::NearestOne).normalized;
}

}  // namespace circent
