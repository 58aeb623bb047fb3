#include "circent/blaschke.hpp"

#include "circent/detail/kernels.hpp"
#include "circent/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace circent {

namespace {
constexpr int kGuard = 8;
}

Coeffs series_inverse(CoeffView q, int K) {
  if (K < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  if (q.empty() || q[0] == cplx{}) throw Error(ErrorKind::ZeroConstantTerm, "q(0) == 0");
  return detail::series_inverse<double>(q, static_cast<std::size_t>(K));
}

Coeffs series_multiply(CoeffView a, CoeffView b, int K) {
  if (K < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  return detail::mul_trunc<double>(a, b, static_cast<std::size_t>(K));
}

RatioSeries blaschke_quotient(const PolarDecomposition& d, int K) {
  if (K < 0) K = 4 * d.degree();
  if (d.q.empty() || d.q[0] == cplx{}) throw Error(ErrorKind::ZeroConstantTerm, "q(0) == 0");
  // Long division qstar / q, so that r * q reproduces qstar term by term.
  using LD = std::complex<long double>;
  const auto order = static_cast<std::size_t>(K);
  std::vector<LD> r(order + 1, LD{});
  const LD q0(d.q[0]);
  for (std::size_t k = 1; k <= order; ++k) {
    LD acc = k < d.qstar.size() ? LD(d.qstar[k]) : LD{};
    for (std::size_t j = 1; j < k; ++j)
      if (k - j < d.q.size()) acc -= r[j] * LD(d.q[k - j]);
    r[k] = acc / q0;
  }
  RatioSeries out{Coeffs(order + 1), K};
  for (std::size_t k = 0; k <= order; ++k)
    out.r[k] = cplx(static_cast<double>(r[k].real()), static_cast<double>(r[k].imag()));
  return out;
}

cplx blaschke_value(const PolarDecomposition& d, cplx z) {
  return detail::horner<double>(d.qstar, z) / detail::horner<double>(d.q, z);
}

cplx MomentSequence::at(int k) const {
  if (k < 0) return {};
  const auto uk = static_cast<std::size_t>(k);
  if (uk < values.size()) return values[uk];
  if (uk - values.size() < over_range.size()) return over_range[uk - values.size()];
  return {};
}

MomentSequence moments(const PolarDecomposition& d, int extra, int K, Precision precision) {
  const int n = d.degree();
  if (extra < 0) throw Error(ErrorKind::InvalidArgument, "negative over-range count");
  if (d.q.empty() || d.q[0] == cplx{}) throw Error(ErrorKind::ZeroConstantTerm, "q(0) == 0");
  if (K < 0) K = 4 * n + kGuard;
  const auto count = static_cast<std::size_t>(n + extra);
  const auto order = static_cast<std::size_t>(K);

  std::vector<cplx> all;
  if (precision == Precision::Extended) {
    using LD = long double;
    const auto q = detail::convert<LD, double>(d.q);
    const auto qs = detail::convert<LD, double>(d.qstar);
    const auto m = detail::moment_series<LD>(q, qs, count, order);
    all = detail::convert<double, LD>(m);
  } else {
    all = detail::moment_series<double>(d.q, d.qstar, count, order);
  }
  MomentSequence out;
  out.degree = n;
  out.simple_zeros = d.simple_zeros;
  out.truncation_order = K;
  out.values.assign(all.begin(), all.begin() + n);
  out.over_range.assign(all.begin() + n, all.end());
  // M_0 is a squared norm.
  out.values[0] = {out.values[0].real(), 0.0};
  return out;
}

cplx moment_quadrature(const PolarDecomposition& d, int k, int nodes) {
  cplx acc{};
  for (int i = 0; i < nodes; ++i) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * i / nodes);
    const cplx qv = detail::horner<double>(d.q, z);
    const cplx sv = detail::horner<double>(d.qstar, z);
    // |q|^2 r^k = |q|^2 (qstar/q)^k
    acc += std::norm(qv) * std::pow(sv / qv, k);
  }
  return acc / static_cast<double>(nodes);
}

Coeffs blaschke_series(const BlaschkeParams& phi, int K) {
  if (K < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  const auto uK = static_cast<std::size_t>(K);
  Coeffs acc(uK + 1, cplx{});
  acc[0] = phi.gamma;
  for (const auto& a : phi.zeros) {
    if (std::abs(a) >= 1.0 - tol::sep)
      throw Error(ErrorKind::ZeroOnBoundary, "Blaschke zero not strictly inside the disk");
    // (z - a) / (1 - conj(a) z) = (z - a) sum (conj(a) z)^k
    Coeffs factor(uK + 1, cplx{});
    cplx pw = 1.0;
    const cplx ca = std::conj(a);
    for (std::size_t k = 0; k <= uK; ++k) {
      factor[k] += -a * pw;
      if (k + 1 <= uK) factor[k + 1] += pw;
      pw *= ca;
    }
    acc = detail::mul_trunc<double>(acc, factor, uK);
  }
  return acc;
}

SchurContractionReport schur_contraction_check(const BlaschkeParams& phi, CoeffView f, int n,
                                               int guard, double slack_tol) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "S_n requires n >= 2");
  if (!f.empty() && f[0] != cplx{}) throw Error(ErrorKind::InvalidArgument, "f(0) must vanish");
  const int K = n - 1 + guard;
  const Coeffs series = blaschke_series(phi, K);
  const Coeffs prod = series_multiply(series, f, K);

  SchurContractionReport rep;
  rep.n = n;
  rep.sn_product = weighted_form_Sn(prod, n);
  rep.sn_input = weighted_form_Sn(f, n);
  double slack = rep.sn_input - rep.sn_product;
  for (int l = 0; l < n; ++l) {
    rep.al_product.push_back(partial_energy_Al(prod, l));
    rep.al_input.push_back(partial_energy_Al(f, l));
    slack = std::min(slack, rep.al_input.back() - rep.al_product.back());
  }
  rep.min_slack = slack;
  rep.passed = slack >= -slack_tol;
  return rep;
}

}  // namespace circent
