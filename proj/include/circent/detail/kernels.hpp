#pragma once

// Scalar-generic numerical kernels shared by the double and extended
// precision paths. Everything here is header-only and free of error
// handling; callers validate preconditions.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace circent::detail {

template <class T>
using CVec = std::vector<std::complex<T>>;

template <class T, class U>
CVec<T> convert(std::span<const std::complex<U>> in) {
  CVec<T> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i)
    out[i] = {static_cast<T>(in[i].real()), static_cast<T>(in[i].imag())};
  return out;
}

template <class T>
std::complex<T> horner(std::span<const std::complex<T>> c, std::complex<T> z) {
  std::complex<T> acc{0};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

template <class T>
std::complex<T> horner_derivative(std::span<const std::complex<T>> c, std::complex<T> z) {
  std::complex<T> acc{0};
  for (std::size_t i = c.size(); i-- > 1;) acc = acc * z + static_cast<T>(i) * c[i];
  return acc;
}

/// a * prod (z - root), lowest degree first.
template <class T>
CVec<T> expand_roots(std::complex<T> lead, std::span<const std::complex<T>> roots) {
  CVec<T> c(roots.size() + 1, std::complex<T>{0});
  c[0] = lead;
  std::size_t deg = 0;
  for (const auto& r : roots) {
    c[deg + 1] = c[deg];
    for (std::size_t j = deg; j > 0; --j) c[j] = c[j - 1] - r * c[j];
    c[0] = -r * c[0];
    ++deg;
  }
  return c;
}

/// Product truncated at degree `max_degree`.
template <class T>
CVec<T> mul_trunc(std::span<const std::complex<T>> a, std::span<const std::complex<T>> b,
                  std::size_t max_degree) {
  CVec<T> out(max_degree + 1, std::complex<T>{0});
  for (std::size_t i = 0; i < a.size() && i <= max_degree; ++i) {
    if (a[i] == std::complex<T>{0}) continue;
    const std::size_t jmax = std::min(b.size(), max_degree - i + 1);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Taylor coefficients 0..K of 1/q. Requires q[0] != 0.
template <class T>
CVec<T> series_inverse(std::span<const std::complex<T>> q, std::size_t K) {
  CVec<T> inv(K + 1, std::complex<T>{0});
  const std::complex<T> q0inv = std::complex<T>{1} / q[0];
  inv[0] = q0inv;
  for (std::size_t k = 1; k <= K; ++k) {
    std::complex<T> s{0};
    const std::size_t jmax = std::min(k, q.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) s += q[j] * inv[k - j];
    inv[k] = -s * q0inv;
  }
  return inv;
}

/// c_k = sum_j A_{j+k} conj(A_j) for k = 0..deg A. Negative lags follow by
/// Hermitian symmetry.
template <class T>
CVec<T> autocorrelation(std::span<const std::complex<T>> a) {
  const std::size_t n = a.size();
  CVec<T> c(n, std::complex<T>{0});
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<T> s{0};
    for (std::size_t j = 0; j + k < n; ++j) s += a[j + k] * std::conj(a[j]);
    c[k] = s;
  }
  // c_0 is real by construction.
  if (n > 0) c[0] = {c[0].real(), T{0}};
  return c;
}

/// Integral of |A|^2 log|e^{it} - rho|^2 dm, given the autocorrelation of A.
/// Exact: the log series pairs with finitely many Fourier modes of |A|^2.
template <class T>
T log_factor_pairing(std::span<const std::complex<T>> autocorr, std::complex<T> rho) {
  using std::abs;
  using std::log;
  const T mod = abs(rho);
  std::complex<T> mu;
  T value{0};
  if (mod <= T{1}) {
    mu = rho;
  } else {
    mu = std::complex<T>{1} / std::conj(rho);
    value += T{2} * log(mod) * autocorr[0].real();
  }
  std::complex<T> pw{1};
  for (std::size_t m = 1; m < autocorr.size(); ++m) {
    pw *= mu;
    value -= T{2} * (pw * autocorr[m]).real() / static_cast<T>(m);
  }
  return value;
}

/// Integral of |A|^2 log|B|^2 dm for B = lead * prod(z - root).
template <class T>
T log_pair_from_roots(std::span<const std::complex<T>> autocorr, std::complex<T> lead,
                      std::span<const std::complex<T>> roots) {
  T value = autocorr[0].real() * std::log(std::norm(lead));
  for (const auto& r : roots) value += log_factor_pairing<T>(autocorr, r);
  return value;
}

/// Eigenvalues of the companion matrix of c (c.back() != 0, size >= 2).
template <class T>
CVec<T> companion_eigenvalues(std::span<const std::complex<T>> c) {
  using Mat = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index d = static_cast<Eigen::Index>(c.size()) - 1;
  if (d == 1) return {-c[0] / c[1]};
  Mat comp = Mat::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) comp(i, i - 1) = std::complex<T>{1};
  for (Eigen::Index i = 0; i < d; ++i) comp(i, d - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Mat> solver(comp, /*computeEigenvectors=*/false);
  CVec<T> out(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

/// |B(z)| relative to the evaluation scale sum |b_j| |z|^j (backward error).
template <class T>
T backward_residual(std::span<const std::complex<T>> c, std::complex<T> z) {
  const T az = std::abs(z);
  T scale{0};
  T pw{1};
  for (const auto& cj : c) {
    scale += std::abs(cj) * pw;
    pw *= az;
  }
  if (scale == T{0}) return T{0};
  return std::abs(horner<T>(c, z)) / scale;
}

/// One Newton step, kept only when it lowers the backward residual.
template <class T>
std::complex<T> newton_polish(std::span<const std::complex<T>> c, std::complex<T> z) {
  const std::complex<T> d = horner_derivative<T>(c, z);
  if (d == std::complex<T>{0}) return z;
  const std::complex<T> cand = z - horner<T>(c, z) / d;
  if (!(std::isfinite(cand.real()) && std::isfinite(cand.imag()))) return z;
  return backward_residual<T>(c, cand) < backward_residual<T>(c, z) ? cand : z;
}

/// M_k = <r^k q, q> for k = 0..count-1 through degrees 0..deg q, where
/// r = qstar / q as a power series. Only coefficients below q.size() matter.
template <class T>
CVec<T> moment_series(std::span<const std::complex<T>> q, std::span<const std::complex<T>> qstar,
                      std::size_t count, std::size_t series_order) {
  const std::size_t top = q.size() - 1;
  const std::size_t K = std::max(series_order, top);
  const CVec<T> inv = series_inverse<T>(q, K);
  CVec<T> r = mul_trunc<T>(qstar, inv, K);
  r[0] = std::complex<T>{0};  // qstar has zero constant term
  CVec<T> f(q.begin(), q.end());
  CVec<T> out(count, std::complex<T>{0});
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) f = mul_trunc<T>(r, f, top);
    std::complex<T> s{0};
    for (std::size_t j = 0; j <= top; ++j) s += f[j] * std::conj(q[j]);
    out[k] = s;
  }
  return out;
}

}  // namespace circent::detail
