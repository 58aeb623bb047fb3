#pragma once

#include <complex>
#include <span>
#include <vector>

namespace circent {

using cplx = std::complex<double>;
/// Coefficient vectors are stored lowest degree first.
using Coeffs = std::vector<cplx>;
using CoeffView = std::span<const cplx>;

/// Default tolerances.
namespace tol {
inline constexpr double unimod = 1e-12;
inline constexpr double expand = 1e-10;
inline constexpr double sep = 1e-8;
inline constexpr double cross = 1e-8;
inline constexpr double series = 1e-11;
inline constexpr double root = 1e-6;
inline constexpr double eq = 1e-8;
inline constexpr double gap = 1e-9;
}  // namespace tol

/// Arithmetic used by the exact (spectral and series) routes.
enum class Precision {
  Double,    // 53-bit mantissa
  Extended,  // 64-bit mantissa (long double)
};

}  // namespace circent
