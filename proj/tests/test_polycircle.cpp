#include "circent/error.hpp"
#include "circent/polycircle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace circent;
using circent::oracle::kPi;

namespace {

void expect_coeffs(const Coeffs& got, const Coeffs& want, double tol = 1e-12) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_NEAR(got[i].real(), want[i].real(), tol) << "index " << i;
    EXPECT_NEAR(got[i].imag(), want[i].imag(), tol) << "index " << i;
  }
}

const cplx I{0.0, 1.0};

}  // namespace

TEST(FromRoots, LinearFactor) {
  const auto p = CirclePoly::from_roots({-1.0}, 1.0);
  expect_coeffs(p.coeffs(), {1.0, 1.0});
}

TEST(FromRoots, DoubleRootBinomialExpansion) {
  const auto p = CirclePoly::from_roots({1.0, 1.0}, 1.0);
  expect_coeffs(p.coeffs(), {1.0, -2.0, 1.0});
  EXPECT_FALSE(p.simple_zeros());
}

TEST(FromRoots, RootsOfMinusOmegaGiveBinomial) {
  const int n = 5;
  const cplx omega = std::polar(1.0, 0.7);
  const cplx c{0.3, -1.1};
  std::vector<cplx> roots;
  for (int k = 0; k < n; ++k) roots.push_back(std::polar(1.0, (std::arg(-omega) + 2 * kPi * k) / n));
  const auto p = CirclePoly::from_roots(roots, c);
  Coeffs want(n + 1, 0.0);
  want[0] = c * omega;
  want[n] = c;
  expect_coeffs(p.coeffs(), want, 1e-13);
}

TEST(FromRoots, ProjectsOntoCircle) {
  const auto p = CirclePoly::from_roots({cplx{1.0 + 5e-13, 0.0}}, 2.0);
  EXPECT_EQ(std::abs(p.roots()[0]), 1.0);
}

TEST(FromRoots, Errors) {
  try {
    CirclePoly::from_roots({cplx{1.1, 0.0}}, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonUnimodularRoot);
  }
  try {
    CirclePoly::from_roots({1.0}, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroLeading);
  }
}

TEST(FromCoefficients, RecoversDoubleRoot) {
  const auto p = CirclePoly::from_coefficients({1.0, -2.0, 1.0});
  ASSERT_EQ(p.degree(), 2);
  for (const auto& r : p.roots()) EXPECT_NEAR(std::abs(r - 1.0), 0.0, 1e-12);
  EXPECT_FALSE(p.simple_zeros());
}

TEST(FromCoefficients, RejectsOffCircle) {
  try {
    CirclePoly::from_coefficients({-2.0, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RootsOffCircle);
  }
}

TEST(Reflect, Examples) {
  expect_coeffs(reflect(Coeffs{1.0, -1.0}, 2), {0.0, -1.0, 1.0});
  const Coeffs si{-I, 0.0, I};
  expect_coeffs(reflect(si, 2), si);
  expect_coeffs(reflect(Coeffs{1.0}, 0), {1.0});
}

TEST(Reflect, DegreeOverflow) {
  try {
    reflect(Coeffs{1.0, 1.0, 1.0}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeOverflow);
  }
}

TEST(Reflect, InvolutionProperty) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.integer(0, 12);
    const int deg = rng.integer(0, n);
    Coeffs f(static_cast<std::size_t>(deg + 1));
    for (auto& c : f) c = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
    Coeffs back = reflect(reflect(f, n), n);
    back.resize(f.size());
    expect_coeffs(back, f, 0.0);
  }
}

TEST(Normalize, MinusOneGivesI) {
  const auto p = CirclePoly::from_coefficients({-1.0, 0.0, 1.0});
  const auto r = normalize_self_inversive(p);
  EXPECT_NEAR(std::abs(r.eta - I), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r.lambda + 1.0), 0.0, 1e-12);
  expect_coeffs(r.normalized.coeffs(), {-I, 0.0, I});
}

TEST(Normalize, AlreadySelfInversive) {
  const auto r = normalize_self_inversive(CirclePoly::from_roots({-1.0}, 1.0));
  EXPECT_NEAR(std::abs(r.eta - 1.0), 0.0, 1e-14);
}

TEST(Normalize, BinomialModuliUnchanged) {
  const auto p = CirclePoly::binomial(7, std::polar(1.0, 2.1), cplx{0.4, 0.9});
  const auto r = normalize_self_inversive(p);
  for (std::size_t j = 0; j < p.coeffs().size(); ++j)
    EXPECT_NEAR(std::abs(r.normalized.coeffs()[j]), std::abs(p.coeffs()[j]), 1e-13);
  EXPECT_TRUE(is_self_inversive(r.normalized.coeffs()));
}

TEST(Normalize, BranchConventionProperty) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_circle_poly(rng, rng.integer(1, 14));
    const auto r = normalize_self_inversive(p);
    EXPECT_NEAR(std::abs(r.eta), 1.0, 1e-12);
    EXPECT_TRUE(r.eta.real() > 0.0 || (r.eta.real() == 0.0 && r.eta.imag() > 0.0) ||
                std::abs(r.eta.real()) < 1e-15);
    const Coeffs& a = r.normalized.coeffs();
    const int n = r.normalized.degree();
    double scale = 0.0;
    for (const auto& c : a) scale = std::max(scale, std::abs(c));
    for (int j = 0; j <= n; ++j)
      EXPECT_LT(std::abs(a[static_cast<std::size_t>(j)] - std::conj(a[static_cast<std::size_t>(n - j)])),
                1e-10 * scale);
  }
}

TEST(PolarFactor, Examples) {
  const auto a = polar_factor(CirclePoly::from_coefficients({-I, 0.0, I}));
  expect_coeffs(a.q, {-I, 0.0});
  expect_coeffs(a.qstar, {0.0, 0.0, I});

  const auto b = polar_factor(CirclePoly::from_roots({1.0, 1.0}, 1.0));
  expect_coeffs(b.q, {1.0, -1.0});
  expect_coeffs(b.qstar, {0.0, -1.0, 1.0});
  EXPECT_FALSE(b.simple_zeros);

  const auto c = polar_factor(CirclePoly::binomial(4, 1.0));
  expect_coeffs(c.q, {1.0, 0.0, 0.0, 0.0});
  expect_coeffs(c.qstar, {0.0, 0.0, 0.0, 0.0, 1.0});
  EXPECT_TRUE(c.simple_zeros);
}

TEST(PolarFactor, NotSelfInversive) {
  try {
    polar_factor(CirclePoly::from_coefficients({-1.0, 0.0, 1.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSelfInversive);
  }
}

TEST(PolarFactor, DecompositionAndZeroFreenessProperty) {
  Rng rng(2024);
  for (int n = 2; n <= 12; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = normalize_self_inversive(random_circle_poly(rng, n, {.force_multiple = trial % 5 == 0})).normalized;
      const auto d = polar_factor(p);
      for (int j = 0; j <= n; ++j) {
        const cplx qj = j < n ? d.q[static_cast<std::size_t>(j)] : 0.0;
        EXPECT_LT(std::abs(qj + d.qstar[static_cast<std::size_t>(j)] - p.coeffs()[static_cast<std::size_t>(j)]), 1e-14);
      }
      EXPECT_EQ(d.qstar[0], 0.0);
      EXPECT_EQ(d.q[0], p.coeffs()[0]);
      double lo = 1e300;
      for (int i = 0; i < 4096; ++i) lo = std::min(lo, std::abs(oracle::eval(d.q, std::polar(0.999, 2 * kPi * i / 4096))));
      EXPECT_GT(lo, 0.0);
    }
  }
}

TEST(PolarFactor, BlaschkeModulusOnCircle) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = normalize_self_inversive(random_circle_poly(rng, rng.integer(1, 12))).normalized;
    const auto d = polar_factor(p);
    for (int i = 0; i < 512; ++i) {
      const auto z = std::polar(1.0L, 2 * std::numbers::pi_v<long double> * (i + 0.5L) / 512);
      const long double qa = std::abs(oracle::eval_ld(d.q, z));
      if (qa <= tol::sep) continue;
      EXPECT_NEAR(static_cast<double>(std::abs(oracle::eval_ld(d.qstar, z)) / qa), 1.0, 1e-10);
    }
  }
}

TEST(Functionals, ParsevalNorm) {
  EXPECT_DOUBLE_EQ(parseval_norm(CirclePoly::from_roots({-1.0}, 1.0)), 2.0);
  EXPECT_NEAR(parseval_norm(CirclePoly::binomial(5, std::polar(1.0, 0.3), 1 / std::numbers::sqrt2)), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(parseval_norm(CirclePoly::from_roots({1.0, 1.0}, 1.0)), 6.0);
}

TEST(Functionals, ParsevalMatchesQuadrature) {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_circle_poly(rng, rng.integer(1, 20));
    double mean = 0.0;
    const int m = 256;
    for (int i = 0; i < m; ++i) mean += std::norm(oracle::eval(p.coeffs(), std::polar(1.0, 2 * kPi * i / m)));
    EXPECT_NEAR(mean / m, parseval_norm(p), tol::cross);
  }
}

TEST(Functionals, GammaRemainder) {
  EXPECT_NEAR(gamma_remainder(CirclePoly::binomial(6, std::polar(1.0, 1.0), 2.0)), 0.0, 1e-28);
  EXPECT_NEAR(gamma_remainder(CirclePoly::from_roots({1.0, 1.0}, 1.0)), 1.0, 1e-15);
  EXPECT_EQ(gamma_remainder(CirclePoly::from_roots({std::polar(1.0, 0.4)}, 3.0)), 0.0);
}

TEST(Functionals, WeightedForm) {
  EXPECT_DOUBLE_EQ(weighted_form_Sn(Coeffs{0.0, -1.0, 1.0}, 2), 1.0);
  EXPECT_DOUBLE_EQ(weighted_form_Sn(Coeffs{5.0, 0.0, 0.0, 7.0}, 3), 0.0);
  EXPECT_DOUBLE_EQ(weighted_form_Sn(Coeffs{0.0, 1.0}, 3), 2.0);
  EXPECT_THROW(weighted_form_Sn(Coeffs{0.0, 1.0}, 1), Error);
}

TEST(Functionals, WeightedFormOfQstarIsGamma) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.integer(2, 15);
    const auto p = normalize_self_inversive(random_circle_poly(rng, n)).normalized;
    EXPECT_NEAR(weighted_form_Sn(polar_factor(p).qstar, n), gamma_remainder(p), 1e-12);
  }
}

TEST(Functionals, PartialEnergy) {
  const Coeffs g{1.0, 1.0};
  EXPECT_DOUBLE_EQ(partial_energy_Al(g, 0), 1.0);
  EXPECT_DOUBLE_EQ(partial_energy_Al(g, 5), 2.0);
  Rng rng(4);
  const auto p = random_circle_poly(rng, 9);
  double prev = 0.0;
  for (int l = 0; l < 20; ++l) {
    const double v = partial_energy_Al(p.coeffs(), l);
    EXPECT_GE(v, prev);
    prev = v;
  }
  EXPECT_NEAR(prev, parseval_norm(p), 1e-14);
}

TEST(Functionals, UnimodularInvariance) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_circle_poly(rng, rng.integer(1, 12));
    const auto q = p.scaled(rng.unimodular());
    EXPECT_NEAR(parseval_norm(p), parseval_norm(q), 1e-12);
    EXPECT_NEAR(gamma_remainder(normalize_self_inversive(p).normalized),
                gamma_remainder(normalize_self_inversive(q).normalized), 1e-12);
  }
}

TEST(Perturb, DoubleZeroExample) {
  const auto p = CirclePoly::from_roots({1.0, 1.0}, 1.0);
  const double eps = 1e-3;
  const auto pe = perturb_roots(p, eps);
  EXPECT_TRUE(pe.simple_zeros());
  auto angles = pe.angles();
  std::sort(angles.begin(), angles.end());
  EXPECT_NEAR(angles[0], eps / 2, 1e-15);
  EXPECT_NEAR(angles[1], eps, 1e-15);
}

TEST(Perturb, CoefficientsConverge) {
  const auto p = normalize_self_inversive(CirclePoly::from_roots({1.0, 1.0, I, I, I}, 1.0)).normalized;
  double prev = 1e300;
  for (int k = 1; k <= 20; ++k) {
    const double eps = std::ldexp(1.0, -k);
    const auto pe = perturb_roots(p, eps, 3);
    double dist = 0.0;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) dist = std::max(dist, std::abs(pe.coeffs()[j] - p.coeffs()[j]));
    EXPECT_LT(dist, 50 * eps);
    EXPECT_LT(dist, prev * 0.75);
    prev = dist;
    EXPECT_TRUE(is_self_inversive(pe.coeffs()));
  }
}

TEST(Perturb, SimpleStaysSimple) {
  Rng rng(21);
  const auto p = normalize_self_inversive(oracle::random_simple(rng, 8)).normalized;
  EXPECT_TRUE(perturb_roots(p, 1e-7, 1).simple_zeros());
  EXPECT_THROW(perturb_roots(p, 0.0), Error);
}
