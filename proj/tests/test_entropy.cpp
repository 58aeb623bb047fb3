#include "circent/entropy.hpp"
#include "circent/error.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace circent;
using circent::oracle::kPi;

namespace {

CirclePoly si(const CirclePoly& p) { return normalize_self_inversive(p).normalized; }

}  // namespace

TEST(HFourier, ClosedForm) {
  EXPECT_EQ(h_fourier(0), Rational(2));
  EXPECT_EQ(h_fourier(1), Rational(3, 2));
  EXPECT_EQ(h_fourier(2), Rational(1, 3));
  EXPECT_EQ(h_fourier(3), Rational(-1, 12));
  for (int k = 0; k < 30; ++k) EXPECT_EQ(h_fourier(-k), h_fourier(k));
}

TEST(HFourier, IndependentQuadrature) {
  boost::math::quadrature::tanh_sinh<double> ts;
  for (int k = 0; k <= 20; ++k) {
    // h(e^{it}) = 4 cos^2(t/2) log(4 cos^2(t/2)), singular only at t = pi.
    auto f = [k](double t) {
      const double w = 4.0 * std::cos(t / 2) * std::cos(t / 2);
      return w > 0 ? w * std::log(w) * std::cos(k * t) : 0.0;
    };
    const double oracle = ts.integrate(f, 0.0, kPi) / kPi;
    EXPECT_NEAR(oracle, static_cast<double>(h_fourier(k)), 1e-12) << k;
    EXPECT_NEAR(h_fourier_quadrature(k), static_cast<double>(h_fourier(k)), 1e-10) << k;
  }
}

TEST(HFourier, FunctionValues) {
  EXPECT_NEAR(h_function(0.0), 4 * std::log(4.0), 1e-14);
  EXPECT_NEAR(h_function(kPi), 0.0, 1e-28);
}

TEST(HFourier, UniformPartialSumBound) {
  for (int L : {2, 5, 10, 50}) {
    double worst = 0.0;
    for (int i = 0; i < 4096; ++i) {
      const double t = 2 * kPi * i / 4096;
      worst = std::max(worst, std::abs(h_function(t) - h_partial_sum(t, L)));
    }
    // 4 sum_{k>L} 1/(k(k^2-1)) = 2/(L(L+1)).
    EXPECT_LE(worst, h_tail_bound(L) + 1e-12) << L;
    EXPECT_NEAR(h_tail_bound(L), 2.0 / (L * (L + 1.0)), 1e-16);
  }
}

TEST(Telescoping, Examples) {
  EXPECT_EQ(telescoping_sum(2), Rational(0));
  EXPECT_EQ(telescoping_sum(3), Rational(1, 6));
  EXPECT_EQ(telescoping_sum(100), Rational(1, 4) - Rational(1, 19800));
  for (int n = 2; n <= 300; ++n) EXPECT_EQ(telescoping_sum(n), telescoping_closed_form(n)) << n;
}

TEST(MomentFormulas, Examples) {
  const auto m1 = moments(polar_factor(CirclePoly::binomial(5, 1.0)));
  EXPECT_NEAR(polar_term_via_moments(m1, 5), 2.0, 1e-14);
  EXPECT_NEAR(norm_via_moments(m1), 2.0, 1e-14);

  const auto p2 = si(CirclePoly::from_coefficients({-1.0, 0.0, 1.0}));
  const auto m2 = moments(polar_factor(p2));
  EXPECT_NEAR(polar_term_via_moments(m2, 2), 2.0, 1e-14);
  EXPECT_NEAR(norm_via_moments(m2), 2.0, 1e-14);

  const auto m3 = moments(polar_factor(CirclePoly::from_roots({1.0, 1.0}, 1.0)));
  EXPECT_NEAR(polar_term_via_moments(m3, 2), 7.0, 1e-13);
  EXPECT_NEAR(norm_via_moments(m3), 6.0, 1e-13);
  EXPECT_TRUE(m3.outside_hypotheses());

  const auto m4 = moments(polar_factor(CirclePoly::from_roots({-1.0}, 1.0)));
  EXPECT_NEAR(polar_term_via_moments(m4, 1), 2.0, 1e-14);
}

TEST(MomentFormulas, IdentityProperty) {
  Rng rng(101);
  for (int n = 1; n <= 20; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = si(oracle::random_simple(rng, n));
      const auto m = moments(polar_factor(p));
      const double N = parseval_norm(p);
      EXPECT_LT(std::abs(ratio_functional(p).value - polar_term_via_moments(m, n)), 1e-8 * N);
      EXPECT_LT(std::abs(N - norm_via_moments(m)), 1e-9 * N);
    }
  }
}

TEST(MuMass, Examples) {
  EXPECT_NEAR(mu_mass_check(polar_factor(CirclePoly::binomial(4, 1.0))), 2.0, 1e-12);
  EXPECT_NEAR(mu_mass_check(polar_factor(si(CirclePoly::from_coefficients({-1.0, 0.0, 1.0})))), 2.0, 1e-12);
  Rng rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = si(oracle::random_simple(rng, rng.integer(1, 12), 0.05));
    EXPECT_NEAR(mu_mass_check(polar_factor(p)), 2.0, 1e-8);
  }
}

TEST(Verify, ExtremalBinomial) {
  for (int n = 1; n <= 10; ++n) {
    const auto p = CirclePoly::binomial(n, std::polar(1.0, 0.3 * n), 1 / std::numbers::sqrt2);
    const auto r = verify_main(p, {.cross_check = true});
    EXPECT_NEAR(r.entropy, 1.0 - std::log(2.0), 1e-9);
    EXPECT_NEAR(r.main_gap, 0.0, 1e-9);
    EXPECT_NEAR(r.strengthened_gap, 0.0, 1e-9);
    EXPECT_NEAR(r.polar_gap, 0.0, 1e-9);
    EXPECT_NEAR(r.jensen_gap, 0.0, 1e-9);
    EXPECT_TRUE(r.extremal);
    EXPECT_TRUE(r.ok());
  }
}

TEST(Verify, DoubleZero) {
  const auto r = verify_main(CirclePoly::from_roots({1.0, 1.0}, 1.0), {.cross_check = true});
  EXPECT_NEAR(r.entropy, 14.0, 1e-10);
  EXPECT_NEAR(r.jensen, 7.0, 1e-10);
  EXPECT_NEAR(r.polar, 7.0, 1e-10);
  EXPECT_NEAR(r.gamma, 1.0, 1e-14);
  EXPECT_NEAR(r.norm, 6.0, 1e-14);
  EXPECT_NEAR(r.strengthened_bound, 7.0 + 6.0 * std::log(3.0), 1e-12);
  EXPECT_NEAR(r.strengthened_gap, 7.0 - 6.0 * std::log(3.0), 1e-10);
  EXPECT_NEAR(r.polar_gap, 0.0, 1e-10);
  EXPECT_NEAR(r.jensen_gap, 7.0 - 6.0 * std::log(3.0), 1e-10);
  EXPECT_NEAR(*r.entropy_quadrature, 14.0, 1e-8);
  EXPECT_NEAR(*r.jensen_quadrature, 7.0, 1e-8);
  EXPECT_TRUE(r.moment_advisory);
  EXPECT_FALSE(r.extremal);
  EXPECT_TRUE(r.ok());
}

TEST(Verify, DegreeOne) {
  const auto r = verify_main(CirclePoly::from_roots({-1.0}, 1.0));
  EXPECT_NEAR(r.entropy, 2.0, 1e-14);
  EXPECT_NEAR(r.main_bound, 2.0, 1e-14);
  EXPECT_EQ(r.remainder, 0.0);
  EXPECT_TRUE(r.extremal);
}

TEST(Verify, RootsOffCircle) {
  try {
    verify_main(CirclePoly::from_coefficients({-2.0, 1.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RootsOffCircle);
  }
}

TEST(Verify, InequalitiesProperty) {
  Rng rng(107);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = rng.integer(1, 20);
    const auto p = random_circle_poly(rng, n, {.force_multiple = n > 1 && trial % 10 == 0});
    const auto r = verify_main(p);
    EXPECT_GE(r.strengthened_gap, -1e-9);
    EXPECT_GE(r.polar_gap, -1e-9);
    EXPECT_GE(r.jensen_gap, -1e-9);
    EXPECT_LT(std::abs(r.split_residual), 1e-9);
    EXPECT_TRUE(r.ok()) << "trial " << trial;
  }
}

TEST(Verify, UnimodularInvarianceProperty) {
  Rng rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_circle_poly(rng, rng.integer(1, 12));
    const auto a = verify_main(p);
    const auto b = verify_main(p.scaled(rng.unimodular()));
    EXPECT_NEAR(a.entropy, b.entropy, 1e-12);
    EXPECT_NEAR(a.jensen, b.jensen, 1e-12);
    EXPECT_NEAR(a.polar, b.polar, 1e-12);
  }
}

TEST(Verify, EqualityClassificationProperty) {
  Rng rng(113);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.integer(1, 12);
    const cplx c = std::polar(rng.uniform(0.3, 1.5), rng.uniform(0, 2 * kPi));
    CirclePoly p = CirclePoly::binomial(n, rng.unimodular(), c);
    if (trial % 2 == 1 && n > 1) p = si(perturb_roots(p, rng.uniform(1e-3, 0.5), static_cast<std::uint64_t>(trial)));
    const auto r = verify_main(p);
    const double total = r.main_gap + r.strengthened_gap + r.polar_gap + r.jensen_gap;
    EXPECT_EQ(r.extremal, total < 1e-8 * r.norm) << "trial " << trial << " total " << total;
  }
}

TEST(JensenGap, Examples) {
  EXPECT_NEAR(jensen_gap(CirclePoly::binomial(6, 1.0, 1 / std::numbers::sqrt2)), 0.0, 1e-12);
  EXPECT_NEAR(jensen_gap(CirclePoly::from_roots({1.0, 1.0}, 1.0)), 7.0 - 6.0 * std::log(3.0), 1e-10);
  EXPECT_NEAR(jensen_gap(CirclePoly::from_roots({-1.0}, 1.0)), 0.0, 1e-14);
}
