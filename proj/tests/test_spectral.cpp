// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>

#include <doctest.h>

#include "gjacobi/darboux.hpp"
#include "gjacobi/jacobi.hpp"
#include "gjacobi/rng.hpp"
#include "gjacobi/spectral.hpp"
#include "oracles.hpp"

using namespace gjacobi;

namespace {
const double kGoldenAlpha = (std::sqrt(5.0) - 1.0) / 2.0;
}

TEST_CASE("support distance") {
  CHECK(support_distance({0.3, 0.0}) == 0.0);
  CHECK(support_distance({0.3, 0.2}) == doctest::Approx(0.2));
  CHECK(support_distance({-2.0, 0.0}) == doctest::Approx(1.0));
  CHECK(support_distance({2.0, 1.0}) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("symmetric tridiagonal input matches the QL route") {
  const JacobiTruncation J = truncate(chebyshev_measure(), 60);
  const std::vector<double> ref = sym_eigs(J);
  const std::vector<cdouble> got = tridiag_eigs(J);
  for (int j = 0; j < 60; ++j) {
    CHECK(got[j].imag() == 0.0);
    CHECK(std::abs(got[j].real() - ref[j]) <= 1e-11);
  }
}

TEST_CASE("antisymmetric off-diagonal pair gives +-i") {
  const std::vector<cdouble> e = tridiag_eigs({0.0, 0.0}, {1.0}, {-1.0});
  CHECK(std::abs(e[0] - cdouble{0.0, -1.0}) <= 1e-14);
  CHECK(std::abs(e[1] - cdouble{0.0, 1.0}) <= 1e-14);
}

TEST_CASE("positive couplings force an exactly real spectrum") {
  // diagonal similarity of a known symmetric matrix: sup != sub but products > 0
  SplitMix64 rng(99ULL);
  const int n = 40;
  std::vector<double> diag(n), sup(n - 1), sub(n - 1), ref_off(n - 1);
  for (int j = 0; j < n; ++j) diag[j] = rng.uniform_pm1();
  for (int j = 0; j < n - 1; ++j) {
    ref_off[j] = 0.2 + 0.8 * std::abs(rng.uniform_pm1());
    const double scale = std::exp(rng.uniform_pm1());
    sup[j] = ref_off[j] * scale;
    sub[j] = ref_off[j] / scale;
  }
  const std::vector<double> ref = sym_tridiag_eigs(diag, ref_off);
  const std::vector<cdouble> got = tridiag_eigs(diag, sup, sub);
  for (int j = 0; j < n; ++j) {
    CHECK(got[j].imag() == 0.0);
    CHECK(std::abs(got[j].real() - ref[j]) <= 1e-11);
  }
}

TEST_CASE("zero couplings split the matrix into blocks") {
  // block-triangular: spectrum is the union of the two diagonal blocks
  const std::vector<cdouble> e =
      tridiag_eigs({1.0, 3.0, -1.0}, {0.0, 0.5}, {0.7, 0.5});
  // eigenvalues: {1} and eigs of [[3, .5], [.5, -1]]
  const double disc = std::sqrt(4.0 * 4.0 + 4.0 * 0.25) / 2.0;
  const double lo = 1.0 - disc, hi = 1.0 + disc;
  CHECK(std::abs(e[0] - cdouble{lo, 0.0}) <= 1e-12);
  CHECK(std::abs(e[1] - cdouble{1.0, 0.0}) <= 1e-12);
  CHECK(std::abs(e[2] - cdouble{hi, 0.0}) <= 1e-12);
}

TEST_CASE("Hessenberg QR eigenvalues pass the extended-precision Newton check") {
  // Stahl-type G-symmetric truncations at several orders
  const double x = std::cos(M_PI * kGoldenAlpha);
  const SignedMeasureSpec s(chebyshev_measure(), {x});
  for (int n : {10, 35, 80}) {
    const GSymmetricTridiagonal t = chain_transform(s, n + 1);
    std::vector<double> diag(t.diag.begin(), t.diag.begin() + n);
    std::vector<double> sup(t.sup.begin(), t.sup.begin() + (n - 1));
    std::vector<double> sub(t.sub.begin(), t.sub.begin() + (n - 1));
    double scale = 0.0;
    for (double dv : diag) scale = std::max(scale, std::abs(dv));
    for (const cdouble& z : tridiag_eigs(diag, sup, sub)) {
      CHECK(oracles::newton_residual(diag, sup, sub, z) <= 1e-8 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("AB/BA with the identity factor and a signature") {
  BidiagonalL L;
  L.diagL = {1.0, 1.0};
  L.subL = {0.0};
  const AbBaReport rep = ab_ba_check(L, {1, -1}, 0.0);
  CHECK(rep.spec_ab == std::vector<double>{-1.0, 1.0});
  CHECK(rep.max_pairwise_distance <= 1e-15);
}

TEST_CASE("AB/BA identity for the Stahl-regime factorization") {
  const ShiftedFactorization f = factorize(chebyshev_measure(), 0.3, 100);
  const AbBaReport rep = ab_ba_check(build_L(f), f.eps, 0.3);
  CHECK(rep.max_pairwise_distance <= 1e-8);
}

TEST_CASE("AB/BA spectra in the positive-definite case live on the shifted support") {
  const ShiftedFactorization f = factorize(chebyshev_measure(), -2.0, 50);
  const AbBaReport rep = ab_ba_check(build_L(f), f.eps, -2.0);
  CHECK(rep.max_pairwise_distance <= 1e-10);
  for (double e : rep.spec_ab) {
    CHECK(e >= 1.0 - 1e-9);   // sigma(J + 2I) in [1, 3]
    CHECK(e <= 3.0 + 1e-9);
  }
  for (const cdouble& z : rep.spec_ba) CHECK(z.imag() == 0.0);
}

TEST_CASE("AB/BA matched distance across measures and shifts") {
  struct Case {
    MeasureSpec m;
    double x;
    int n;
  };
  const std::vector<Case> cases = {
      {chebyshev_measure(), 0.55, 150},
      {chebyshev_measure(), std::cos(M_PI * kGoldenAlpha), 200},
      {custom_measure([](int k) { return RecurrenceCoeff{k % 2 == 0 ? 0.5 : 0.25, 0.0}; },
                      "gap"),
       0.1, 120},
  };
  for (const Case& c : cases) {
    const ShiftedFactorization f = factorize(c.m, c.x, c.n);
    const AbBaReport rep = ab_ba_check(build_L(f), f.eps, c.x);
    double emax = 1.0;
    for (double e : rep.spec_ab) emax = std::max(emax, std::abs(e));
    CHECK(rep.max_pairwise_distance <= 1e-8 * emax);
  }
}

TEST_CASE("shift covariance of the transformed truncation") {
  const double x = 0.3;
  const SignedMeasureSpec s(chebyshev_measure(), {x});
  const int n = 60;
  const GSymmetricTridiagonal t = chain_transform(s, n + 1);
  std::vector<double> diag(t.diag.begin(), t.diag.begin() + n);
  std::vector<double> sup(t.sup.begin(), t.sup.begin() + (n - 1));
  std::vector<double> sub(t.sub.begin(), t.sub.begin() + (n - 1));
  const std::vector<cdouble> direct = tridiag_eigs(diag, sup, sub);
  for (double& dv : diag) dv -= x;  // G L^T L: the transform minus the shift
  const std::vector<cdouble> shifted = tridiag_eigs(diag, sup, sub);
  for (int j = 0; j < n; ++j) {
    CHECK(std::abs(direct[j] - (shifted[j] + cdouble{x, 0.0})) <= 1e-12);
  }
}

TEST_CASE("pole sweep in the bounded branch stays on the support") {
  const SignedMeasureSpec s(chebyshev_measure(), {-1.5});
  const PoleSweepResult r = pole_sweep(s, {5, 10, 20, 30, 40, 50});
  CHECK(r.failures.empty());
  for (const SpectrumReport& rep : r.reports) {
    CHECK(rep.outside_count == 0);
    CHECK(rep.real_count == rep.n);
  }
}

TEST_CASE("order-1 sweep returns the first transformed diagonal entry") {
  const double x = 0.3;
  const SignedMeasureSpec s(chebyshev_measure(), {x});
  const PoleSweepResult r = pole_sweep(s, {1});
  REQUIRE(r.reports.size() == 1);
  const ShiftedFactorization f = factorize(chebyshev_measure(), x, 2);
  const double expect = f.d[0] * (1.0 + f.v[0] * f.v[0]) + x;
  CHECK(std::abs(r.reports[0].eigs[0] - cdouble{expect, 0.0}) <= 1e-13);
}

TEST_CASE("breakdown orders are recorded and skipped") {
  const SignedMeasureSpec s(chebyshev_measure(), {0.0});
  const PoleSweepResult r = pole_sweep(s, {3, 5});
  CHECK(r.reports.empty());
  REQUIRE(r.failures.size() == 2);
  CHECK(r.failures[0].n == 3);
  CHECK(r.failures[0].pivot_index == 0);
}

TEST_CASE("Stahl sweep produces genuinely escaping eigenvalues") {
  const SignedMeasureSpec s(chebyshev_measure(), {std::cos(M_PI * kGoldenAlpha)});
  std::vector<int> orders;
  for (int n = 10; n <= 120; n += 10) orders.push_back(n);
  const PoleSweepResult r = pole_sweep(s, orders);
  CHECK(r.failures.empty());
  double max_abs = 0.0;
  for (const SpectrumReport& rep : r.reports) max_abs = std::max(max_abs, rep.max_abs);
  CHECK(max_abs >= 1.5);  // already far off the support at these orders
}

TEST_CASE("two-factor weight sends conjugate pole pairs into the plane") {
  const double a1 = kGoldenAlpha, a2 = std::sqrt(2.0) - 1.0;
  const SignedMeasureSpec s(chebyshev_measure(),
                            {std::cos(M_PI * a1), std::cos(M_PI * a2)});
  const PoleSweepResult r = pole_sweep(s, {20, 60, 100, 140, 180});
  CHECK(r.failures.empty());
  int genuinely_complex = 0;
  for (const SpectrumReport& rep : r.reports) {
    for (const cdouble& z : rep.eigs) {
      if (std::abs(z.imag()) > 1e-3) ++genuinely_complex;
    }
  }
  CHECK(genuinely_complex >= 2);  // conjugate pairs off the real line
}

TEST_CASE("spectrum report counters") {
  const SpectrumReport rep =
      make_spectrum_report(3, {{0.5, 0.0}, {2.0, 0.0}, {0.1, 1e-3}});
  CHECK(rep.n == 3);
  CHECK(rep.max_abs == doctest::Approx(2.0));
  CHECK(rep.outside_count == 2);
  CHECK(rep.real_count == 2);
  CHECK(rep.eigs.front().real() <= rep.eigs.back().real());
}
