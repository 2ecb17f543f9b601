// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>

#include <doctest.h>

#include "gjacobi/darboux.hpp"
#include "gjacobi/errors.hpp"
#include "gjacobi/jacobi.hpp"
#include "gjacobi/rng.hpp"
#include "gjacobi/spectral.hpp"

using namespace gjacobi;

namespace {

const double kGoldenAlpha = (std::sqrt(5.0) - 1.0) / 2.0;

MeasureSpec gap_measure() {
  return custom_measure(
      [](int k) { return RecurrenceCoeff{k % 2 == 0 ? 0.5 : 0.25, 0.0}; }, "gap");
}

}  // namespace

TEST_CASE("factorization below the spectrum is positive definite") {
  const ShiftedFactorization f = factorize(chebyshev_measure(), -2.0, 40);
  CHECK(f.d[0] == 2.0);
  for (int j = 0; j < 40; ++j) {
    CHECK(f.d[j] > 0.0);
    CHECK(f.eps[j] == 1);
  }
}

TEST_CASE("zero pivot at x = 0 breaks down immediately") {
  try {
    factorize(chebyshev_measure(), 0.0, 10);
    FAIL("expected Breakdown");
  } catch (const Breakdown& b) {
    CHECK(b.pivot_index == 0);
  }
}

TEST_CASE("pivot-multiplier product reproduces a_j") {
  const ShiftedFactorization f = factorize(chebyshev_measure(), 0.3, 200);
  for (int j = 0; j < 199; ++j) {
    const double aj = chebyshev_measure().coeff(j).a;
    CHECK(std::abs(f.d[j] * f.v[j] - aj) <= 1e-13 * aj);
  }
}

TEST_CASE("sweep pivots equal the polynomial-ratio route") {
  const MeasureSpec m = chebyshev_measure();
  const double x = 0.3;
  const ShiftedFactorization f = factorize(m, x, 201);
  const PolyEval p = eval_polys(m, x, 201);
  for (int j = 0; j <= 200; ++j) {
    const double ratio = -m.coeff(j).a * p.values[j + 1] / p.values[j];
    CHECK(std::abs(f.d[j] - ratio) <= 1e-9 * std::abs(ratio));
  }
}

TEST_CASE("standard and extended factorization paths agree") {
  const ShiftedFactorization fs = factorize(chebyshev_measure(), 0.3, 300);
  const ShiftedFactorization fe =
      factorize(chebyshev_measure(), 0.3, 300, Precision::extended);
  for (int j = 0; j < 300; ++j) {
    CHECK(std::abs(fs.d[j] - fe.d[j]) <= 1e-9 * std::abs(fe.d[j]));
  }
}

TEST_CASE("bidiagonal factor entries") {
  ShiftedFactorization f;
  f.x = 0.0;
  f.d = {4.0};
  f.eps = {1};
  CHECK(build_L(f).diagL == std::vector<double>{2.0});

  ShiftedFactorization f2;
  f2.x = 0.0;
  f2.d = {1.0, -1.0};
  f2.v = {2.0};
  f2.eps = {1, -1};
  const BidiagonalL L = build_L(f2);
  CHECK(L.diagL == std::vector<double>{1.0, 1.0});
  CHECK(L.subL == std::vector<double>{2.0});
}

TEST_CASE("L G L^T + xI reconstructs the truncation") {
  const MeasureSpec m = chebyshev_measure();
  const double x = 0.3;
  const int n = 500;
  const ShiftedFactorization f = factorize(m, x, n);
  const BidiagonalL L = build_L(f);
  const JacobiTruncation J = truncate(m, n);
  double scale = 0.0;
  for (double b : J.diag) scale = std::max(scale, std::abs(b));
  for (double a : J.offdiag) scale = std::max(scale, a);
  scale = std::max(scale, std::abs(x));
  for (int j = 0; j < n - 1; ++j) {  // interior rows
    double diag = f.eps[j] * L.diagL[j] * L.diagL[j];
    if (j > 0) diag += f.eps[j - 1] * L.subL[j - 1] * L.subL[j - 1];
    CHECK(std::abs(diag + x - J.diag[j]) <= 1e-12 * scale);
    const double off = f.eps[j] * L.diagL[j] * L.subL[j];
    CHECK(std::abs(off - J.offdiag[j]) <= 1e-12 * scale);
  }
}

TEST_CASE("one-point transform is the original matrix") {
  const ShiftedFactorization f = factorize(chebyshev_measure(), 0.4, 1);
  const GSymmetricTridiagonal t = darboux_transform(f);
  CHECK(t.order() == 1);
  CHECK(t.diag[0] == doctest::Approx(0.0).epsilon(1e-15));  // b_0
}

TEST_CASE("positive-definite shift keeps the transform symmetric with real spectrum") {
  const GSymmetricTridiagonal t =
      darboux_transform(factorize(chebyshev_measure(), -2.0, 30));
  for (int g : t.g) CHECK(g == 1);
  for (int j = 0; j < 29; ++j) CHECK(t.sub[j] == t.sup[j]);
  for (const cdouble& z : tridiag_eigs(t)) CHECK(z.imag() == 0.0);
}

TEST_CASE("transform entries match the closed forms") {
  // diag_j = d_j (1 + v_j^2) + x, sup_j = eps_j v_j sqrt(|d_j||d_{j+1}|),
  // sub_j = eps_j eps_{j+1} sup_j; first off-diagonal carries the 2^{-1/4}
  // scaling, later ones 2^{-1/2}
  const double x = std::cos(M_PI * 0.6180339887);
  const ShiftedFactorization f = factorize(chebyshev_measure(), x, 3);
  const GSymmetricTridiagonal t = darboux_transform(f);

  for (int j = 0; j < 2; ++j) {  // interior diagonal entries
    CHECK(std::abs(t.diag[j] - (f.d[j] * (1.0 + f.v[j] * f.v[j]) + x)) <= 1e-13);
  }
  const double sup0 = std::pow(2.0, -0.25) * std::sqrt(std::abs(f.v[0] * f.d[1]));
  const double sup1 = std::pow(2.0, -0.5) * std::sqrt(std::abs(f.v[1] * f.d[2]));
  CHECK(std::abs(t.sup[0] - sup0) <= 1e-13);
  CHECK(std::abs(t.sup[1] - sup1) <= 1e-13);
  CHECK(std::abs(t.sub[0] - f.eps[0] * f.eps[1] * sup0) <= 1e-13);
  CHECK(std::abs(t.sub[1] - f.eps[1] * f.eps[2] * sup1) <= 1e-13);

  for (int j = 0; j < 2; ++j) {
    const double general =
        f.eps[j] * f.v[j] * std::sqrt(std::abs(f.d[j]) * std::abs(f.d[j + 1]));
    CHECK(std::abs(t.sup[j] - general) <= 1e-13);
  }
}

TEST_CASE("G-symmetry holds exactly as stored") {
  const double x = std::cos(M_PI * kGoldenAlpha);
  const GSymmetricTridiagonal t = darboux_transform(factorize(chebyshev_measure(), x, 50));
  bool mixed = false;
  for (int j = 0; j < 49; ++j) {
    CHECK(t.sub[j] == t.g[j] * t.g[j + 1] * t.sup[j]);  // bitwise
    CHECK(t.sup[j] != 0.0);
    if (t.g[j] != t.g[j + 1]) mixed = true;
  }
  CHECK(mixed);  // the Stahl shift genuinely mixes signs
}

TEST_CASE("inverse transform rebuilds the Jacobi truncation") {
  const MeasureSpec m = chebyshev_measure();
  const double x = 0.3;
  const ShiftedFactorization f = factorize(m, x, 50);
  const JacobiTruncation back = inverse_transform(build_L(f), f.eps, x);
  const JacobiTruncation J = truncate(m, 50);
  for (int j = 0; j < 49; ++j) {  // interior rows
    CHECK(std::abs(back.diag[j] - J.diag[j]) <= 1e-12);
    CHECK(std::abs(back.offdiag[j] - J.offdiag[j]) <= 1e-12);
  }
}

TEST_CASE("inverse transform arithmetic example") {
  BidiagonalL L;
  L.diagL = {1.0, 1.0};
  L.subL = {1.0};
  const JacobiTruncation J = inverse_transform(L, {1, 1}, 0.0);
  CHECK(J.diag == std::vector<double>{1.0, 2.0});
  CHECK(J.offdiag == std::vector<double>{1.0});
}

TEST_CASE("negative effective off-diagonal is flagged NotJacobi") {
  BidiagonalL L;
  L.diagL = {1.0, 1.0};
  L.subL = {-1.0};
  CHECK_THROWS_AS(inverse_transform(L, {1, 1}, 0.0), NotJacobi);
}

TEST_CASE("transformed polynomial of degree zero is 1/sqrt|d_0|") {
  const MeasureSpec m = chebyshev_measure();
  const double x = 0.3;
  const double d0 = factorize(m, x, 1).d[0];
  const double expect = 1.0 / std::sqrt(std::abs(d0));
  for (double t : {0.9, -0.5, 0.04}) {
    CHECK(christoffel_eval(m, x, t, 0)[0] == doctest::Approx(expect).epsilon(1e-12));
  }
  // the derivative limit path at t = x gives the same constant
  CHECK(christoffel_eval(m, x, x + 1e-12, 0)[0] ==
        doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("transformed polynomials have exact degree (divided differences)") {
  const MeasureSpec m = chebyshev_measure();
  const double x = 0.3;
  for (int deg : {3, 5}) {
    // deg+2 well-separated points: the (deg+1)-st divided difference of a
    // degree-deg polynomial vanishes
    std::vector<double> pts, vals;
    for (int i = 0; i < deg + 2; ++i) pts.push_back(-0.85 + 1.7 * i / (deg + 1));
    for (double p : pts) vals.push_back(christoffel_eval(m, x, p, deg)[deg]);
    for (int level = 1; level < deg + 2; ++level) {
      for (int i = 0; i + level < deg + 2; ++i) {
        vals[i] = (vals[i + 1] - vals[i]) / (pts[i + level] - pts[i]);
      }
    }
    CHECK(std::abs(vals[0]) <= 1e-9);
  }
}

TEST_CASE("signature orthonormality under the signed measure") {
  const MeasureSpec m = chebyshev_measure();
  const double x = 0.3;
  const int maxdeg = 8;
  const QuadratureRule rule = gauss_quadrature(m, 20);
  const ShiftedFactorization f = factorize(m, x, maxdeg + 1);
  std::vector<std::vector<double>> vals(rule.nodes.size());
  for (size_t q = 0; q < rule.nodes.size(); ++q) {
    vals[q] = christoffel_eval(m, x, rule.nodes[q], maxdeg);
  }
  for (int i = 0; i <= maxdeg; ++i) {
    for (int j = 0; j <= maxdeg; ++j) {
      double acc = 0.0;
      for (size_t q = 0; q < rule.nodes.size(); ++q) {
        acc += rule.weights[q] * vals[q][i] * vals[q][j] * (rule.nodes[q] - x);
      }
      const double expect = (i == j) ? f.eps[i] : 0.0;
      CHECK(std::abs(acc - expect) <= 1e-10);
    }
  }
}

TEST_CASE("transformed recurrence J~ p~ = t p~ on interior rows") {
  const MeasureSpec m = chebyshev_measure();
  const double x = 0.3;
  const int n = 12;
  const ShiftedFactorization f = factorize(m, x, n);
  const GSymmetricTridiagonal T = darboux_transform(f);
  SplitMix64 rng(7171ULL);
  for (int trial = 0; trial < 20; ++trial) {
    const double t = rng.uniform_pm1();
    if (std::abs(t - x) < 1e-6) continue;
    const std::vector<double> p = christoffel_eval(m, x, t, n - 1);
    for (int row = 1; row <= n - 3; ++row) {
      const double lhs =
          T.sub[row - 1] * p[row - 1] + T.diag[row] * p[row] + T.sup[row] * p[row + 1];
      CHECK(std::abs(lhs - t * p[row]) <= 1e-9);
    }
  }
}

TEST_CASE("single-shift chain equals the Darboux transform") {
  const MeasureSpec m = chebyshev_measure();
  const double x = 0.3;
  const SignedMeasureSpec s(m, {x});
  const GSymmetricTridiagonal a = chain_transform(s, 40);
  const GSymmetricTridiagonal b = darboux_transform(factorize(m, x, 40));
  const std::vector<cdouble> ea = tridiag_eigs(a);
  const std::vector<cdouble> eb = tridiag_eigs(b);
  for (int j = 0; j < 40; ++j) CHECK(std::abs(ea[j] - eb[j]) <= 1e-9);
}

TEST_CASE("two shifts below the spectrum give a positive chain") {
  const SignedMeasureSpec s(chebyshev_measure(), {-1.5, -2.0});
  const GSymmetricTridiagonal t = chain_transform(s, 60);
  for (int g : t.g) CHECK(g == 1);  // (t-x1)(t-x2) > 0 on the support
  for (const cdouble& z : tridiag_eigs(t)) {
    CHECK(z.imag() == 0.0);
    CHECK(std::abs(z.real()) <= 1.0 + 1e-9);
  }
}

TEST_CASE("two-factor Stahl weight runs deep without breakdown") {
  const double a1 = kGoldenAlpha;
  const double a2 = std::sqrt(2.0) - 1.0;
  const SignedMeasureSpec s(chebyshev_measure(),
                            {std::cos(M_PI * a1), std::cos(M_PI * a2)});
  const GSymmetricTridiagonal t = chain_transform(s, 2000);
  CHECK(t.order() == 2000);
  for (int j = 0; j < 1999; ++j) CHECK(t.sub[j] == t.g[j] * t.g[j + 1] * t.sup[j]);
}

TEST_CASE("chain breakdown names the offending shift") {
  const SignedMeasureSpec s(chebyshev_measure(), {0.0});
  try {
    chain_transform(s, 10);
    FAIL("expected Breakdown");
  } catch (const Breakdown& b) {
    CHECK(b.shift_index == 0);
    CHECK(b.pivot_index == 0);
  }
}

TEST_CASE("stahl closed forms: rational alpha breaks down") {
  CHECK_THROWS_AS(stahl_closed_form(0.5, 0), Breakdown);
}

TEST_CASE("stahl closed forms at alpha = 1/3") {
  // d_0 = -cos(pi/3) = -1/2 from the sweep d_0 = b_0 - x
  const StahlPivots p = stahl_closed_form(1.0 / 3.0, 0);
  CHECK(p.d == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("stahl closed forms match the sweep pivots") {
  const double x = std::cos(M_PI * kGoldenAlpha);
  const ShiftedFactorization f = factorize(chebyshev_measure(), x, 52);
  for (int j = 0; j <= 50; ++j) {
    const StahlPivots p = stahl_closed_form(kGoldenAlpha, j);
    CHECK(std::abs(p.d - f.d[j]) <= 1e-10 * std::abs(p.d));
    if (j < 51) CHECK(std::abs(p.v - f.v[j]) <= 1e-10 * std::abs(p.v));
    CHECK(std::abs(p.d_tan_form - p.d) <= 1e-12 * std::abs(p.d));
  }
}

TEST_CASE("gap measure factorization stays bounded in the spectral gap") {
  const ShiftedFactorization f = factorize(gap_measure(), 0.1, 2000);
  double sup = 0.0;
  for (double d : f.d) sup = std::max(sup, std::abs(d));
  CHECK(sup <= 3.0);
}
