// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GJACOBI_PADE_HPP
#define GJACOBI_PADE_HPP

#include <complex>
#include <vector>

#include "gjacobi/measures.hpp"
#include "gjacobi/spectral.hpp"

namespace gjacobi {

/// Diagonal Pade approximant Q_n / P_n to the Cauchy transform
/// sF(lambda) = integral (t - lambda)^{-1} prod(t - x_i) dmu(t).
/// Coefficient vectors are constant-first; denom is monic with n+1 entries,
/// numer has n entries (deg Q <= n-1). Poles are the eigenvalues of the n x n
/// truncation of the transformed matrix (better conditioned than polynomial
/// root extraction); the characteristic-polynomial route is used only as a
/// consistency check in the tests.
struct PadeApproximant {
  int n = 0;
  std::vector<double> denom;
  std::vector<double> numer;
  std::vector<cdouble> poles;
};

PadeApproximant diagonal_pade(const SignedMeasureSpec& s, int n);

/// Independent denominator route: solve the n x n Hankel system for the monic
/// polynomial orthogonal to the moment functional, at 113-bit precision, and
/// round to working precision. Needs moments[0..2n-1]. Throws SingularHankel
/// when the system is numerically singular at extended precision.
std::vector<double> hankel_oracle(const std::vector<double>& moments, int n);

enum class MarkovMethod { closed, quadrature };

/// sF(lambda) for lambda off [-1,1]. The closed method needs the Chebyshev
/// base: F0(lambda) = -1/sqrt(lambda^2-1), branch asymptotic to lambda at
/// infinity, lifted through the shifts by sF = (lambda - x) F + s_0-corrections.
/// The quadrature method applies a high-order Gauss rule on the base measure.
cdouble markov_value(const SignedMeasureSpec& s, cdouble lambda, MarkovMethod method);

/// Partition of the poles by distance to [-1,1]: within tol -> support.
struct PoleClassification {
  std::vector<cdouble> support_poles;
  std::vector<cdouble> spurious_poles;
};

PoleClassification classify_spurious(const PadeApproximant& p, double tol);

struct ApproxErrorEntry {
  int n = 0;
  cdouble probe;
  double abs_err = 0.0;
  bool near_pole = false;  // a pole lies within 1e-3 of the probe
};

/// |Q_n/P_n - sF| at each (order, probe), evaluated by Horner. Diagnostic
/// table only; no convergence is implied off the definitizable branch.
std::vector<ApproxErrorEntry> approximation_error(
    const SignedMeasureSpec& s, const std::vector<int>& n_list,
    const std::vector<cdouble>& probes);

}  // namespace gjacobi

#endif  // GJACOBI_PADE_HPP
