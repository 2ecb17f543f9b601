// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GJACOBI_DARBOUX_HPP
#define GJACOBI_DARBOUX_HPP

#include <vector>

#include "gjacobi/jacobi.hpp"
#include "gjacobi/measures.hpp"
#include "gjacobi/prec.hpp"

namespace gjacobi {

/// Signed factorization J - xI = L G L^T of a truncated Jacobi matrix:
/// pivots d_j, multipliers v_j = a_j / d_j, signature eps_j = sign(d_j).
/// d_j != 0 always holds (breakdown throws; it is never a stored state).
struct ShiftedFactorization {
  double x = 0.0;
  std::vector<double> d;    // d_0 .. d_{n-1}
  std::vector<double> v;    // v_0 .. v_{n-2}
  std::vector<int> eps;     // +1 / -1

  int order() const { return static_cast<int>(d.size()); }
};

/// Pivot sweep d_0 = b_0 - x, v_j = a_j/d_j, d_{j+1} = b_{j+1} - x - d_j v_j^2.
/// Throws Breakdown(j) when |d_j| falls below 1e-13 times the running matrix
/// scale. The extended path runs the sweep at 113-bit precision and rounds.
ShiftedFactorization factorize(const MeasureSpec& m, double x, int n,
                               Precision prec = Precision::standard);

/// Lower bidiagonal L with diagL_j = sqrt|d_j|, subL_j = v_j sqrt|d_j|,
/// so that J - xI = L G L^T.
struct BidiagonalL {
  std::vector<double> diagL;  // > 0
  std::vector<double> subL;

  int order() const { return static_cast<int>(diagL.size()); }
};

BidiagonalL build_L(const ShiftedFactorization& f);

/// Tridiagonal matrix H with G H symmetric for the stored signature g:
/// sub_j = g_j g_{j+1} sup_j holds exactly as constructed.
struct GSymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> sup;
  std::vector<double> sub;
  std::vector<int> g;

  int order() const { return static_cast<int>(diag.size()); }
};

/// The shifted Darboux (Christoffel) transform G L^T L + xI, computed
/// entrywise from the bidiagonal product. In the truncation the last diagonal
/// entry misses the d_n v_n^2 term of the semi-infinite formula, so row n-1
/// is usable only as an edge row.
GSymmetricTridiagonal darboux_transform(const ShiftedFactorization& f);

/// Favard direction: reassemble the symmetric Jacobi matrix L G L^T + xI.
/// Throws NotJacobi if a computed off-diagonal is not positive.
JacobiTruncation inverse_transform(const BidiagonalL& L, const std::vector<int>& g,
                                   double x);

/// Christoffel-transformed polynomial values
///   Ptilde_j(t) = eps_j sqrt|d_j| (P_j(t) - (P_j(x)/P_{j+1}(x)) P_{j+1}(t)) / (t - x),
/// for j = 0..degree; switches to the derivative limit when t is within
/// 1e-8 * max(1, |x|) of x. These satisfy the integral relation
/// "Ptilde_i Ptilde_j against (t-x) dmu = eps_i delta_ij".
std::vector<double> christoffel_eval(const MeasureSpec& m, double x, double t,
                                     int degree);

/// Iterated transform for a multi-shift signed measure: the first shift via
/// darboux_transform, each further shift via the monic tridiagonal LU step
/// T - xI = L*U, T <- U*L + xI, then rebalanced to a signature form. Throws
/// Breakdown(j, k) naming the pivot and shift, or NotSignSymmetric if some
/// sub_j*sup_j = 0 after the last step.
GSymmetricTridiagonal chain_transform(const SignedMeasureSpec& s, int n,
                                      Precision prec = Precision::standard);

/// Closed forms of the pivots/multipliers for the Chebyshev measure at shift
/// x = cos(pi alpha):
///   d_0 = -cos(pi alpha),            v_0 = -1 / (sqrt(2) cos(pi alpha)),
///   d_j = -(1/2) cos((j+1) pi alpha) / cos(j pi alpha)   (j >= 1),
///   v_j = -cos(j pi alpha) / cos((j+1) pi alpha)         (j >= 1).
/// d_tan_form is the equivalent (1/2)(sin(pi a) tan(j pi a) - cos(pi a)) for
/// j >= 1 (= d for j = 0), kept as a cross-check value.
struct StahlPivots {
  double d;
  double v;
  double d_tan_form;
};

StahlPivots stahl_closed_form(double alpha, int j);

}  // namespace gjacobi

#endif  // GJACOBI_DARBOUX_HPP
