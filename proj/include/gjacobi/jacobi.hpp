// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GJACOBI_JACOBI_HPP
#define GJACOBI_JACOBI_HPP

#include <vector>

#include "gjacobi/measures.hpp"
#include "gjacobi/prec.hpp"

namespace gjacobi {

/// Leading n x n principal submatrix of a semi-infinite Jacobi matrix.
/// Symmetric by construction: the off-diagonal is stored once and must be
/// strictly positive.
struct JacobiTruncation {
  std::vector<double> diag;     // b_0 .. b_{n-1}
  std::vector<double> offdiag;  // a_0 .. a_{n-2}, all > 0

  int order() const { return static_cast<int>(diag.size()); }
};

JacobiTruncation truncate(const MeasureSpec& m, int n);

struct PolyEval {
  std::vector<double> values;  // P_0(x) .. P_degree(x)
  bool overflow = false;       // some value became non-finite
};

/// Orthonormal polynomial values by the forward three-term recurrence
/// a_k P_{k+1} = (x - b_k) P_k - a_{k-1} P_{k-1}, P_{-1} = 0, P_0 = 1.
/// The extended path runs the recurrence at 113-bit precision and rounds,
/// bounding the forward-error growth on long sweeps.
PolyEval eval_polys(const MeasureSpec& m, double x, int degree,
                    Precision prec = Precision::standard);

/// Derivatives P_0'(x) .. P_degree'(x) by the differentiated recurrence.
std::vector<double> eval_poly_derivs(const MeasureSpec& m, double x, int degree);

/// All eigenvalues of a symmetric tridiagonal matrix, ascending. Implicit-shift
/// QL; throws IterationLimit if an eigenvalue fails to deflate in 50 sweeps.
/// offdiag may have any sign (only enters squared).
std::vector<double> sym_tridiag_eigs(std::vector<double> diag,
                                     std::vector<double> offdiag);

std::vector<double> sym_eigs(const JacobiTruncation& J);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // positive, summing to m_0 = 1
};

/// Golub-Welsch: nodes are eigenvalues of truncate(m, n); weight_i is
/// m_0 times the squared first component of the i-th eigenvector. Exact for
/// polynomials of degree <= 2n-1.
QuadratureRule gauss_quadrature(const MeasureSpec& m, int n);

}  // namespace gjacobi

#endif  // GJACOBI_JACOBI_HPP
