// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GJACOBI_SPECTRAL_HPP
#define GJACOBI_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "gjacobi/darboux.hpp"
#include "gjacobi/jacobi.hpp"

namespace gjacobi {

using cdouble = std::complex<double>;

/// Eigenvalues with distance > kSupportTol from [-1,1] count as "outside";
/// separates genuine spurious excursions from endpoint rounding.
inline constexpr double kSupportTol = 1e-6;

/// Euclidean distance from z to the segment [-1, 1].
double support_distance(cdouble z);

/// All eigenvalues of a general real tridiagonal matrix, sorted by (re, im).
/// Rows with sub_j*sup_j = 0 split the matrix into independent blocks; blocks
/// with all products positive reduce by diagonal similarity to a symmetric
/// tridiagonal (exactly real spectrum); the rest are balanced to off-diagonals
/// +-sqrt|sub*sup| and handed to a double-shift Hessenberg QR. Throws
/// IterationLimit after 100n iterations.
std::vector<cdouble> tridiag_eigs(std::vector<double> diag, std::vector<double> sup,
                                  std::vector<double> sub);
std::vector<cdouble> tridiag_eigs(const GSymmetricTridiagonal& T);
std::vector<cdouble> tridiag_eigs(const JacobiTruncation& J);

/// Finite-square-case check that sigma(L G L^T) = sigma(G L^T L): both
/// spectra plus the max matched distance after sorting both by (re, im).
struct AbBaReport {
  double x = 0.0;                 // shift the factors came from, for the record
  std::vector<double> spec_ab;    // L G L^T is symmetric tridiagonal
  std::vector<cdouble> spec_ba;   // G L^T L via the general solver
  double max_pairwise_distance = 0.0;
};

AbBaReport ab_ba_check(const BidiagonalL& L, const std::vector<int>& g, double x);

struct SpectrumReport {
  int n = 0;
  std::vector<cdouble> eigs;  // sorted by (re, im), size n
  double max_abs = 0.0;
  int outside_count = 0;      // support_distance > kSupportTol
  int real_count = 0;         // exactly real as computed
};

SpectrumReport make_spectrum_report(int n, std::vector<cdouble> eigs);

/// Per-order eigenvalues of the leading n x n principal submatrices of the
/// chained transform; these are the diagonal Pade denominator zeros (poles).
/// Orders whose factorization breaks down are recorded and skipped.
struct PoleSweepResult {
  std::vector<SpectrumReport> reports;

  struct Failure {
    int n;
    int shift_index;
    int pivot_index;
  };
  std::vector<Failure> failures;
};

PoleSweepResult pole_sweep(const SignedMeasureSpec& s, const std::vector<int>& n_list);

}  // namespace gjacobi

#endif  // GJACOBI_SPECTRAL_HPP
