// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#include "gjacobi/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gjacobi/errors.hpp"

namespace gjacobi {

namespace {

// Implicit-shift QL for a symmetric tridiagonal matrix (diagonal d, first
// off-diagonal e). Eigenvalues land in d, unsorted. If z is non-null it must
// point to n doubles initialized to e_0^T = (1,0,...,0); the rotations are
// accumulated into it, so z_i ends up as the first component of the i-th
// eigenvector (all that Golub-Welsch needs).
void ql_implicit(std::vector<double>& d, std::vector<double>& e, double* z) {
  const int n = static_cast<int>(d.size());
  if (n <= 1) return;
  e.resize(n, 0.0);  // e[n-1] used as workspace

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw IterationLimit("QL sweep failed to deflate eigenvalue " +
                               std::to_string(l) + " in 50 sweeps");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {  // recover from underflow, restart the sweep
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z != nullptr) {
            f = z[i + 1];
            z[i + 1] = s * z[i] + c * f;
            z[i] = c * z[i] - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

JacobiTruncation truncate(const MeasureSpec& m, int n) {
  if (n < 1) throw InvalidArgument("truncation order must be >= 1");
  JacobiTruncation J;
  J.diag.resize(n);
  J.offdiag.resize(n - 1);
  for (int k = 0; k < n; ++k) {
    const RecurrenceCoeff c = m.coeff(k);
    J.diag[k] = c.b;
    if (k < n - 1) J.offdiag[k] = c.a;
  }
  return J;
}

namespace {

template <class Real>
PolyEval eval_polys_impl(const MeasureSpec& m, double x, int degree) {
  PolyEval out;
  out.values.resize(degree + 1);
  out.values[0] = 1.0;
  Real prev = 0.0;       // P_{k-1}
  Real cur = 1.0;        // P_k
  Real a_prev = 0.0;     // a_{k-1}
  const Real xr = x;
  for (int k = 0; k < degree; ++k) {
    const RecurrenceCoeff c = m.coeff(k);
    const Real next = ((xr - Real(c.b)) * cur - a_prev * prev) / Real(c.a);
    out.values[k + 1] = static_cast<double>(next);
    prev = cur;
    cur = next;
    a_prev = c.a;
    if (!std::isfinite(out.values[k + 1])) out.overflow = true;
  }
  return out;
}

}  // namespace

PolyEval eval_polys(const MeasureSpec& m, double x, int degree, Precision prec) {
  if (degree < 0) throw InvalidArgument("degree must be >= 0");
  return prec == Precision::standard ? eval_polys_impl<double>(m, x, degree)
                                     : eval_polys_impl<quad>(m, x, degree);
}

std::vector<double> eval_poly_derivs(const MeasureSpec& m, double x, int degree) {
  if (degree < 0) throw InvalidArgument("degree must be >= 0");
  // a_k P'_{k+1} = (x - b_k) P'_k + P_k - a_{k-1} P'_{k-1}
  std::vector<double> dv(degree + 1);
  dv[0] = 0.0;
  const PolyEval p = eval_polys(m, x, degree);
  double prev = 0.0, cur = 0.0, a_prev = 0.0;
  for (int k = 0; k < degree; ++k) {
    const RecurrenceCoeff c = m.coeff(k);
    const double next = ((x - c.b) * cur + p.values[k] - a_prev * prev) / c.a;
    dv[k + 1] = next;
    prev = cur;
    cur = next;
    a_prev = c.a;
  }
  return dv;
}

std::vector<double> sym_tridiag_eigs(std::vector<double> diag,
                                     std::vector<double> offdiag) {
  const size_t n = diag.size();
  if (n == 0) throw InvalidArgument("empty matrix");
  if (offdiag.size() + 1 != n) throw InvalidArgument("off-diagonal size mismatch");
  ql_implicit(diag, offdiag, nullptr);
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::vector<double> sym_eigs(const JacobiTruncation& J) {
  return sym_tridiag_eigs(J.diag, J.offdiag);
}

QuadratureRule gauss_quadrature(const MeasureSpec& m, int n) {
  if (n < 1) throw InvalidArgument("quadrature size must be >= 1");
  JacobiTruncation J = truncate(m, n);
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  ql_implicit(J.diag, J.offdiag, z.data());

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return J.diag[a] < J.diag[b]; });

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = J.diag[idx[i]];
    rule.weights[i] = z[idx[i]] * z[idx[i]];  // m_0 = 1
  }
  return rule;
}

}  // namespace gjacobi
