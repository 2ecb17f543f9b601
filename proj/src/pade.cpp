// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#include "gjacobi/pade.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gjacobi/errors.hpp"
#include "gjacobi/jacobi.hpp"
#include "gjacobi/prec.hpp"

namespace gjacobi {

namespace {

// Characteristic polynomial of a tridiagonal truncation by the three-term
// determinant recurrence; constant-first monic coefficients.
std::vector<double> char_poly(const std::vector<double>& diag,
                              const std::vector<double>& sup,
                              const std::vector<double>& sub) {
  const int n = static_cast<int>(diag.size());
  std::vector<double> prev{1.0};                 // chi_0
  std::vector<double> cur{-diag[0], 1.0};        // chi_1
  for (int k = 1; k < n; ++k) {
    const double coupling = sub[k - 1] * sup[k - 1];
    std::vector<double> next(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) {
      next[i + 1] += cur[i];                     // lambda * chi_k
      next[i] -= diag[k] * cur[i];
    }
    for (int i = 0; i < k; ++i) next[i] -= coupling * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

cdouble horner(const std::vector<double>& coeffs, cdouble z) {
  cdouble acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// sqrt(lambda^2 - 1) on the branch cut [-1,1], asymptotic to lambda at
// infinity: product of principal square roots of (lambda-1) and (lambda+1).
cdouble branch_sqrt(cdouble lambda) {
  return std::sqrt(lambda - 1.0) * std::sqrt(lambda + 1.0);
}

}  // namespace

PadeApproximant diagonal_pade(const SignedMeasureSpec& s, int n) {
  if (n < 1) throw InvalidArgument("approximant order must be >= 1");
  const int extra = static_cast<int>(s.shifts.size());
  const GSymmetricTridiagonal t = chain_transform(s, n + extra);
  std::vector<double> diag(t.diag.begin(), t.diag.begin() + n);
  std::vector<double> sup(t.sup.begin(), t.sup.begin() + (n - 1));
  std::vector<double> sub(t.sub.begin(), t.sub.begin() + (n - 1));

  PadeApproximant p;
  p.n = n;
  p.denom = char_poly(diag, sup, sub);
  p.poles = tridiag_eigs(diag, sup, sub);

  // Q_n coefficient of lambda^p is -sum_{k>p} c_k s_{k-1-p}: the moment-matched
  // numerator of the monic denominator.
  const std::vector<double> sm = signed_moments(s, n);
  p.numer.assign(n, 0.0);
  for (int pw = 0; pw < n; ++pw) {
    double acc = 0.0;
    for (int k = pw + 1; k <= n; ++k) acc += p.denom[k] * sm[k - 1 - pw];
    p.numer[pw] = -acc;
  }
  return p;
}

std::vector<double> hankel_oracle(const std::vector<double>& mom, int n) {
  if (n < 1) throw InvalidArgument("order must be >= 1");
  if (static_cast<int>(mom.size()) < 2 * n)
    throw InvalidArgument("need 2n moments for the order-n Hankel system");

  // Gaussian elimination with partial pivoting at 113-bit precision.
  std::vector<std::vector<quad>> a(n, std::vector<quad>(n + 1));
  double scale = 0.0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      a[r][c] = mom[r + c];
      scale = std::max(scale, std::abs(mom[r + c]));
    }
    a[r][n] = -quad(mom[n + r]);
    scale = std::max(scale, std::abs(mom[n + r]));
  }
  const quad tiny = quad(scale) * std::numeric_limits<quad>::epsilon() * n;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
    }
    if (abs(a[piv][col]) <= tiny)
      throw SingularHankel("Hankel system singular at extended precision (column " +
                           std::to_string(col) + ")");
    std::swap(a[col], a[piv]);
    for (int r = col + 1; r < n; ++r) {
      const quad f = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<quad> x(n);
  for (int r = n - 1; r >= 0; --r) {
    quad acc = a[r][n];
    for (int c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
    x[r] = acc / a[r][r];
  }
  std::vector<double> out(n + 1);
  for (int i = 0; i < n; ++i) out[i] = static_cast<double>(x[i]);
  out[n] = 1.0;
  return out;
}

cdouble markov_value(const SignedMeasureSpec& s, cdouble lambda, MarkovMethod method) {
  if (method == MarkovMethod::quadrature) {
    const QuadratureRule rule = gauss_quadrature(s.base, 200);
    cdouble acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      cdouble num = rule.weights[i];
      for (double x : s.shifts) num *= rule.nodes[i] - x;
      acc += num / (rule.nodes[i] - lambda);
    }
    return acc;
  }
  if (s.base.name() != "chebyshev")
    throw InvalidArgument("closed-form Markov evaluation needs the Chebyshev base");
  if (std::abs(lambda * lambda - 1.0) < 1e-12)
    throw BranchAmbiguity("lambda too close to a branch point of sqrt(lambda^2-1)");
  cdouble value = -1.0 / branch_sqrt(lambda);  // F_0
  for (size_t k = 0; k < s.shifts.size(); ++k) {
    // total mass of the measure with the first k shifts applied
    double mass = 1.0;
    if (k > 0) {
      const SignedMeasureSpec partial(
          s.base, std::vector<double>(s.shifts.begin(), s.shifts.begin() + k));
      mass = signed_moments(partial, 1)[0];
    }
    value = (lambda - s.shifts[k]) * value + mass;
  }
  return value;
}

PoleClassification classify_spurious(const PadeApproximant& p, double tol) {
  PoleClassification out;
  for (const cdouble& z : p.poles) {
    if (support_distance(z) <= tol) {
      out.support_poles.push_back(z);
    } else {
      out.spurious_poles.push_back(z);
    }
  }
  return out;
}

std::vector<ApproxErrorEntry> approximation_error(
    const SignedMeasureSpec& s, const std::vector<int>& n_list,
    const std::vector<cdouble>& probes) {
  const MarkovMethod method = s.base.name() == "chebyshev" ? MarkovMethod::closed
                                                           : MarkovMethod::quadrature;
  std::vector<cdouble> ref(probes.size());
  for (size_t i = 0; i < probes.size(); ++i) ref[i] = markov_value(s, probes[i], method);

  std::vector<ApproxErrorEntry> table;
  table.reserve(n_list.size() * probes.size());
  for (int n : n_list) {
    const PadeApproximant p = diagonal_pade(s, n);
    for (size_t i = 0; i < probes.size(); ++i) {
      ApproxErrorEntry row;
      row.n = n;
      row.probe = probes[i];
      row.abs_err = std::abs(horner(p.numer, probes[i]) / horner(p.denom, probes[i]) -
                             ref[i]);
      row.near_pole = std::any_of(p.poles.begin(), p.poles.end(), [&](cdouble z) {
        return std::abs(z - probes[i]) < 1e-3;
      });
      table.push_back(row);
    }
  }
  return table;
}

}  // namespace gjacobi
