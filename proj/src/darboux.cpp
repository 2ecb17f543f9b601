// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#include "gjacobi/darboux.hpp"

#include <cmath>

#include "gjacobi/detail/sweep.hpp"
#include "gjacobi/errors.hpp"

namespace gjacobi {

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : -1; }

ShiftedFactorization from_sweep_double(double x, detail::SweepResult<double>&& r) {
  ShiftedFactorization f;
  f.x = x;
  f.d = std::move(r.d);
  f.v = std::move(r.v);
  f.eps.reserve(f.d.size());
  for (double dj : f.d) f.eps.push_back(sign_of(dj));
  return f;
}

}  // namespace

ShiftedFactorization factorize(const MeasureSpec& m, double x, int n, Precision prec) {
  if (n < 1) throw InvalidArgument("factorization order must be >= 1");
  if (prec == Precision::standard) {
    auto r = detail::pivot_sweep<double>(m, x, n);
    if (r.breakdown >= 0) throw Breakdown(r.breakdown);
    return from_sweep_double(x, std::move(r));
  }
  auto r = detail::pivot_sweep<quad>(m, x, n);
  if (r.breakdown >= 0) throw Breakdown(r.breakdown);
  ShiftedFactorization f;
  f.x = x;
  f.d.reserve(n);
  f.v.reserve(n - 1);
  f.eps.reserve(n);
  for (const quad& dj : r.d) {
    f.d.push_back(static_cast<double>(dj));
    f.eps.push_back(sign_of(f.d.back()));
  }
  for (const quad& vj : r.v) f.v.push_back(static_cast<double>(vj));
  return f;
}

BidiagonalL build_L(const ShiftedFactorization& f) {
  BidiagonalL L;
  const int n = f.order();
  L.diagL.resize(n);
  L.subL.resize(n - 1);
  for (int j = 0; j < n; ++j) {
    L.diagL[j] = std::sqrt(std::abs(f.d[j]));
    if (j < n - 1) L.subL[j] = f.v[j] * L.diagL[j];
  }
  return L;
}

GSymmetricTridiagonal darboux_transform(const ShiftedFactorization& f) {
  const BidiagonalL L = build_L(f);
  const int n = f.order();
  GSymmetricTridiagonal t;
  t.diag.resize(n);
  t.sup.resize(n - 1);
  t.sub.resize(n - 1);
  t.g = f.eps;
  // G L^T L + xI from the bidiagonal product. The d_n v_n^2 contribution to
  // the last diagonal entry falls outside the truncation, making row n-1 an
  // edge row.
  for (int j = 0; j < n; ++j) {
    double ltl = L.diagL[j] * L.diagL[j];
    if (j < n - 1) ltl += L.subL[j] * L.subL[j];
    t.diag[j] = f.eps[j] * ltl + f.x;
  }
  for (int j = 0; j + 1 < n; ++j) {
    const double off = L.subL[j] * L.diagL[j + 1];
    t.sup[j] = f.eps[j] * off;
    t.sub[j] = t.g[j] * t.g[j + 1] * t.sup[j];
  }
  return t;
}

JacobiTruncation inverse_transform(const BidiagonalL& L, const std::vector<int>& g,
                                   double x) {
  const int n = L.order();
  if (static_cast<int>(g.size()) != n)
    throw InvalidArgument("signature length must match the factor order");
  for (int j = 0; j < n; ++j) {
    if (g[j] != 1 && g[j] != -1) throw InvalidArgument("signature entries must be +-1");
    if (!(L.diagL[j] > 0.0)) throw InvalidArgument("diagL must be strictly positive");
  }
  JacobiTruncation J;
  J.diag.resize(n);
  J.offdiag.resize(n - 1);
  for (int j = 0; j < n; ++j) {
    double bj = g[j] * L.diagL[j] * L.diagL[j];
    if (j > 0) bj += g[j - 1] * L.subL[j - 1] * L.subL[j - 1];
    J.diag[j] = bj + x;
  }
  for (int j = 0; j + 1 < n; ++j) {
    const double aj = g[j] * L.diagL[j] * L.subL[j];
    if (!(aj > 0.0)) throw NotJacobi(j);
    J.offdiag[j] = aj;
  }
  return J;
}

std::vector<double> christoffel_eval(const MeasureSpec& m, double x, double t,
                                     int degree) {
  if (degree < 0) throw InvalidArgument("degree must be >= 0");
  // Needs pivots d_0..d_degree, i.e. the factorization through order degree+1.
  const ShiftedFactorization f = factorize(m, x, degree + 1);
  const PolyEval px = eval_polys(m, x, degree + 1);

  // P_j(x)/P_{j+1}(x) = -v_j; the last multiplier is a_degree / d_degree.
  std::vector<double> vr = f.v;
  vr.push_back(m.coeff(degree).a / f.d[degree]);

  std::vector<double> out(degree + 1);
  const bool at_shift = std::abs(t - x) < 1e-8 * std::max(1.0, std::abs(x));
  if (at_shift) {
    const std::vector<double> dpx = eval_poly_derivs(m, x, degree + 1);
    for (int j = 0; j <= degree; ++j) {
      out[j] = f.eps[j] * std::sqrt(std::abs(f.d[j])) *
               (dpx[j] + vr[j] * dpx[j + 1]);
    }
    return out;
  }
  const PolyEval pt = eval_polys(m, t, degree + 1);
  for (int j = 0; j <= degree; ++j) {
    out[j] = f.eps[j] * std::sqrt(std::abs(f.d[j])) *
             (pt.values[j] + vr[j] * pt.values[j + 1]) / (t - x);
  }
  return out;
}

namespace {

struct RawTridiagonal {
  std::vector<double> diag, sup, sub;
};

// Monic tridiagonal LU step: T - xI = L U (unit lower bidiagonal times upper
// bidiagonal, Doolittle sweep), then T <- U L + xI. The superdiagonal is
// unchanged; the last diagonal entry becomes an edge row.
RawTridiagonal monic_lu_step(const RawTridiagonal& in, double x, int shift_index) {
  const int n = static_cast<int>(in.diag.size());
  std::vector<double> piv(n), mult(n > 0 ? n - 1 : 0);
  double scale = 0.0;
  for (int j = 0; j < n; ++j) {
    double pj = in.diag[j] - x;
    if (j > 0) pj -= mult[j - 1] * in.sup[j - 1];
    scale = std::max(scale, std::abs(in.diag[j] - x));
    if (j < n - 1) scale = std::max({scale, std::abs(in.sup[j]), std::abs(in.sub[j])});
    if (std::abs(pj) < detail::kPivotTolFactor * scale) throw Breakdown(j, shift_index);
    piv[j] = pj;
    if (j < n - 1) mult[j] = in.sub[j] / pj;
  }
  RawTridiagonal out;
  out.diag.resize(n);
  out.sup = in.sup;
  out.sub.resize(n > 0 ? n - 1 : 0);
  for (int j = 0; j < n; ++j) {
    out.diag[j] = piv[j] + x;
    if (j < n - 1) out.diag[j] += in.sup[j] * mult[j];
  }
  for (int j = 0; j + 1 < n; ++j) out.sub[j] = piv[j + 1] * mult[j];
  return out;
}

// Diagonal similarity to |sup_j| = |sub_j| = sqrt|sup_j sub_j| plus the
// signature recovered from sign(sub_j * sup_j).
GSymmetricTridiagonal balance_to_signature(const RawTridiagonal& raw) {
  const int n = static_cast<int>(raw.diag.size());
  GSymmetricTridiagonal t;
  t.diag = raw.diag;
  t.sup.resize(n - 1);
  t.sub.resize(n - 1);
  t.g.assign(n, 1);
  for (int j = 0; j + 1 < n; ++j) {
    const double prod = raw.sub[j] * raw.sup[j];
    if (prod == 0.0) throw NotSignSymmetric(j);
    t.g[j + 1] = prod > 0.0 ? t.g[j] : -t.g[j];
    const double mag = std::sqrt(std::abs(prod));
    t.sup[j] = std::copysign(mag, raw.sup[j]);
    t.sub[j] = t.g[j] * t.g[j + 1] * t.sup[j];
  }
  return t;
}

}  // namespace

GSymmetricTridiagonal chain_transform(const SignedMeasureSpec& s, int n,
                                      Precision prec) {
  if (n < 1) throw InvalidArgument("transform order must be >= 1");
  GSymmetricTridiagonal first;
  try {
    first = darboux_transform(factorize(s.base, s.shifts[0], n, prec));
  } catch (const Breakdown& b) {
    throw Breakdown(b.pivot_index, 0);
  }
  if (s.shifts.size() == 1) return first;

  RawTridiagonal cur{first.diag, first.sup, first.sub};
  for (size_t k = 1; k < s.shifts.size(); ++k) {
    cur = monic_lu_step(cur, s.shifts[k], static_cast<int>(k));
  }
  return balance_to_signature(cur);
}

StahlPivots stahl_closed_form(double alpha, int j) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must be in (0,1)");
  if (j < 0) throw InvalidArgument("index must be non-negative");
  const double pa = M_PI * alpha;
  const double cj = std::cos(j * pa);
  const double cj1 = std::cos((j + 1) * pa);
  // a cosine vanishing at rational alpha lands within rounding of zero, so
  // the cutoff scales with the argument magnitude
  const double cutoff = 1e-12 * std::max(1.0, (j + 1) * pa);
  if (std::abs(cj) < cutoff || std::abs(cj1) < cutoff) throw Breakdown(j);
  StahlPivots p;
  if (j == 0) {
    p.d = -std::cos(pa);
    p.v = -1.0 / (std::sqrt(2.0) * std::cos(pa));
    p.d_tan_form = p.d;
  } else {
    p.d = -0.5 * cj1 / cj;
    p.v = -cj / cj1;
    p.d_tan_form = 0.5 * (std::sin(pa) * std::tan(j * pa) - std::cos(pa));
  }
  return p;
}

}  // namespace gjacobi
