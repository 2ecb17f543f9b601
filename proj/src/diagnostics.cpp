// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#include "gjacobi/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gjacobi/detail/sweep.hpp"
#include "gjacobi/errors.hpp"
#include "gjacobi/rng.hpp"

namespace gjacobi {

namespace {

bool is_decade(int j) {
  if (j < 1) return j == 0;
  int p = 1;
  while (p < j) p *= 10;
  return p == j;
}

template <class Real>
BcondReport sweep_stats(const MeasureSpec& m, double x, int limit) {
  BcondReport rep;
  rep.x = x;
  rep.limit = limit;
  rep.sup_d = 0.0;
  rep.argmax_j = -1;

  Real dprev = 0, vprev = 0;
  double scale = 0.0;
  using std::abs;
  for (int j = 0; j < limit; ++j) {
    const RecurrenceCoeff c = m.coeff(j);
    Real dj;
    if (j == 0) {
      dj = Real(c.b) - Real(x);
    } else {
      dj = Real(c.b) - Real(x) - dprev * vprev * vprev;
    }
    scale = std::max({scale, std::abs(c.b - x), c.a});
    if (abs(dj) < Real(detail::kPivotTolFactor * scale)) {
      rep.breakdown = true;
      rep.breakdown_index = j;
      return rep;
    }
    const double dj_d = static_cast<double>(dj);
    if (std::abs(dj_d) > rep.sup_d) {
      rep.sup_d = std::abs(dj_d);
      rep.argmax_j = j;
    }
    if (is_decade(j) || j == limit - 1) rep.checkpoints.emplace_back(j, dj_d);
    vprev = Real(c.a) / dj;
    dprev = dj;
  }
  return rep;
}

}  // namespace

BcondReport bcond_sup(const MeasureSpec& m, double x, int limit, Precision prec) {
  if (limit < 1) throw InvalidArgument("pivot count must be >= 1");
  return prec == Precision::standard ? sweep_stats<double>(m, x, limit)
                                     : sweep_stats<quad>(m, x, limit);
}

BcondReport bcond_sup(const MeasureSpec& m, double x, int limit) {
  return bcond_sup(m, x, limit,
                   limit > 10000 ? Precision::extended : Precision::standard);
}

std::vector<double> carleman_sums(const GSymmetricTridiagonal& T,
                                  const std::vector<int>& checkpoints) {
  const int terms = T.order() - 1;
  std::vector<double> out;
  out.reserve(checkpoints.size());
  double sum = 0.0;
  int k = 0;
  for (int cp : checkpoints) {
    if (cp < 0 || cp > terms)
      throw InvalidArgument("checkpoint exceeds available off-diagonal terms");
    for (; k < cp; ++k) {
      const double mag2 = std::abs(T.sub[k] * T.sup[k]);
      if (mag2 == 0.0) throw InvalidArgument("off-diagonal magnitude vanishes");
      sum += 1.0 / std::sqrt(mag2);
    }
    out.push_back(sum);
  }
  return out;
}

NonnegativityReport nonnegativity_check(const ShiftedFactorization& f, int trials,
                                        std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("need at least one trial");
  const int n = f.order();
  const GSymmetricTridiagonal t = darboux_transform(f);
  const BidiagonalL L = build_L(f);

  NonnegativityReport rep;
  rep.min_form = std::numeric_limits<double>::infinity();
  rep.max_discrepancy = 0.0;

  SplitMix64 rng(seed);
  std::vector<double> v(n), tv(n), lv(n);
  for (int trial = 0; trial < trials; ++trial) {
    const int len = rng.uniform_index(n);
    std::fill(v.begin(), v.end(), 0.0);
    for (int i = 0; i < len; ++i) v[i] = rng.uniform_pm1();

    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) norm2 += v[i] * v[i];
    if (norm2 == 0.0) continue;

    // route 1: [ (Jt - xI) v, v ]_G
    for (int i = 0; i < n; ++i) {
      double acc = (t.diag[i] - f.x) * v[i];
      if (i > 0) acc += t.sub[i - 1] * v[i - 1];
      if (i < n - 1) acc += t.sup[i] * v[i + 1];
      tv[i] = acc;
    }
    double r1 = 0.0;
    for (int i = 0; i < n; ++i) r1 += t.g[i] * tv[i] * v[i];

    // route 2: ||L v||^2
    for (int i = 0; i < n; ++i) {
      double acc = L.diagL[i] * v[i];
      if (i > 0) acc += L.subL[i - 1] * v[i - 1];
      lv[i] = acc;
    }
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) r2 += lv[i] * lv[i];

    rep.min_form = std::min(rep.min_form, r1 / norm2);
    rep.max_discrepancy = std::max(rep.max_discrepancy, std::abs(r1 - r2) / norm2);
  }
  return rep;
}

KroneckerStats kronecker_stats(double alpha, int limit) {
  if (limit < 1) throw InvalidArgument("need at least one sample");
  KroneckerStats st;
  st.min_abs_cos = std::numeric_limits<double>::infinity();
  std::vector<double> frac(limit);
  for (int j = 1; j <= limit; ++j) {
    st.min_abs_cos = std::min(st.min_abs_cos, std::abs(std::cos(j * M_PI * alpha)));
    double fr = std::fmod(j * alpha, 1.0);
    if (fr < 0.0) fr += 1.0;
    frac[j - 1] = fr;
  }
  std::sort(frac.begin(), frac.end());
  double gap = frac.front();  // boundary gap [0, first)
  for (size_t i = 0; i + 1 < frac.size(); ++i)
    gap = std::max(gap, frac[i + 1] - frac[i]);
  gap = std::max(gap, 1.0 - frac.back());
  st.fill_distance = gap;
  return st;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::definitizable_evidence: return "definitizable-evidence";
    case Verdict::non_definitizable_evidence: return "non-definitizable-evidence";
    default: return "inconclusive";
  }
}

DiagnosticsReport diagnose(const MeasureSpec& m, double x, int limit,
                           double bound_threshold, std::uint64_t seed) {
  if (limit < 100) throw InvalidArgument("diagnostic sweep needs at least 100 pivots");

  DiagnosticsReport rep;
  rep.x = x;
  rep.limit = limit;

  const BcondReport full = bcond_sup(m, x, limit);
  const BcondReport early = bcond_sup(m, x, limit / 10);
  rep.sup_d = full.sup_d;
  rep.argmax_j = full.argmax_j;
  rep.sup_d_early = early.sup_d;
  rep.breakdown = full.breakdown;
  rep.breakdown_index = full.breakdown_index;

  // transform for the Carleman series; on breakdown use the surviving prefix
  const int usable = full.breakdown ? full.breakdown_index : limit;
  if (usable >= 2) {
    const GSymmetricTridiagonal t = darboux_transform(factorize(m, x, usable));
    std::vector<int> cps;
    for (int cp = 10; cp < usable - 1; cp *= 10) cps.push_back(cp);
    cps.push_back(usable - 1);
    const std::vector<double> sums = carleman_sums(t, cps);
    for (size_t i = 0; i < cps.size(); ++i) rep.carleman.emplace_back(cps[i], sums[i]);
  }

  if (usable >= 1) {
    const int nn = std::min(usable, 100);
    rep.min_quadratic_form =
        nonnegativity_check(factorize(m, x, nn), 100, seed).min_form;
  } else {
    rep.min_quadratic_form = std::numeric_limits<double>::quiet_NaN();
  }

  if (std::abs(x) < 1.0) {
    rep.kronecker_min_cos = kronecker_stats(std::acos(x) / M_PI, limit).min_abs_cos;
  } else {
    rep.kronecker_min_cos = std::numeric_limits<double>::quiet_NaN();
  }

  if (rep.sup_d_early > 0.0 && rep.sup_d >= 2.0 * rep.sup_d_early) {
    rep.verdict = Verdict::non_definitizable_evidence;
  } else if (rep.sup_d_early > 0.0 &&
             rep.sup_d - rep.sup_d_early < 0.01 * rep.sup_d_early &&
             rep.sup_d <= bound_threshold) {
    rep.verdict = Verdict::definitizable_evidence;
  } else {
    rep.verdict = Verdict::inconclusive;
  }
  return rep;
}

}  // namespace gjacobi
