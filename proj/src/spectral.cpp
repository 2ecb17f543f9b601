// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#include "gjacobi/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "gjacobi/errors.hpp"

namespace gjacobi {

double support_distance(cdouble z) {
  const double re = std::abs(z.real());
  if (re <= 1.0) return std::abs(z.imag());
  return std::hypot(re - 1.0, z.imag());
}

namespace {

bool eig_less(const cdouble& a, const cdouble& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Double-shift QR on an upper Hessenberg matrix, eigenvalues only; the
// classic EISPACK hqr sweep. h is row-major n x n and is destroyed.
// iter_budget is shared across all deflations.
std::vector<cdouble> hqr_eigenvalues(std::vector<double>& hbuf, int n,
                                     int* iter_budget) {
  auto h = [&](int i, int j) -> double& { return hbuf[i * n + j]; };
  const int low = 0;
  std::vector<cdouble> w(n);

  double norm = 0.0;
  {
    int k = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = k; j < n; ++j) norm += std::abs(h(i, j));
      k = i;
    }
  }

  int en = n - 1;
  double t = 0.0;
  while (en >= low) {
    int its = 0;
    const int na = en - 1;
    const int enm2 = na - 1;
    for (;;) {
      int l;
      for (l = en; l > low; --l) {
        double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
        if (s == 0.0) s = norm;
        const double tst1 = s;
        const double tst2 = tst1 + std::abs(h(l, l - 1));
        if (tst2 == tst1) break;
      }

      double x = h(en, en);
      if (l == en) {  // one root found
        w[en] = {x + t, 0.0};
        en = na;
        break;
      }
      double y = h(na, na);
      double ww = h(en, na) * h(na, en);
      if (l == na) {  // two roots found
        double p = (y - x) / 2.0;
        const double q = p * p + ww;
        double zz = std::sqrt(std::abs(q));
        x += t;
        if (q >= 0.0) {
          zz = p + std::copysign(zz, p);
          w[na] = {x + zz, 0.0};
          w[en] = (zz != 0.0) ? cdouble{x - ww / zz, 0.0} : w[na];
        } else {
          w[na] = {x + p, zz};
          w[en] = {x + p, -zz};
        }
        en = enm2;
        break;
      }
      if (*iter_budget <= 0)
        throw IterationLimit("Hessenberg QR failed to converge within 100n iterations");

      if (its == 10 || its == 20) {  // exceptional shift
        t += x;
        for (int i = low; i <= en; ++i) h(i, i) -= x;
        const double s = std::abs(h(en, na)) + std::abs(h(na, enm2));
        x = 0.75 * s;
        y = x;
        ww = -0.4375 * s * s;
      }
      ++its;
      --(*iter_budget);

      // two consecutive small sub-diagonal elements
      int m;
      double p = 0.0, q = 0.0, r = 0.0, zz = 0.0;
      for (m = enm2; m >= l; --m) {
        zz = h(m, m);
        const double rr = x - zz;
        const double ss = y - zz;
        p = (rr * ss - ww) / h(m + 1, m) + h(m, m + 1);
        q = h(m + 1, m + 1) - zz - rr - ss;
        r = h(m + 2, m + 1);
        const double sc = std::abs(p) + std::abs(q) + std::abs(r);
        p /= sc;
        q /= sc;
        r /= sc;
        if (m == l) break;
        const double tst1 =
            std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(zz) +
                           std::abs(h(m + 1, m + 1)));
        const double tst2 = tst1 + std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
        if (tst2 == tst1) break;
      }
      for (int i = m + 2; i <= en; ++i) {
        h(i, i - 2) = 0.0;
        if (i != m + 2) h(i, i - 3) = 0.0;
      }

      // double QR step on rows/columns m..en
      for (int k = m; k <= na; ++k) {
        const bool notlas = (k != na);
        if (k != m) {
          p = h(k, k - 1);
          q = h(k + 1, k - 1);
          r = notlas ? h(k + 2, k - 1) : 0.0;
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x == 0.0) continue;
          p /= x;
          q /= x;
          r /= x;
        }
        const double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
        if (k != m) {
          h(k, k - 1) = -s * x;
        } else if (l != m) {
          h(k, k - 1) = -h(k, k - 1);
        }
        p += s;
        x = p / s;
        y = q / s;
        zz = r / s;
        q /= p;
        r /= p;
        if (!notlas) {
          for (int j = k; j <= en; ++j) {  // row modification
            p = h(k, j) + q * h(k + 1, j);
            h(k, j) -= p * x;
            h(k + 1, j) -= p * y;
          }
          const int jmax = std::min(en, k + 3);
          for (int i = l; i <= jmax; ++i) {  // column modification
            p = x * h(i, k) + y * h(i, k + 1);
            h(i, k) -= p;
            h(i, k + 1) -= p * q;
          }
        } else {
          for (int j = k; j <= en; ++j) {
            p = h(k, j) + q * h(k + 1, j) + r * h(k + 2, j);
            h(k, j) -= p * x;
            h(k + 1, j) -= p * y;
            h(k + 2, j) -= p * zz;
          }
          const int jmax = std::min(en, k + 3);
          for (int i = l; i <= jmax; ++i) {
            p = x * h(i, k) + y * h(i, k + 1) + zz * h(i, k + 2);
            h(i, k) -= p;
            h(i, k + 1) -= p * q;
            h(i, k + 2) -= p * r;
          }
        }
      }
    }
  }
  return w;
}

// Eigenvalues of one irreducible block [lo, hi] of the tridiagonal.
void block_eigs(const std::vector<double>& diag, const std::vector<double>& sup,
                const std::vector<double>& sub, int lo, int hi, int* iter_budget,
                std::vector<cdouble>& out) {
  const int n = hi - lo + 1;
  if (n == 1) {
    out.emplace_back(diag[lo], 0.0);
    return;
  }
  bool all_positive = true;
  for (int j = lo; j < hi; ++j) {
    if (!(sub[j] * sup[j] > 0.0)) {
      all_positive = false;
      break;
    }
  }
  if (all_positive) {
    // diagonal similarity to a symmetric tridiagonal: exactly real spectrum
    std::vector<double> d(diag.begin() + lo, diag.begin() + hi + 1);
    std::vector<double> e(n - 1);
    for (int j = 0; j < n - 1; ++j) e[j] = std::sqrt(sub[lo + j] * sup[lo + j]);
    for (double ev : sym_tridiag_eigs(std::move(d), std::move(e)))
      out.emplace_back(ev, 0.0);
    return;
  }
  // balance to |sup| = |sub| = sqrt|sup*sub| (signs kept), then dense QR
  std::vector<double> h(static_cast<size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) h[j * n + j] = diag[lo + j];
  for (int j = 0; j < n - 1; ++j) {
    const double mag = std::sqrt(std::abs(sub[lo + j] * sup[lo + j]));
    h[j * n + (j + 1)] = std::copysign(mag, sup[lo + j]);
    h[(j + 1) * n + j] = std::copysign(mag, sub[lo + j]);
  }
  const std::vector<cdouble> ev = hqr_eigenvalues(h, n, iter_budget);
  out.insert(out.end(), ev.begin(), ev.end());
}

}  // namespace

std::vector<cdouble> tridiag_eigs(std::vector<double> diag, std::vector<double> sup,
                                  std::vector<double> sub) {
  const int n = static_cast<int>(diag.size());
  if (n < 1) throw InvalidArgument("empty matrix");
  if (static_cast<int>(sup.size()) != n - 1 || static_cast<int>(sub.size()) != n - 1)
    throw InvalidArgument("off-diagonal size mismatch");

  int iter_budget = 100 * n;
  std::vector<cdouble> out;
  out.reserve(n);
  // a vanishing coupling sub_j*sup_j makes the matrix block triangular
  int lo = 0;
  for (int j = 0; j < n - 1; ++j) {
    if (sub[j] * sup[j] == 0.0) {
      block_eigs(diag, sup, sub, lo, j, &iter_budget, out);
      lo = j + 1;
    }
  }
  block_eigs(diag, sup, sub, lo, n - 1, &iter_budget, out);
  std::sort(out.begin(), out.end(), eig_less);
  return out;
}

std::vector<cdouble> tridiag_eigs(const GSymmetricTridiagonal& T) {
  return tridiag_eigs(T.diag, T.sup, T.sub);
}

std::vector<cdouble> tridiag_eigs(const JacobiTruncation& J) {
  return tridiag_eigs(J.diag, J.offdiag, J.offdiag);
}

AbBaReport ab_ba_check(const BidiagonalL& L, const std::vector<int>& g, double x) {
  const int n = L.order();
  if (static_cast<int>(g.size()) != n)
    throw InvalidArgument("signature length must match the factor order");
  AbBaReport rep;
  rep.x = x;

  // AB = L G L^T, symmetric tridiagonal, assembled directly
  std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
  for (int j = 0; j < n; ++j) {
    d[j] = g[j] * L.diagL[j] * L.diagL[j];
    if (j > 0) d[j] += g[j - 1] * L.subL[j - 1] * L.subL[j - 1];
  }
  for (int j = 0; j + 1 < n; ++j) e[j] = g[j] * L.diagL[j] * L.subL[j];
  rep.spec_ab = sym_tridiag_eigs(std::move(d), std::move(e));

  // BA = G L^T L via the general tridiagonal solver
  std::vector<double> diag(n), sup(n - 1), sub(n - 1);
  for (int j = 0; j < n; ++j) {
    double ltl = L.diagL[j] * L.diagL[j];
    if (j < n - 1) ltl += L.subL[j] * L.subL[j];
    diag[j] = g[j] * ltl;
  }
  for (int j = 0; j + 1 < n; ++j) {
    const double off = L.subL[j] * L.diagL[j + 1];
    sup[j] = g[j] * off;
    sub[j] = g[j + 1] * off;
  }
  rep.spec_ba = tridiag_eigs(std::move(diag), std::move(sup), std::move(sub));

  double dist = 0.0;
  for (int j = 0; j < n; ++j) {
    dist = std::max(dist, std::abs(rep.spec_ba[j] - cdouble{rep.spec_ab[j], 0.0}));
  }
  rep.max_pairwise_distance = dist;
  return rep;
}

SpectrumReport make_spectrum_report(int n, std::vector<cdouble> eigs) {
  SpectrumReport r;
  r.n = n;
  std::sort(eigs.begin(), eigs.end(), eig_less);
  r.eigs = std::move(eigs);
  for (const cdouble& z : r.eigs) {
    r.max_abs = std::max(r.max_abs, std::abs(z));
    if (support_distance(z) > kSupportTol) ++r.outside_count;
    if (z.imag() == 0.0) ++r.real_count;
  }
  return r;
}

PoleSweepResult pole_sweep(const SignedMeasureSpec& s, const std::vector<int>& n_list) {
  PoleSweepResult out;
  const int extra = static_cast<int>(s.shifts.size());
  for (int n : n_list) {
    if (n < 1) throw InvalidArgument("orders must be >= 1");
    try {
      // one extra order per shift so the leading n x n block carries the
      // semi-infinite entries, not the truncation edge
      const GSymmetricTridiagonal t = chain_transform(s, n + extra);
      std::vector<double> diag(t.diag.begin(), t.diag.begin() + n);
      std::vector<double> sup(t.sup.begin(), t.sup.begin() + (n - 1));
      std::vector<double> sub(t.sub.begin(), t.sub.begin() + (n - 1));
      out.reports.push_back(
          make_spectrum_report(n, tridiag_eigs(std::move(diag), std::move(sup),
                                               std::move(sub))));
    } catch (const Breakdown& b) {
      out.failures.push_back({n, b.shift_index, b.pivot_index});
    }
  }
  return out;
}

}  // namespace gjacobi
