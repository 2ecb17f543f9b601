// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GJACOBI_MEASURES_HPP
#define GJACOBI_MEASURES_HPP

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gjacobi {

struct RecurrenceCoeff {
  double a;  // off-diagonal, must be > 0
  double b;  // diagonal
};

using CoeffFn = std::function<RecurrenceCoeff(int)>;

/// A positive probability measure on a compact real interval, described by
/// the recurrence coefficients (a_k, b_k) of its orthonormal polynomials.
/// Coefficient access is memoized (factorization sweeps re-read prefixes) and
/// internally synchronized; instances are cheap shared handles, read-only
/// after construction and safe to share across threads.
class MeasureSpec {
 public:
  MeasureSpec(std::string name, CoeffFn coeff,
              std::array<double, 2> support = {-1.0, 1.0});

  const std::string& name() const;
  std::array<double, 2> support_hint() const;

  /// (a_k, b_k); throws NonPositiveCoefficient if the generator yields a_k <= 0.
  RecurrenceCoeff coeff(int k) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// A signed measure prod_i (t - x_i) dmu(t): a positive base plus the ordered
/// list of real sign-change points.
struct SignedMeasureSpec {
  MeasureSpec base;
  std::vector<double> shifts;

  SignedMeasureSpec(MeasureSpec base_measure, std::vector<double> shift_points);
};

/// dmu0 = dt / (pi sqrt(1-t^2)): a_0 = 1/sqrt(2), a_k = 1/2 (k >= 1), b_k = 0.
MeasureSpec chebyshev_measure();

/// Finite coefficient prefixes; beyond the supplied entries the last pair
/// repeats (tail convention, also used by the JSON measure files).
MeasureSpec custom_measure(std::vector<double> a, std::vector<double> b,
                           std::string name = "custom");

/// Fully general generator form (e.g. periodic coefficient sequences).
MeasureSpec custom_measure(CoeffFn generator, std::string name = "custom");

/// Moments m_0..m_{count-1}, m_k = integral of t^k dmu, by Gauss quadrature of
/// degree-exactness >= count. m_0 = 1 exactly (probability normalization).
std::vector<double> moments(const MeasureSpec& m, int count);

/// Moments of prod(t - x_i) dmu, by one pass of s_k = m_{k+1} - x*m_k per shift.
std::vector<double> signed_moments(const SignedMeasureSpec& s, int count);

}  // namespace gjacobi

#endif  // GJACOBI_MEASURES_HPP
