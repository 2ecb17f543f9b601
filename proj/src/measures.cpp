// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#include "gjacobi/measures.hpp"

#include <cmath>
#include <mutex>

#include "gjacobi/errors.hpp"
#include "gjacobi/jacobi.hpp"

namespace gjacobi {

struct MeasureSpec::State {
  std::string name;
  CoeffFn fn;
  std::array<double, 2> support;
  mutable std::mutex mu;
  mutable std::vector<RecurrenceCoeff> memo;
};

MeasureSpec::MeasureSpec(std::string name, CoeffFn coeff, std::array<double, 2> support)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->fn = std::move(coeff);
  state_->support = support;
}

const std::string& MeasureSpec::name() const { return state_->name; }

std::array<double, 2> MeasureSpec::support_hint() const { return state_->support; }

RecurrenceCoeff MeasureSpec::coeff(int k) const {
  if (k < 0) throw InvalidArgument("coefficient index must be non-negative");
  std::lock_guard<std::mutex> lock(state_->mu);
  auto& memo = state_->memo;
  while (static_cast<int>(memo.size()) <= k) {
    const int j = static_cast<int>(memo.size());
    RecurrenceCoeff c = state_->fn(j);
    if (!(c.a > 0.0) || !std::isfinite(c.a)) throw NonPositiveCoefficient(j, c.a);
    if (!std::isfinite(c.b)) throw InvalidArgument("b_" + std::to_string(j) + " is not finite");
    memo.push_back(c);
  }
  return memo[k];
}

SignedMeasureSpec::SignedMeasureSpec(MeasureSpec base_measure,
                                     std::vector<double> shift_points)
    : base(std::move(base_measure)), shifts(std::move(shift_points)) {
  if (shifts.empty()) throw InvalidArgument("a signed measure needs at least one shift");
  for (double x : shifts) {
    if (!std::isfinite(x)) throw InvalidArgument("shift points must be finite");
  }
}

MeasureSpec chebyshev_measure() {
  return MeasureSpec("chebyshev", [](int k) {
    return RecurrenceCoeff{k == 0 ? 1.0 / std::sqrt(2.0) : 0.5, 0.0};
  });
}

MeasureSpec custom_measure(std::vector<double> a, std::vector<double> b,
                           std::string name) {
  if (a.empty() || b.empty())
    throw InvalidArgument("custom measure needs at least one a and one b entry");
  for (size_t k = 0; k < a.size(); ++k) {
    if (!(a[k] > 0.0) || !std::isfinite(a[k]))
      throw NonPositiveCoefficient(static_cast<int>(k), a[k]);
  }
  auto gen = [a = std::move(a), b = std::move(b)](int k) {
    const double ak = a[std::min<size_t>(k, a.size() - 1)];
    const double bk = b[std::min<size_t>(k, b.size() - 1)];
    return RecurrenceCoeff{ak, bk};
  };
  return MeasureSpec(std::move(name), std::move(gen));
}

MeasureSpec custom_measure(CoeffFn generator, std::string name) {
  return MeasureSpec(std::move(name), std::move(generator));
}

std::vector<double> moments(const MeasureSpec& m, int count) {
  if (count < 1) throw InvalidArgument("moment count must be >= 1");
  // An n-point rule is exact through degree 2n-1 >= count-1.
  const int nodes = std::max(1, (count + 1) / 2);
  const QuadratureRule rule = gauss_quadrature(m, nodes);
  std::vector<double> out(count);
  out[0] = 1.0;  // probability normalization is exact by construction
  std::vector<double> powers(rule.nodes.size(), 1.0);
  for (int k = 1; k < count; ++k) {
    double sum = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      powers[i] *= rule.nodes[i];
      sum += rule.weights[i] * powers[i];
    }
    out[k] = sum;
  }
  return out;
}

std::vector<double> signed_moments(const SignedMeasureSpec& s, int count) {
  if (count < 1) throw InvalidArgument("moment count must be >= 1");
  const int m_needed = count + static_cast<int>(s.shifts.size());
  std::vector<double> cur = moments(s.base, m_needed);
  for (double x : s.shifts) {
    std::vector<double> next(cur.size() - 1);
    for (size_t k = 0; k + 1 < cur.size(); ++k) next[k] = cur[k + 1] - x * cur[k];
    cur = std::move(next);
  }
  cur.resize(count);
  return cur;
}

}  // namespace gjacobi
