// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GJACOBI_ERRORS_HPP
#define GJACOBI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gjacobi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A recurrence coefficient a_k <= 0 was supplied or generated.
class NonPositiveCoefficient final : public Error {
 public:
  NonPositiveCoefficient(int k, double value)
      : Error("non-positive recurrence coefficient a_" + std::to_string(k) +
              " = " + std::to_string(value)),
        index(k) {}
  int index;
};

/// Pivot d_j vanished: the signed factorization at this shift does not exist.
/// shift_index >= 0 identifies which shift of a chain broke down.
class Breakdown final : public Error {
 public:
  explicit Breakdown(int pivot, int shift = -1)
      : Error(shift < 0
                  ? "factorization breakdown at pivot " + std::to_string(pivot)
                  : "factorization breakdown at pivot " + std::to_string(pivot) +
                        " while applying shift " + std::to_string(shift)),
        pivot_index(pivot),
        shift_index(shift) {}
  int pivot_index;
  int shift_index;
};

/// Inverse transform produced a non-positive off-diagonal entry.
class NotJacobi final : public Error {
 public:
  explicit NotJacobi(int j)
      : Error("reconstructed off-diagonal a_" + std::to_string(j) +
              " is not positive; result is symmetric tridiagonal but not Jacobi"),
        index(j) {}
  int index;
};

/// A chained transform has sub_j*sup_j = 0, so no signed diagonal congruence
/// to a symmetric matrix exists.
class NotSignSymmetric final : public Error {
 public:
  explicit NotSignSymmetric(int j)
      : Error("off-diagonal product vanishes at row " + std::to_string(j) +
              "; no signature form exists"),
        index(j) {}
  int index;
};

class IterationLimit final : public Error {
 public:
  using Error::Error;
};

/// Hankel system numerically singular at extended precision.
class SingularHankel final : public Error {
 public:
  using Error::Error;
};

/// lambda too close to the branch points +-1 of sqrt(lambda^2 - 1).
class BranchAmbiguity final : public Error {
 public:
  using Error::Error;
};

class InvalidArgument final : public Error {
 public:
  using Error::Error;
};

}  // namespace gjacobi

#endif  // GJACOBI_ERRORS_HPP
