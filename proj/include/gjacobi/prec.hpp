// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GJACOBI_PREC_HPP
#define GJACOBI_PREC_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace gjacobi {

/// Software extended-precision scalar (113-bit mantissa) used by the
/// long-sweep and Hankel-oracle paths where 64-bit rounding compounds.
using quad = boost::multiprecision::cpp_bin_float_quad;

enum class Precision { standard, extended };

}  // namespace gjacobi

#endif  // GJACOBI_PREC_HPP
