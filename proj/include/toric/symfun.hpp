#pragma once

#include "toric/numeric.hpp"

#include <cstddef>

// Elementary symmetric functions of integer vectors.
//
// The classification criterion compares sigma_i(C, C+a) with sigma_i(0, b) for
// i up to min(r+1, s), so everything here is exact and works on vectors of
// arbitrary sign.
namespace toric::symfun {

/// sigma_i(v); sigma_0 = 1. Throws IndexOutOfRange when i > v.size().
Integer elem_sym(const IntVector& v, std::size_t i);

/// sigma_0(v), ..., sigma_m(v) in one O(n*m) pass. m is clamped to v.size().
IntVector elem_sym_upto(const IntVector& v, std::size_t m);

/// True iff sigma_i(u) = sigma_i(v) for 1 <= i <= m.
bool truncated_sym_equal(const IntVector& u, const IntVector& v, std::size_t m);

IntVector shift(const IntVector& v, const Integer& c);

/// Coefficients of t^0..t^m in prod_j (1 - v_j t); entry k is (-1)^k sigma_k(v)
/// and vanishes for k > v.size().
IntVector chern_coeffs(const IntVector& v, std::size_t m);

/// (c, c + v): the shifted vector with a leading c, as used by the criterion.
IntVector prepend_shifted(const IntVector& v, const Integer& c);

}  // namespace toric::symfun
