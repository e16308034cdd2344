#pragma once

#include "l2limits/rational.hpp"

#include <Eigen/SparseCore>

#include <cstddef>
#include <vector>

namespace l2limits {

using IntSparse = Eigen::SparseMatrix<int, Eigen::ColMajor>;

/// Rank over the rationals, computed exactly by fraction-free column
/// reduction (64-bit with overflow detection, retried in arbitrary
/// precision when an entry overflows).
std::size_t exact_rank(const IntSparse& m);

/// Coefficients c[0..n] of det(x I - A), c[n] = 1, computed exactly over
/// the rationals (Faddeev-LeVerrier). Dense O(n^4); intended for n <= 60.
std::vector<Rational> characteristic_polynomial(const IntSparse& a);

bool all_integral(const std::vector<Rational>& coefficients);

}  // namespace l2limits
