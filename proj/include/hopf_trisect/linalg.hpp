#pragma once

#include <cstddef>
#include <vector>

#include "hopf_trisect/scalar.hpp"

namespace ht {

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Basis of {x : A x = 0} via reduced row echelon form. Float pivots below
// tol·(1 + max |entry|) count as zero.
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> a, std::size_t cols, double tol = kDefaultTolerance);

template <class K>
std::size_t matrix_rank(Matrix<K> a, std::size_t cols, double tol = kDefaultTolerance);

}  // namespace ht
