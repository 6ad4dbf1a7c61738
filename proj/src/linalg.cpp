#include "hopf_trisect/linalg.hpp"

#include <algorithm>

namespace ht {

namespace {

// In-place RREF; returns pivot column per pivot row.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& a, std::size_t cols, double tol) {
    double scale = 0.0;
    for (const auto& row : a)
        for (const K& v : row) scale = std::max(scale, Field<K>::magnitude(v));
    const double eps = Field<K>::exact ? 0.0 : tol * (1.0 + scale);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = a.size();
        double best = eps;
        for (std::size_t i = r; i < a.size(); ++i) {
            double m = Field<K>::magnitude(a[i][c]);
            if (Field<K>::exact ? !Field<K>::is_zero(a[i][c]) : m > best) {
                piv = i;
                best = m;
                if (Field<K>::exact) break;
            }
        }
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        const K inv = Field<K>::inverse(a[r][c]);
        for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || Field<K>::is_zero(a[i][c], 0.0)) continue;
            const K f = a[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!Field<K>::is_zero(a[r][k], 0.0)) a[i][k] -= f * a[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> a, std::size_t cols, double tol) {
    const auto pivots = rref(a, cols, tol);
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<K>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(cols, Field<K>::zero());
        v[f] = Field<K>::one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
std::size_t matrix_rank(Matrix<K> a, std::size_t cols, double tol) {
    return rref(a, cols, tol).size();
}

template std::vector<std::vector<Rational>> nullspace(Matrix<Rational>, std::size_t, double);
template std::vector<std::vector<Complex>> nullspace(Matrix<Complex>, std::size_t, double);
template std::size_t matrix_rank(Matrix<Rational>, std::size_t, double);
template std::size_t matrix_rank(Matrix<Complex>, std::size_t, double);

}  // namespace ht
