#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lppcone/rational.hpp"

namespace lppcone {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

/// Exact row rank by fraction-free (Bareiss) elimination.
int rank(const RatMatrix& m);

/// Exact determinant of a square integer matrix (Bareiss).
Int determinant(IntMatrix m);

namespace detail {
template <class T>
bool better_pivot(const T& candidate, const T& current) {
    if constexpr (std::is_same_v<T, double>) {
        return std::abs(candidate) > std::abs(current);
    } else {
        (void)candidate;
        return current == T(0);
    }
}
}  // namespace detail

/// Solves the square system A x = b by Gauss-Jordan elimination. Exact for
/// rational T; partial pivoting for double.
template <class T>
std::vector<T> solve_square(std::vector<std::vector<T>> a, std::vector<T> b) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix not square");
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("rhs dimension mismatch");

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (detail::better_pivot(a[r][col], a[pivot][col])) pivot = r;
        if (a[pivot][col] == T(0)) throw std::invalid_argument("singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        T inv = a[col][col];
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == T(0)) continue;
            T factor = a[r][col] / inv;
            for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<T> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

}  // namespace lppcone
