#include "lppcone/linalg.hpp"

#include <utility>

namespace lppcone {

namespace {

// Bareiss elimination over integers; returns the rank and leaves the final
// pivot (the determinant for full-rank square input, up to row-swap sign)
// in *last_pivot when requested.
int bareiss(IntMatrix& m, int* sign_out, Int* last_pivot) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    Int prev = 1;
    int sign = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            sign = -sign;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    if (sign_out) *sign_out = sign;
    if (last_pivot) *last_pivot = prev;
    return r;
}

}  // namespace

int rank(const RatMatrix& m) {
    IntMatrix scaled;
    scaled.reserve(m.size());
    for (const auto& row : m) {
        Int lcm = 1;
        for (const Rat& q : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Int> irow;
        irow.reserve(row.size());
        for (const Rat& q : row) irow.push_back(Int(q.get_num()) * (lcm / Int(q.get_den())));
        scaled.push_back(std::move(irow));
    }
    return bareiss(scaled, nullptr, nullptr);
}

Int determinant(IntMatrix m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return 1;
    int sign = 1;
    Int last = 0;
    int r = bareiss(m, &sign, &last);
    if (r < n) return 0;
    return sign > 0 ? last : -last;
}

}  // namespace lppcone
