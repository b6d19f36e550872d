#pragma once

#include <cstdint>
#include <vector>

#include "lppcone/linalg.hpp"
#include "lppcone/lpp.hpp"
#include "lppcone/poset.hpp"

namespace lppcone {

/// One simplicial cell of the decomposition of R_+^P, keyed by a linear
/// extension (fill order). The upper chain U_0 c U_1 c ... c U_n collects
/// the top-k vertices of the extension, antichains[i] is the set of minimal
/// elements of U_{i+1}, and eu has those antichains as columns. insertion[k]
/// is v_{k+1} = U_{k+1} \ U_k, i.e. the (k+1)-th largest vertex.
///
/// Index conventions: antichain/column index i runs down the upper chain
/// (i = 0 is the singleton top set), while LambdaVector entries run in fill
/// time. The two orders are reverses of each other: the coefficient of
/// column i in E_U * c = w is the fill-time value lambda[n-1-i].
struct SimplicialCell {
    LinearExtension extension;
    std::vector<std::uint64_t> upper_chain;  // n+1 masks, U_0 = empty
    std::vector<Antichain> antichains;       // dU_1 .. dU_n
    std::vector<int> insertion;              // v_1 .. v_n (descending fill order)
    std::vector<std::vector<int>> eu;        // eu[v][i] = 1 iff v in antichains[i]
    Path schutz;                             // the cell's longest path
};

SimplicialCell cell_from_extension(const Poset& p, const LinearExtension& ext);

/// Exact determinant of the cell matrix; always +1 or -1.
long long eu_determinant(const SimplicialCell& cell);

/// Extracts the path shared by all generic weights of the cell: start at
/// the top insertion, repeatedly jump to the earliest-inserted lower cover,
/// stop at a minimal vertex, reverse.
Path schutzenberger_path(const Poset& p, const SimplicialCell& cell);

/// Column-ordered coefficients c with E_U * c = w, solved exactly or in
/// floating point depending on T.
template <class T>
std::vector<T> eu_solve(const SimplicialCell& cell, const std::vector<T>& w) {
    const int n = static_cast<int>(cell.eu.size());
    std::vector<std::vector<T>> a(n, std::vector<T>(n));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < n; ++i) a[v][i] = T(cell.eu[v][i]);
    return solve_square<T>(std::move(a), w);
}

template <class T>
struct LocatedCell {
    SimplicialCell cell;
    std::vector<T> lambda;  // fill-time order; nonnegative, sums to G_P
};

/// Locates the cell containing a generic nonnegative weight vector by
/// sorting its passage times, and returns the fill-time increments
/// lambda_k = G(v_k) - G(v_{k-1}). Tied passage times are rejected.
template <class T>
LocatedCell<T> locate_cell(const Poset& p, const std::vector<T>& w);

/// Evaluates the passage time through an arbitrary fixed cell: with
/// c = E_U^{-1} w, sums c_i over the columns whose antichain meets the
/// longest path of w. Checks the result against the recursion.
template <class T>
T sum_representation(const Poset& p, const std::vector<T>& w, const SimplicialCell& fixed);

}  // namespace lppcone
