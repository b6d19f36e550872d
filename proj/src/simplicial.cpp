#include "lppcone/simplicial.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace lppcone {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

SimplicialCell cell_from_extension(const Poset& p, const LinearExtension& ext) {
    if (!is_linear_extension(p, ext)) throw std::invalid_argument("invalid linear extension");
    const int n = p.size();

    SimplicialCell cell;
    cell.extension = ext;
    cell.upper_chain.assign(n + 1, 0);
    cell.insertion.resize(n);
    for (int k = 0; k < n; ++k) {
        cell.insertion[k] = ext.order[n - 1 - k];
        cell.upper_chain[k + 1] = cell.upper_chain[k] | bit(cell.insertion[k]);
    }
    cell.eu.assign(n, std::vector<int>(n, 0));
    for (int i = 1; i <= n; ++i) {
        std::uint64_t boundary = p.minimal_elements_mask(cell.upper_chain[i]);
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (boundary & bit(v)) {
                members.push_back(v);
                cell.eu[v][i - 1] = 1;
            }
        cell.antichains.push_back(make_antichain(p, std::move(members)));
    }
    cell.schutz = schutzenberger_path(p, cell);
    return cell;
}

long long eu_determinant(const SimplicialCell& cell) {
    const int n = static_cast<int>(cell.eu.size());
    IntMatrix m(n, std::vector<Int>(n));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < n; ++i) m[v][i] = cell.eu[v][i];
    Int det = determinant(std::move(m));
    if (det != 1 && det != -1) throw std::logic_error("cell matrix determinant is not unimodular");
    return det == 1 ? 1 : -1;
}

Path schutzenberger_path(const Poset& p, const SimplicialCell& cell) {
    const int n = p.size();
    std::vector<int> slot(n);  // vertex -> insertion index
    for (int k = 0; k < n; ++k) slot[cell.insertion[k]] = k;

    std::vector<int> reversed;
    int current = cell.insertion[0];
    reversed.push_back(current);
    while (!p.lower_covers(current).empty()) {
        int next = -1;
        for (int u : p.lower_covers(current))
            if (next == -1 || slot[u] < slot[next]) next = u;
        current = next;
        reversed.push_back(current);
    }
    Path path = make_path(p, std::vector<int>(reversed.rbegin(), reversed.rend()));
    for (const Antichain& a : cell.antichains)
        if (std::popcount(a.mask & path.mask) != 1)
            throw std::logic_error("cell antichain does not meet its path exactly once");
    return path;
}

template <class T>
LocatedCell<T> locate_cell(const Poset& p, const std::vector<T>& w) {
    std::vector<T> g = passage_times(p, w);  // validates w >= 0
    LinearExtension ext = extension_from_passage_times(p, g);
    const int n = p.size();

    LocatedCell<T> located;
    located.cell = cell_from_extension(p, ext);
    located.lambda.resize(n);
    T prev(0);
    for (int k = 0; k < n; ++k) {
        located.lambda[k] = g[ext.order[k]] - prev;
        prev = g[ext.order[k]];
    }

    if constexpr (std::is_same_v<T, Rat>) {
        // E_U applied to the reversed lambda must reproduce w exactly.
        for (int v = 0; v < n; ++v) {
            Rat sum = 0;
            for (int i = 0; i < n; ++i)
                if (located.cell.eu[v][i]) sum += located.lambda[n - 1 - i];
            if (sum != w[v]) throw std::logic_error("cell coordinates do not reproduce the weights");
        }
        for (const Rat& l : located.lambda)
            if (l < 0) throw std::logic_error("negative cell coordinate");
    }
    return located;
}

template LocatedCell<double> locate_cell<double>(const Poset&, const std::vector<double>&);
template LocatedCell<Rat> locate_cell<Rat>(const Poset&, const std::vector<Rat>&);

template <class T>
T sum_representation(const Poset& p, const std::vector<T>& w, const SimplicialCell& fixed) {
    const int n = p.size();
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weight vector dimension mismatch");
    ArgmaxPath best = argmax_path(p, w);
    if (best.tie) throw TiedPassageTimes();

    std::vector<T> c = eu_solve<T>(fixed, w);
    T total(0);
    for (int i = 0; i < n; ++i)
        if (fixed.antichains[i].mask & best.path.mask) total += c[i];

    T direct = passage_time(p, w);
    if constexpr (std::is_same_v<T, Rat>) {
        if (total != direct) throw std::logic_error("sum representation mismatch");
    } else {
        if (std::abs(total - direct) > 1e-9 * (1.0 + std::abs(direct)))
            throw std::logic_error("sum representation mismatch");
    }
    return total;
}

template double sum_representation<double>(const Poset&, const std::vector<double>&,
                                           const SimplicialCell&);
template Rat sum_representation<Rat>(const Poset&, const std::vector<Rat>&,
                                     const SimplicialCell&);

}  // namespace lppcone
