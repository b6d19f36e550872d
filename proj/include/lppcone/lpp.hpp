#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lppcone/poset.hpp"

namespace lppcone {

/// Thrown when an operation needs distinct passage times but the weight
/// vector produced a tie. Callers in sampling loops resample.
struct TiedPassageTimes : std::runtime_error {
    TiedPassageTimes() : std::runtime_error("tied passage times") {}
};

template <class T>
void check_nonnegative(const std::vector<T>& w) {
    for (const T& x : w)
        if (x < T(0)) throw std::invalid_argument("negative weight entry");
}

template <class T>
void check_dimension(const Poset& p, const std::vector<T>& w) {
    if (static_cast<int>(w.size()) != p.size())
        throw std::invalid_argument("weight vector dimension mismatch");
}

/// <w, pi>: the total weight collected along the path.
template <class T>
T path_length(const std::vector<T>& w, const Path& path) {
    T total(0);
    for (int v : path.vertices) {
        if (v < 0 || v >= static_cast<int>(w.size()))
            throw std::invalid_argument("weight vector dimension mismatch");
        total += w[v];
    }
    return total;
}

/// G(v) = w(v) + max over lower covers of G, with G = w at minimal vertices.
template <class T>
std::vector<T> passage_times(const Poset& p, const std::vector<T>& w) {
    check_dimension(p, w);
    check_nonnegative(w);
    const int n = p.size();
    std::vector<T> g(n, T(0));
    std::vector<char> done(n, 0);
    auto eval = [&](auto&& self, int v) -> const T& {
        if (!done[v]) {
            T best(0);
            bool first = true;
            for (int u : p.lower_covers(v)) {
                const T& gu = self(self, u);
                if (first || gu > best) best = gu;
                first = false;
            }
            g[v] = w[v] + best;
            done[v] = 1;
        }
        return g[v];
    };
    for (int v = 0; v < n; ++v) eval(eval, v);
    return g;
}

template <class T>
T passage_time(const Poset& p, const std::vector<T>& w) {
    std::vector<T> g = passage_times(p, w);
    T best = g[0];
    for (const T& x : g)
        if (x > best) best = x;
    return best;
}

/// Inverts the passage-time recursion; rejects vectors that are not
/// monotone along the order (the recovered weight would be negative).
template <class T>
std::vector<T> weights_from_passage_times(const Poset& p, const std::vector<T>& g) {
    check_dimension(p, g);
    const int n = p.size();
    std::vector<T> w(n, T(0));
    for (int v = 0; v < n; ++v) {
        T best(0);
        bool first = true;
        for (int u : p.lower_covers(v)) {
            if (first || g[u] > best) best = g[u];
            first = false;
        }
        w[v] = first ? g[v] : g[v] - best;
        if (w[v] < T(0))
            throw std::invalid_argument("passage times not monotone along the order");
    }
    return w;
}

struct ArgmaxPath {
    Path path;
    bool tie = false;  // set iff the top choice or any backtrack step tied
};

/// Recovers a longest path by backtracking the recursion from a maximizing
/// maximal vertex. Ties break to the lowest vertex index and set the flag;
/// with no ties the returned path is the unique maximizer.
template <class T>
ArgmaxPath argmax_path(const Poset& p, const std::vector<T>& w) {
    std::vector<T> g = passage_times(p, w);
    ArgmaxPath result;

    int top = -1;
    for (int v : p.maximal_vertices()) {
        if (top == -1 || g[v] > g[top]) {
            top = v;
        } else if (g[v] == g[top]) {
            result.tie = true;
        }
    }

    std::vector<int> reversed;
    int v = top;
    reversed.push_back(v);
    while (!p.lower_covers(v).empty()) {
        int best = -1;
        for (int u : p.lower_covers(v)) {
            if (best == -1 || g[u] > g[best]) {
                best = u;
            } else if (g[u] == g[best]) {
                result.tie = true;
            }
        }
        v = best;
        reversed.push_back(v);
    }
    std::vector<int> vertices(reversed.rbegin(), reversed.rend());
    result.path = make_path(p, std::move(vertices));
    return result;
}

/// Sorts vertices by ascending passage time into a fill order. With
/// nonnegative weights the result is a linear extension; ties are rejected.
template <class T>
LinearExtension extension_from_passage_times(const Poset& p, const std::vector<T>& g) {
    const int n = p.size();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g[a] < g[b]; });
    for (int k = 0; k + 1 < n; ++k)
        if (g[order[k]] == g[order[k + 1]]) throw TiedPassageTimes();
    LinearExtension ext{std::move(order)};
    if (!is_linear_extension(p, ext))
        throw std::invalid_argument("passage times do not respect the order");
    return ext;
}

}  // namespace lppcone
