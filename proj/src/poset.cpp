#include "lppcone/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace lppcone {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::size_t env_size(const char* name, std::size_t fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    return static_cast<std::size_t>(std::strtoull(s, nullptr, 10));
}

// Union-find over vertex indices.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Guards Guards::from_env() {
    Guards g;
    g.max_poset_size = static_cast<int>(env_size("LPPCONE_MAX_POSET", g.max_poset_size));
    g.max_extension_poset =
        static_cast<int>(env_size("LPPCONE_MAX_EXTENSION_POSET", g.max_extension_poset));
    g.max_extensions = env_size("LPPCONE_MAX_EXTENSIONS", g.max_extensions);
    g.max_ideals = env_size("LPPCONE_MAX_IDEALS", g.max_ideals);
    if (g.max_poset_size > 64) g.max_poset_size = 64;
    return g;
}

std::vector<int> Path::indicator(int n) const {
    std::vector<int> ind(n, 0);
    for (int v : vertices) ind[v] = 1;
    return ind;
}

std::vector<int> Antichain::indicator(int n) const {
    std::vector<int> ind(n, 0);
    for (int v : members) ind[v] = 1;
    return ind;
}

Poset Poset::build(std::vector<std::string> labels,
                   const std::vector<std::pair<int, int>>& relations,
                   std::vector<std::string>* warnings, const Guards& guards) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw std::invalid_argument("poset must have at least one vertex");
    const int cap = std::min(guards.max_poset_size, 64);
    if (n > cap)
        throw GuardExceeded("poset size " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));

    Poset p;
    p.n_ = n;
    p.full_ = (n == 64) ? ~std::uint64_t{0} : (bit(n) - 1);
    p.labels_ = std::move(labels);

    std::vector<std::vector<int>> adj(n);
    std::vector<int> indeg(n, 0);
    {
        std::vector<std::uint64_t> seen(n, 0);
        for (auto [u, v] : relations) {
            if (u == v) throw std::invalid_argument("cycle: self-relation at '" + p.labels_[u] + "'");
            if (seen[u] & bit(v)) continue;
            seen[u] |= bit(v);
            adj[u].push_back(v);
            indeg[v]++;
        }
    }

    // Topological order; a leftover vertex means a directed cycle.
    std::vector<int> topo;
    topo.reserve(n);
    {
        std::vector<int> stack, deg = indeg;
        for (int v = n - 1; v >= 0; --v)
            if (deg[v] == 0) stack.push_back(v);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            topo.push_back(v);
            for (int w : adj[v])
                if (--deg[w] == 0) stack.push_back(w);
        }
        if (static_cast<int>(topo.size()) != n)
            throw std::invalid_argument("cycle detected in order relations");
    }

    // Reflexive-transitive closure via reverse topological sweep.
    p.up_.assign(n, 0);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int v = *it;
        std::uint64_t m = bit(v);
        for (int w : adj[v]) m |= p.up_[w];
        p.up_[v] = m;
    }
    p.down_.assign(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (p.up_[v] & bit(w)) p.down_[w] |= bit(v);

    // Covers recomputed from the closure: u is covered by v iff nothing
    // sits strictly between them.
    p.upper_covers_.assign(n, {});
    p.lower_covers_.assign(n, {});
    for (int u = 0; u < n; ++u) {
        std::uint64_t strictly_above = p.up_[u] & ~bit(u);
        for (int v = 0; v < n; ++v) {
            if (!(strictly_above & bit(v))) continue;
            std::uint64_t between = strictly_above & p.down_[v] & ~bit(v);
            if (between == 0) {
                p.upper_covers_[u].push_back(v);
                p.lower_covers_[v].push_back(u);
                p.cover_pairs_.emplace_back(u, v);
            }
        }
    }
    std::sort(p.cover_pairs_.begin(), p.cover_pairs_.end());

    if (warnings) {
        std::vector<std::uint64_t> warned(n, 0);
        for (auto [u, v] : relations) {
            if (p.is_cover(u, v) || (warned[u] & bit(v))) continue;
            warned[u] |= bit(v);
            warnings->push_back("dropped non-cover relation " + p.labels_[u] + " < " +
                                p.labels_[v] + " (implied by transitivity)");
        }
    }

    Dsu dsu(n);
    for (auto [u, v] : p.cover_pairs_) dsu.merge(u, v);
    for (int v = 1; v < n; ++v)
        if (dsu.find(v) != dsu.find(0))
            throw std::invalid_argument("Hasse diagram is disconnected");

    for (int v = 0; v < n; ++v) {
        if (p.lower_covers_[v].empty()) p.minimal_.push_back(v);
        if (p.upper_covers_[v].empty()) p.maximal_.push_back(v);
    }
    return p;
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& relations,
                         std::vector<std::string>* warnings, const Guards& guards) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        if (!index.emplace(labels[i], i).second)
            throw std::invalid_argument("duplicate label '" + labels[i] + "'");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(relations.size());
    for (const auto& [a, b] : relations) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) throw std::invalid_argument("unknown label '" + a + "'");
        if (ib == index.end()) throw std::invalid_argument("unknown label '" + b + "'");
        pairs.emplace_back(ia->second, ib->second);
    }
    return build(std::move(labels), pairs, warnings, guards);
}

Poset Poset::grid(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be positive");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> coords;
    std::vector<std::pair<int, int>> pairs;
    auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
            coords.emplace_back(i, j);
            if (i < m) pairs.emplace_back(idx(i, j), idx(i + 1, j));
            if (j < n) pairs.emplace_back(idx(i, j), idx(i, j + 1));
        }
    Poset p = build(std::move(labels), pairs, nullptr, Guards{});
    p.coords_ = std::move(coords);
    return p;
}

Poset Poset::young(const std::vector<int>& shape) {
    if (shape.empty()) throw std::invalid_argument("Young shape must be nonempty");
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (shape[r] < 1) throw std::invalid_argument("Young shape rows must be positive");
        if (r > 0 && shape[r] > shape[r - 1])
            throw std::invalid_argument("Young shape must be weakly decreasing");
    }
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> coords;
    std::map<std::pair<int, int>, int> idx;
    for (int i = 1; i <= static_cast<int>(shape.size()); ++i)
        for (int j = 1; j <= shape[i - 1]; ++j) {
            idx[{i, j}] = static_cast<int>(labels.size());
            labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
            coords.emplace_back(i, j);
        }
    std::vector<std::pair<int, int>> pairs;
    for (auto [cell, v] : idx) {
        auto [i, j] = cell;
        if (auto it = idx.find({i + 1, j}); it != idx.end()) pairs.emplace_back(v, it->second);
        if (auto it = idx.find({i, j + 1}); it != idx.end()) pairs.emplace_back(v, it->second);
    }
    Poset p = build(std::move(labels), pairs, nullptr, Guards{});
    p.coords_ = std::move(coords);
    return p;
}

int Poset::vertex(const std::string& label) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == label) return v;
    throw std::invalid_argument("unknown label '" + label + "'");
}

OrderRelation Poset::compare(int u, int v) const {
    if (u == v) return OrderRelation::Equal;
    if (leq(u, v)) return OrderRelation::Less;
    if (leq(v, u)) return OrderRelation::Greater;
    return OrderRelation::Incomparable;
}

bool Poset::is_cover(int u, int v) const {
    const auto& ups = upper_covers_[u];
    return std::find(ups.begin(), ups.end(), v) != ups.end();
}

std::vector<int> Poset::lower_set(std::span<const int> a) const {
    std::uint64_t m = 0;
    for (int v : a) m |= down_[v];
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (m & bit(v)) out.push_back(v);
    return out;
}

std::vector<int> Poset::upper_set(std::span<const int> a) const {
    std::uint64_t m = 0;
    for (int v : a) m |= up_[v];
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (m & bit(v)) out.push_back(v);
    return out;
}

std::uint64_t Poset::minimal_elements_mask(std::uint64_t s) const {
    std::uint64_t out = 0;
    for (int v = 0; v < n_; ++v)
        if ((s & bit(v)) && ((down_[v] & ~bit(v)) & s) == 0) out |= bit(v);
    return out;
}

std::uint64_t Poset::maximal_elements_mask(std::uint64_t s) const {
    std::uint64_t out = 0;
    for (int v = 0; v < n_; ++v)
        if ((s & bit(v)) && ((up_[v] & ~bit(v)) & s) == 0) out |= bit(v);
    return out;
}

std::vector<int> Poset::minimal_elements(std::span<const int> s) const {
    std::uint64_t m = 0;
    for (int v : s) m |= bit(v);
    m = minimal_elements_mask(m);
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (m & bit(v)) out.push_back(v);
    return out;
}

std::vector<int> Poset::maximal_elements(std::span<const int> s) const {
    std::uint64_t m = 0;
    for (int v : s) m |= bit(v);
    m = maximal_elements_mask(m);
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (m & bit(v)) out.push_back(v);
    return out;
}

Antichain boundary_min(const Poset& p, std::span<const int> a) {
    return make_antichain(p, p.minimal_elements(std::span<const int>(p.upper_set(a))));
}

Antichain boundary_max(const Poset& p, std::span<const int> a) {
    return make_antichain(p, p.maximal_elements(std::span<const int>(p.lower_set(a))));
}

bool is_antichain(const Poset& p, std::span<const int> members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!p.incomparable(members[i], members[j])) return false;
    return true;
}

bool is_path(const Poset& p, std::span<const int> vertices) {
    if (vertices.empty()) return false;
    if (!p.lower_covers(vertices.front()).empty()) return false;
    if (!p.upper_covers(vertices.back()).empty()) return false;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!p.is_cover(vertices[i], vertices[i + 1])) return false;
    return true;
}

Antichain make_antichain(const Poset& p, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    if (!is_antichain(p, members)) throw std::invalid_argument("vertex set is not an antichain");
    Antichain a;
    for (int v : members) a.mask |= bit(v);
    a.members = std::move(members);
    return a;
}

Path make_path(const Poset& p, std::vector<int> vertices) {
    if (!is_path(p, vertices)) throw std::invalid_argument("vertex list is not a maximal chain");
    Path path;
    for (int v : vertices) path.mask |= bit(v);
    path.vertices = std::move(vertices);
    return path;
}

std::vector<Path> enumerate_paths(const Poset& p) {
    std::vector<Path> out;
    std::vector<int> current;
    std::uint64_t mask = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        current.push_back(v);
        mask |= bit(v);
        if (p.upper_covers(v).empty()) {
            out.push_back(Path{current, mask});
        } else {
            for (int w : p.upper_covers(v)) self(self, w);
        }
        current.pop_back();
        mask &= ~bit(v);
    };
    for (int v : p.minimal_vertices()) dfs(dfs, v);
    return out;
}

std::vector<Antichain> enumerate_antichains(const Poset& p) {
    const int n = p.size();
    std::vector<std::uint64_t> compatible(n);
    for (int v = 0; v < n; ++v) compatible[v] = p.full_mask() & ~(p.up_mask(v) | p.down_mask(v));

    std::vector<Antichain> out;
    std::vector<int> current;
    std::uint64_t mask = 0;
    auto dfs = [&](auto&& self, int start, std::uint64_t allowed) -> void {
        for (int v = start; v < n; ++v) {
            if (!((allowed >> v) & 1u)) continue;
            current.push_back(v);
            mask |= bit(v);
            out.push_back(Antichain{current, mask});
            self(self, v + 1, allowed & compatible[v]);
            current.pop_back();
            mask &= ~bit(v);
        }
    };
    dfs(dfs, 0, p.full_mask());
    return out;
}

std::vector<LinearExtension> enumerate_linear_extensions(const Poset& p, const Guards& guards) {
    const int n = p.size();
    if (n > guards.max_extension_poset)
        throw GuardExceeded("poset size " + std::to_string(n) +
                            " exceeds linear-extension enumeration cap " +
                            std::to_string(guards.max_extension_poset));
    std::vector<LinearExtension> out;
    std::vector<int> order;
    std::uint64_t remaining = p.full_mask();
    auto dfs = [&](auto&& self) -> void {
        if (remaining == 0) {
            if (out.size() >= guards.max_extensions)
                throw GuardExceeded("linear extension count exceeds cap " +
                                    std::to_string(guards.max_extensions));
            out.push_back(LinearExtension{order});
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (!((remaining >> v) & 1u)) continue;
            if ((p.down_mask(v) & ~bit(v)) & remaining) continue;  // not minimal yet
            order.push_back(v);
            remaining &= ~bit(v);
            self(self);
            remaining |= bit(v);
            order.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

Int count_linear_extensions(const Poset& p, const Guards& guards) {
    const int n = p.size();
    std::unordered_map<std::uint64_t, Int> memo;
    // f(S) counts the fill orders of the remaining upper set S; complements
    // of the S visited here are exactly the order ideals of P.
    auto rec = [&](auto&& self, std::uint64_t s) -> const Int& {
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        if (memo.size() >= guards.max_ideals)
            throw GuardExceeded("order ideal count exceeds cap " +
                                std::to_string(guards.max_ideals));
        Int total = 0;
        if (s == 0) {
            total = 1;
        } else {
            for (int v = 0; v < n; ++v) {
                if (!((s >> v) & 1u)) continue;
                if ((p.down_mask(v) & ~bit(v)) & s) continue;
                total += self(self, s & ~bit(v));
            }
        }
        return memo.emplace(s, std::move(total)).first->second;
    };
    return rec(rec, p.full_mask());
}

bool is_linear_extension(const Poset& p, const LinearExtension& ext) {
    const int n = p.size();
    if (static_cast<int>(ext.order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int k = 0; k < n; ++k) {
        int v = ext.order[k];
        if (v < 0 || v >= n || pos[v] != -1) return false;
        pos[v] = k;
    }
    for (auto [u, v] : p.cover_pairs())
        if (pos[u] > pos[v]) return false;
    return true;
}

}  // namespace lppcone
