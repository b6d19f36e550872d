#include "lppcone/cone.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "lppcone/linalg.hpp"
#include "lppcone/lpp.hpp"

namespace lppcone {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::vector<int> mask_vertices(std::uint64_t m, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (m & bit(v)) out.push_back(v);
    return out;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Rat> Normal::rat_coeffs() const {
    std::vector<Rat> out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = coeffs[i];
    return out;
}

std::vector<std::vector<Rat>> InequalitySystem::rat_rows() const {
    std::vector<std::vector<Rat>> rows;
    rows.reserve(normals.size());
    for (const Normal& n : normals) rows.push_back(n.rat_coeffs());
    return rows;
}

InequalitySystem inequality_system(const Poset& p, const std::vector<Path>& paths,
                                   int path_index) {
    const int n = p.size();
    const Path& pi = paths.at(path_index);
    InequalitySystem sys;
    sys.path_index = path_index;
    for (int v = 0; v < n; ++v) {
        Normal axis;
        axis.kind = Normal::Kind::Axis;
        axis.vertex = v;
        axis.coeffs.assign(n, 0);
        axis.coeffs[v] = 1;
        sys.normals.push_back(std::move(axis));
    }
    for (std::size_t j = 0; j < paths.size(); ++j) {
        if (static_cast<int>(j) == path_index) continue;
        Normal diff;
        diff.kind = Normal::Kind::PathDifference;
        diff.other_path = static_cast<int>(j);
        diff.coeffs.assign(n, 0);
        for (int v : pi.vertices) diff.coeffs[v] += 1;
        for (int v : paths[j].vertices) diff.coeffs[v] -= 1;
        sys.normals.push_back(std::move(diff));
    }
    return sys;
}

std::vector<Antichain> extreme_rays(const std::vector<Antichain>& all_antichains,
                                    const Path& pi) {
    std::vector<Antichain> rays;
    for (const Antichain& a : all_antichains)
        if (std::popcount(a.mask & pi.mask) == 1) rays.push_back(a);
    return rays;
}

std::vector<Antichain> extreme_rays(const Poset& p, const Path& pi) {
    return extreme_rays(enumerate_antichains(p), pi);
}

Int count_extreme_rays_grid(int m, int n, const Poset& grid, const Path& pi) {
    if (!grid.has_coords()) throw std::invalid_argument("poset carries no grid coordinates");
    if (!is_path(grid, pi.vertices)) throw std::invalid_argument("path not in grid");
    Int total = 0;
    for (int v : pi.vertices) {
        auto [u, w] = grid.coords(v);
        if (u < 1 || u > m || w < 1 || w > n) throw std::invalid_argument("path not in grid");
        total += binomial(n + u - w - 1, u - 1) * binomial(m - u + w - 1, w - 1);
    }
    return total;
}

Int antichain_count_block(long a, long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("block dimensions must be nonnegative");
    Int total = 0;
    for (long k = 1; k <= std::min(a, b); ++k) total += binomial(a, k) * binomial(b, k);
    if (Int(1) + total != binomial(a + b, a))
        throw std::logic_error("antichain block count fails Vandermonde identity");
    return total;
}

std::vector<int> corners(const Poset&, const std::vector<Path>& paths, int path_index) {
    const Path& pi = paths.at(path_index);
    std::vector<int> out;
    for (int v : pi.vertices) {
        std::uint64_t rest = pi.mask & ~bit(v);
        for (const Path& other : paths) {
            if ((other.mask & rest) == rest && !(other.mask & bit(v))) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

DisorderGraph disorder_graph(const Poset& p, const Path& pi, const Path& pi_prime) {
    if (pi.mask == pi_prime.mask) throw std::invalid_argument("disorder graph needs two distinct paths");
    DisorderGraph g;
    g.left = mask_vertices(pi.mask & ~pi_prime.mask, p.size());
    g.right = mask_vertices(pi_prime.mask & ~pi.mask, p.size());
    for (int u : g.left)
        for (int w : g.right)
            if (p.incomparable(u, w)) g.edges.emplace_back(u, w);
    return g;
}

bool is_connected(const DisorderGraph& g) {
    // Both parts are nonempty for genuine path differences; reject anything
    // else rather than guessing a convention.
    if (g.left.empty() || g.right.empty())
        throw std::logic_error("disorder graph with an empty part");
    Dsu dsu(64);
    for (auto [u, w] : g.edges) dsu.merge(u, w);
    int root = dsu.find(g.left.front());
    for (int v : g.left)
        if (dsu.find(v) != root) return false;
    for (int v : g.right)
        if (dsu.find(v) != root) return false;
    return true;
}

OrderGraph order_graph(const Poset& p, const Antichain& a1, const Antichain& a2) {
    if (a1.mask == a2.mask) throw std::invalid_argument("order graph needs two distinct rays");
    OrderGraph g;
    g.left = mask_vertices(a1.mask & ~a2.mask, p.size());
    g.right = mask_vertices(a2.mask & ~a1.mask, p.size());
    for (int u : g.left)
        for (int w : g.right)
            if (!p.incomparable(u, w)) g.edges.emplace_back(u, w);
    return g;
}

bool is_connected(const OrderGraph& g) {
    // With one empty part the graph is connected exactly when the other
    // part is a single vertex.
    if (g.left.empty() && g.right.empty())
        throw std::logic_error("order graph of identical supports");
    if (g.left.empty()) return g.right.size() == 1;
    if (g.right.empty()) return g.left.size() == 1;
    Dsu dsu(64);
    for (auto [u, w] : g.edges) dsu.merge(u, w);
    int root = dsu.find(g.left.front());
    for (int v : g.left)
        if (dsu.find(v) != root) return false;
    for (int v : g.right)
        if (dsu.find(v) != root) return false;
    return true;
}

std::vector<ClassifiedNormal> facets(const Poset& p, const std::vector<Path>& paths,
                                     int path_index) {
    const Path& pi = paths.at(path_index);
    std::vector<int> corner_list = corners(p, paths, path_index);
    std::uint64_t corner_mask = 0;
    for (int v : corner_list) corner_mask |= bit(v);

    InequalitySystem sys = inequality_system(p, paths, path_index);
    std::vector<ClassifiedNormal> out;
    out.reserve(sys.normals.size());
    for (Normal& normal : sys.normals) {
        ClassifiedNormal c;
        if (normal.kind == Normal::Kind::Axis) {
            int v = normal.vertex;
            if (!pi.contains(v)) {
                c.tag = FacetTag::Necessary;
                c.reason = "off-path axis";
            } else if (corner_mask & bit(v)) {
                c.tag = FacetTag::Redundant;
                c.reason = "corner of the path";
            } else {
                c.tag = FacetTag::Necessary;
                c.reason = "on-path non-corner axis";
            }
        } else {
            bool connected = is_connected(disorder_graph(p, pi, paths[normal.other_path]));
            c.tag = connected ? FacetTag::Necessary : FacetTag::Redundant;
            c.reason = connected ? "disorder graph connected" : "disorder graph disconnected";
        }
        c.normal = std::move(normal);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Rat> necessity_witness(const Poset& p, const std::vector<Path>& paths,
                                   int path_index, int other_index) {
    const Path& pi = paths.at(path_index);
    const Path& pp = paths.at(other_index);
    if (!is_connected(disorder_graph(p, pi, pp)))
        throw std::invalid_argument("disorder graph is disconnected");

    const int n = p.size();
    std::uint64_t only_pi = pi.mask & ~pp.mask;
    std::uint64_t only_pp = pp.mask & ~pi.mask;

    // pi \ pi' listed in path order; it is a saturated chain u_0 < ... < u_l
    // when the disorder graph is connected.
    std::vector<int> u;
    for (int v : pi.vertices)
        if (only_pi & bit(v)) u.push_back(v);

    auto above_count = [&](int v) {
        return std::popcount(p.up_mask(v) & only_pp & ~bit(v));
    };

    std::vector<long> w(n, 0);
    for (int v : pp.vertices) w[v] = 1;
    const long qsize = std::popcount(only_pp);
    w[u[0]] = qsize - above_count(u[0]) - 1;
    for (std::size_t i = 1; i < u.size(); ++i)
        w[u[i]] = above_count(u[i - 1]) - above_count(u[i]);

    std::vector<Rat> witness(n);
    for (int v = 0; v < n; ++v) {
        if (w[v] < 0) throw std::logic_error("necessity witness has a negative entry");
        witness[v] = rat(w[v]);
    }

    // pi' must be the unique longest path and beat pi by exactly one.
    Rat len_pp = path_length(witness, pp);
    Rat len_pi = path_length(witness, pi);
    if (len_pp - len_pi != 1) throw std::logic_error("necessity witness gap is not one");
    for (const Path& other : paths) {
        if (other.mask == pp.mask) continue;
        if (path_length(witness, other) >= len_pp)
            throw std::logic_error("necessity witness does not make the target path unique");
    }
    return witness;
}

int perturbation_dim(const Poset& p, const std::vector<Path>& paths, int path_index,
                     const std::vector<Rat>& w) {
    const int n = p.size();
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weight vector dimension mismatch");
    InequalitySystem sys = inequality_system(p, paths, path_index);
    RatMatrix tight;
    for (const Normal& normal : sys.normals) {
        Rat dot = 0;
        for (int v = 0; v < n; ++v)
            if (normal.coeffs[v] != 0) dot += Rat(normal.coeffs[v]) * w[v];
        if (dot < 0) throw std::invalid_argument("weight vector lies outside the cone");
        if (dot == 0) tight.push_back(normal.rat_coeffs());
    }
    return n - rank(tight);
}

bool is_two_dim_face(const Poset& p, const Path& pi, const Antichain& a1, const Antichain& a2) {
    auto check_ray = [&](const Antichain& a) {
        if (!is_antichain(p, a.members) || std::popcount(a.mask & pi.mask) != 1)
            throw std::invalid_argument("input is not an extreme ray of the cone");
    };
    check_ray(a1);
    check_ray(a2);
    if (a1.mask == a2.mask) throw std::invalid_argument("extreme rays must be distinct");
    return is_connected(order_graph(p, a1, a2));
}

int path_span_rank(const Poset& p, const std::vector<Path>& paths) {
    RatMatrix rows;
    rows.reserve(paths.size());
    for (const Path& pi : paths) {
        std::vector<Rat> row(p.size(), Rat(0));
        for (int v : pi.vertices) row[v] = 1;
        rows.push_back(std::move(row));
    }
    return rank(rows);
}

int grid_loop_count(const Path& pi, const Path& pi_prime) {
    std::uint64_t common = pi.mask & pi_prime.mask;
    int loops = 0;
    int last_common_pos = -1;
    for (std::size_t i = 0; i < pi.vertices.size(); ++i) {
        if (!(common & bit(pi.vertices[i]))) continue;
        if (last_common_pos >= 0 && static_cast<int>(i) - last_common_pos > 1) ++loops;
        last_common_pos = static_cast<int>(i);
    }
    return loops;
}

}  // namespace lppcone
