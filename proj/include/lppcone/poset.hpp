#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lppcone/guards.hpp"
#include "lppcone/rational.hpp"

namespace lppcone {

/// A maximal chain, kept both as the ordered vertex list and as a bitmask
/// over vertex indices. Consecutive vertices are cover pairs; the first
/// vertex is minimal in P and the last is maximal.
struct Path {
    std::vector<int> vertices;
    std::uint64_t mask = 0;

    bool contains(int v) const { return (mask >> v) & 1u; }
    std::vector<int> indicator(int n) const;
};

/// A pairwise-incomparable vertex set; doubles as a 0/1 extreme-ray vector.
struct Antichain {
    std::vector<int> members;  // ascending
    std::uint64_t mask = 0;

    bool contains(int v) const { return (mask >> v) & 1u; }
    std::vector<int> indicator(int n) const;
};

/// An order-preserving bijection P -> {1..|P|}, stored as the fill order:
/// order[k] is the vertex at position k+1.
struct LinearExtension {
    std::vector<int> order;
};

enum class OrderRelation { Equal, Less, Greater, Incomparable };

/// A finite connected poset over at most 64 vertices. Immutable after
/// construction; order queries run off dense reachability masks.
class Poset {
  public:
    /// The componentwise-ordered box [1,m] x [1,n]; vertex labels "(i,j)".
    static Poset grid(int m, int n);

    /// Cells of a Young diagram with the given weakly decreasing shape,
    /// ordered componentwise.
    static Poset young(const std::vector<int>& shape);

    /// Builds from labelled relation pairs (lower, upper). Pairs implied by
    /// transitivity are dropped with a warning; cycles and disconnected
    /// Hasse diagrams are rejected.
    static Poset from_covers(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& relations,
                             std::vector<std::string>* warnings = nullptr,
                             const Guards& guards = Guards{});

    int size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    int vertex(const std::string& label) const;  // throws on unknown label

    bool leq(int u, int v) const { return (up_[u] >> v) & 1u; }
    bool less(int u, int v) const { return u != v && leq(u, v); }
    OrderRelation compare(int u, int v) const;
    bool incomparable(int u, int v) const { return !leq(u, v) && !leq(v, u); }

    bool is_cover(int u, int v) const;  // u is covered by v
    const std::vector<std::pair<int, int>>& cover_pairs() const { return cover_pairs_; }
    const std::vector<int>& upper_covers(int v) const { return upper_covers_[v]; }
    const std::vector<int>& lower_covers(int v) const { return lower_covers_[v]; }
    const std::vector<int>& minimal_vertices() const { return minimal_; }
    const std::vector<int>& maximal_vertices() const { return maximal_; }

    std::uint64_t up_mask(int v) const { return up_[v]; }      // {w : v <= w}
    std::uint64_t down_mask(int v) const { return down_[v]; }  // {u : u <= v}
    std::uint64_t full_mask() const { return full_; }

    std::vector<int> lower_set(std::span<const int> a) const;
    std::vector<int> upper_set(std::span<const int> a) const;
    std::vector<int> minimal_elements(std::span<const int> s) const;
    std::vector<int> maximal_elements(std::span<const int> s) const;
    std::uint64_t minimal_elements_mask(std::uint64_t s) const;
    std::uint64_t maximal_elements_mask(std::uint64_t s) const;

    // Grid/Young builds carry 1-based cell coordinates.
    bool has_coords() const { return !coords_.empty(); }
    std::pair<int, int> coords(int v) const { return coords_[v]; }

  private:
    Poset() = default;
    static Poset build(std::vector<std::string> labels,
                       const std::vector<std::pair<int, int>>& relations,
                       std::vector<std::string>* warnings, const Guards& guards);

    int n_ = 0;
    std::uint64_t full_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> up_, down_;
    std::vector<std::vector<int>> upper_covers_, lower_covers_;
    std::vector<std::pair<int, int>> cover_pairs_;
    std::vector<int> minimal_, maximal_;
    std::vector<std::pair<int, int>> coords_;
};

/// Minimal elements of the upper set of A, as an antichain.
Antichain boundary_min(const Poset& p, std::span<const int> a);
/// Maximal elements of the lower set of A, as an antichain.
Antichain boundary_max(const Poset& p, std::span<const int> a);

bool is_antichain(const Poset& p, std::span<const int> members);
bool is_path(const Poset& p, std::span<const int> vertices);

Antichain make_antichain(const Poset& p, std::vector<int> members);
Path make_path(const Poset& p, std::vector<int> vertices);

/// All maximal chains, lexicographic by vertex index sequence.
std::vector<Path> enumerate_paths(const Poset& p);

/// All nonempty antichains, lexicographic by ascending member lists.
std::vector<Antichain> enumerate_antichains(const Poset& p);

/// All linear extensions, lexicographic by fill order. Guarded by both
/// max_extension_poset and max_extensions.
std::vector<LinearExtension> enumerate_linear_extensions(const Poset& p,
                                                         const Guards& guards = Guards{});

/// e(P): the number of linear extensions, counted exactly by dynamic
/// programming over the lattice of order ideals.
Int count_linear_extensions(const Poset& p, const Guards& guards = Guards{});

bool is_linear_extension(const Poset& p, const LinearExtension& ext);

}  // namespace lppcone
