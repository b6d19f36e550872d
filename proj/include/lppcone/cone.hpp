#pragma once

#include <string>
#include <vector>

#include "lppcone/poset.hpp"
#include "lppcone/rational.hpp"

namespace lppcone {

/// One bounding half-space normal of a maximal cone: either an axis vector
/// delta_v or a path difference pi - pi'.
struct Normal {
    enum class Kind { Axis, PathDifference };
    Kind kind = Kind::Axis;
    int vertex = -1;      // Axis: the vertex v
    int other_path = -1;  // PathDifference: index of pi' in the path list
    std::vector<int> coeffs;

    std::vector<Rat> rat_coeffs() const;
};

/// The full (possibly redundant) H-description of C(pi): one axis normal
/// per vertex followed by one difference normal per competing path.
struct InequalitySystem {
    int path_index = -1;
    std::vector<Normal> normals;

    std::vector<std::vector<Rat>> rat_rows() const;
};

enum class FacetTag { Necessary, Redundant };

struct ClassifiedNormal {
    Normal normal;
    FacetTag tag = FacetTag::Necessary;
    std::string reason;
};

/// Bipartite graph on the symmetric difference of two paths with edges
/// between incomparable cross pairs; connectivity decides facet necessity.
struct DisorderGraph {
    std::vector<int> left;   // pi \ pi'
    std::vector<int> right;  // pi' \ pi
    std::vector<std::pair<int, int>> edges;
};

/// Bipartite graph on the support difference of two extreme rays with edges
/// between comparable cross pairs; connectivity decides 2-dimensional faces.
/// Vertices shared by both supports are excluded.
struct OrderGraph {
    std::vector<int> left;   // supp(a1) \ supp(a2)
    std::vector<int> right;  // supp(a2) \ supp(a1)
    std::vector<std::pair<int, int>> edges;
};

InequalitySystem inequality_system(const Poset& p, const std::vector<Path>& paths,
                                   int path_index);

/// Extreme rays of C(pi): the antichains meeting pi exactly once, as 0/1
/// vectors in enumeration order.
std::vector<Antichain> extreme_rays(const Poset& p, const Path& pi);
std::vector<Antichain> extreme_rays(const std::vector<Antichain>& all_antichains, const Path& pi);

/// Closed-form extreme-ray count for a lattice path of the m x n grid.
Int count_extreme_rays_grid(int m, int n, const Poset& grid, const Path& pi);

/// Number of nonempty antichains of an a x b block. Checks the identity
/// 1 + J(a,b) = C(a+b, a).
Int antichain_count_block(long a, long b);

/// Vertices v of pi for which some other path contains pi minus v but not v.
std::vector<int> corners(const Poset& p, const std::vector<Path>& paths, int path_index);

DisorderGraph disorder_graph(const Poset& p, const Path& pi, const Path& pi_prime);
bool is_connected(const DisorderGraph& g);

OrderGraph order_graph(const Poset& p, const Antichain& a1, const Antichain& a2);
bool is_connected(const OrderGraph& g);

/// Classifies every normal of the full system as necessary or redundant:
/// off-path axis normals and on-path non-corner axis normals are necessary,
/// corner axis normals are redundant, and a path difference is necessary
/// exactly when its disorder graph is connected.
std::vector<ClassifiedNormal> facets(const Poset& p, const std::vector<Path>& paths,
                                     int path_index);

/// The explicit integer weight vector showing that the difference normal
/// pi - pi' cannot be dropped: pi' becomes the unique longest path and pi
/// trails it by exactly one. Requires a connected disorder graph; all
/// asserted postconditions are checked.
std::vector<Rat> necessity_witness(const Poset& p, const std::vector<Path>& paths,
                                   int path_index, int other_index);

/// Dimension of the perturbation space of w inside C(pi): the intersection
/// of the orthogonal complements of the tight normals of the full system.
/// w is an extreme ray iff the result is 1; a1 + a2 spans a 2-dimensional
/// face iff the result is 2. Throws if w lies outside the cone.
int perturbation_dim(const Poset& p, const std::vector<Path>& paths, int path_index,
                     const std::vector<Rat>& w);

/// True iff a1 and a2 span a 2-dimensional face of C(pi), decided by
/// order-graph connectivity. Both inputs must be extreme rays of C(pi).
bool is_two_dim_face(const Poset& p, const Path& pi, const Antichain& a1, const Antichain& a2);

/// Rank of the span of all path indicator vectors (exploratory).
int path_span_rank(const Poset& p, const std::vector<Path>& paths);

/// Number of loops two grid paths form: divergence segments between
/// consecutive shared vertices. Independent check of disorder-graph
/// connectivity (single loop) on grids.
int grid_loop_count(const Path& pi, const Path& pi_prime);

}  // namespace lppcone
