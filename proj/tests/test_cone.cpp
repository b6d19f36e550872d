#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>

#include "lppcone/cone.hpp"
#include "lppcone/lpp.hpp"
#include "lppcone/simplex.hpp"
#include "test_support.hpp"

using namespace lppcone;
using namespace lppcone::testsupport;

namespace {

int index_of_path(const std::vector<Path>& paths, const Path& pi) {
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (paths[i].mask == pi.mask) return static_cast<int>(i);
    REQUIRE(false);
    return -1;
}

std::vector<Rat> ray_vector(int n, const Antichain& a) {
    std::vector<Rat> vec(n, rat(0));
    for (int v : a.members) vec[v] = 1;
    return vec;
}

}  // namespace

TEST_CASE("inequality system sizes") {
    Poset g22 = Poset::grid(2, 2);
    auto paths22 = enumerate_paths(g22);
    InequalitySystem sys = inequality_system(g22, paths22, 0);
    CHECK(sys.normals.size() == 5);  // 4 axis + 1 difference

    Poset g23 = Poset::grid(2, 3);
    CHECK(inequality_system(g23, enumerate_paths(g23), 0).normals.size() == 8);

    Poset g33 = Poset::grid(3, 3);
    CHECK(inequality_system(g33, enumerate_paths(g33), 0).normals.size() == 14);
}

TEST_CASE("extreme rays by antichain filtering") {
    Poset g22 = Poset::grid(2, 2);
    Path up = path_by_labels(g22, {"(1,1)", "(1,2)", "(2,2)"});
    auto rays = extreme_rays(g22, up);
    REQUIRE(rays.size() == 4);
    std::vector<std::vector<std::string>> expected = {
        {"(1,1)"}, {"(1,2)"}, {"(1,2)", "(2,1)"}, {"(2,2)"}};
    std::vector<std::vector<std::string>> got;
    for (const auto& a : rays) {
        std::vector<std::string> labels;
        for (int v : a.members) labels.push_back(g22.label(v));
        got.push_back(labels);
    }
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);

    Poset g23 = Poset::grid(2, 3);
    Path top = path_by_labels(g23, {"(1,1)", "(1,2)", "(1,3)", "(2,3)"});
    CHECK(extreme_rays(g23, top).size() == 7);

    Poset chain3 = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    Path only = path_by_labels(chain3, {"a", "b", "c"});
    CHECK(extreme_rays(chain3, only).size() == 3);
}

TEST_CASE("grid extreme ray count formula") {
    Poset g22 = Poset::grid(2, 2);
    for (const Path& pi : enumerate_paths(g22))
        CHECK(count_extreme_rays_grid(2, 2, g22, pi) == 4);

    Poset g23 = Poset::grid(2, 3);
    Path top = path_by_labels(g23, {"(1,1)", "(1,2)", "(1,3)", "(2,3)"});
    CHECK(count_extreme_rays_grid(2, 3, g23, top) == 7);
    Path bent = path_by_labels(g23, {"(1,1)", "(1,2)", "(2,2)", "(2,3)"});
    CHECK(count_extreme_rays_grid(2, 3, g23, bent) == 6);

    // Formula against enumeration on small grids.
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; m + n <= 6; ++n) {
            Poset g = Poset::grid(m, n);
            for (const Path& pi : enumerate_paths(g))
                CHECK(count_extreme_rays_grid(m, n, g, pi) ==
                      Int(extreme_rays(g, pi).size()));
        }
}

TEST_CASE("block antichain counts") {
    CHECK(antichain_count_block(2, 2) == 5);
    CHECK(antichain_count_block(1, 1) == 1);
    CHECK(antichain_count_block(0, 3) == 0);
    CHECK(Int(1) + antichain_count_block(2, 2) == binomial(4, 2));
    for (long a = 0; a <= 6; ++a)
        for (long b = 0; b <= 6; ++b) antichain_count_block(a, b);  // identity asserted inside
}

TEST_CASE("corners") {
    Poset g22 = Poset::grid(2, 2);
    auto paths22 = enumerate_paths(g22);
    Path up = path_by_labels(g22, {"(1,1)", "(1,2)", "(2,2)"});
    CHECK(corners(g22, paths22, index_of_path(paths22, up)) ==
          std::vector<int>{g22.vertex("(1,2)")});

    Poset chain3 = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(corners(chain3, enumerate_paths(chain3), 0).empty());

    Poset g33 = Poset::grid(3, 3);
    auto paths33 = enumerate_paths(g33);
    Path stair = path_by_labels(g33, {"(1,1)", "(1,2)", "(2,2)", "(2,3)", "(3,3)"});
    std::vector<int> expected = {g33.vertex("(1,2)"), g33.vertex("(2,2)"), g33.vertex("(2,3)")};
    std::sort(expected.begin(), expected.end());
    auto got = corners(g33, paths33, index_of_path(paths33, stair));
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
}

TEST_CASE("disorder graphs") {
    Poset g22 = Poset::grid(2, 2);
    Path up22 = path_by_labels(g22, {"(1,1)", "(1,2)", "(2,2)"});
    Path right22 = path_by_labels(g22, {"(1,1)", "(2,1)", "(2,2)"});
    DisorderGraph d = disorder_graph(g22, up22, right22);
    CHECK(d.left == std::vector<int>{g22.vertex("(1,2)")});
    CHECK(d.right == std::vector<int>{g22.vertex("(2,1)")});
    CHECK(d.edges.size() == 1);
    CHECK(is_connected(d));
    CHECK_THROWS_AS(disorder_graph(g22, up22, up22), std::invalid_argument);

    Poset g33 = Poset::grid(3, 3);
    Path up33 = path_by_labels(g33, {"(1,1)", "(1,2)", "(1,3)", "(2,3)", "(3,3)"});
    Path right33 = path_by_labels(g33, {"(1,1)", "(2,1)", "(3,1)", "(3,2)", "(3,3)"});
    DisorderGraph extremes = disorder_graph(g33, up33, right33);
    CHECK(extremes.left.size() == 3);
    CHECK(extremes.right.size() == 3);
    CHECK(extremes.edges.size() == 7);
    CHECK(is_connected(extremes));

    Path loop_a = path_by_labels(g33, {"(1,1)", "(1,2)", "(2,2)", "(2,3)", "(3,3)"});
    Path loop_b = path_by_labels(g33, {"(1,1)", "(2,1)", "(2,2)", "(3,2)", "(3,3)"});
    DisorderGraph split = disorder_graph(g33, loop_a, loop_b);
    CHECK(split.edges.size() == 2);
    CHECK_FALSE(is_connected(split));
}

TEST_CASE("disorder graph structure over the instance set") {
    for (const Poset& p : instance_set(5)) {
        auto paths = enumerate_paths(p);
        for (std::size_t i = 0; i < paths.size(); ++i) {
            for (std::size_t j = 0; j < paths.size(); ++j) {
                if (i == j) continue;
                DisorderGraph d = disorder_graph(p, paths[i], paths[j]);
                CHECK_FALSE(d.left.empty());
                CHECK_FALSE(d.right.empty());

                // Minimal elements of the two parts are joined.
                std::vector<int> lmin = p.minimal_elements(d.left);
                std::vector<int> rmin = p.minimal_elements(d.right);
                REQUIRE(lmin.size() == 1);
                REQUIRE(rmin.size() == 1);
                CHECK(p.incomparable(lmin[0], rmin[0]));

                // Neighbor sets are nonempty intervals on the opposite path,
                // monotone along the path order.
                std::map<int, int> rpos;
                for (std::size_t k = 0; k < paths[j].vertices.size(); ++k)
                    rpos[paths[j].vertices[k]] = static_cast<int>(k);
                std::vector<int> left_sorted;
                for (int v : paths[i].vertices)
                    if (!paths[j].contains(v)) left_sorted.push_back(v);
                int prev_min = -1, prev_max = -1;
                for (int u : left_sorted) {
                    std::vector<int> neighbor_positions;
                    for (int w : d.right)
                        if (p.incomparable(u, w)) neighbor_positions.push_back(rpos[w]);
                    std::sort(neighbor_positions.begin(), neighbor_positions.end());
                    REQUIRE_FALSE(neighbor_positions.empty());
                    // Contiguous within the opposite difference.
                    std::vector<int> between;
                    for (int w : d.right)
                        if (rpos[w] >= neighbor_positions.front() &&
                            rpos[w] <= neighbor_positions.back())
                            between.push_back(rpos[w]);
                    std::sort(between.begin(), between.end());
                    CHECK(between == neighbor_positions);
                    CHECK(neighbor_positions.front() >= prev_min);
                    CHECK(neighbor_positions.back() >= prev_max);
                    prev_min = neighbor_positions.front();
                    prev_max = neighbor_positions.back();
                }
            }
        }
    }
}

TEST_CASE("grid loop count matches disorder connectivity") {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
        Poset g = Poset::grid(m, n);
        auto paths = enumerate_paths(g);
        for (std::size_t i = 0; i < paths.size(); ++i)
            for (std::size_t j = 0; j < paths.size(); ++j) {
                if (i == j) continue;
                int loops = grid_loop_count(paths[i], paths[j]);
                CHECK(loops >= 1);
                CHECK(is_connected(disorder_graph(g, paths[i], paths[j])) == (loops == 1));
            }
    }
}

TEST_CASE("facet classification") {
    Poset g22 = Poset::grid(2, 2);
    auto paths22 = enumerate_paths(g22);
    Path up = path_by_labels(g22, {"(1,1)", "(1,2)", "(2,2)"});
    auto classified = facets(g22, paths22, index_of_path(paths22, up));
    int necessary = 0;
    for (const auto& c : classified)
        if (c.tag == FacetTag::Necessary) ++necessary;
    CHECK(necessary == 4);
    for (const auto& c : classified) {
        if (c.normal.kind == Normal::Kind::Axis && c.normal.vertex == g22.vertex("(1,2)"))
            CHECK(c.tag == FacetTag::Redundant);
        if (c.normal.kind == Normal::Kind::PathDifference) CHECK(c.tag == FacetTag::Necessary);
    }

    Poset chain3 = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    auto chain_facets = facets(chain3, enumerate_paths(chain3), 0);
    CHECK(chain_facets.size() == 3);
    for (const auto& c : chain_facets) CHECK(c.tag == FacetTag::Necessary);
}

TEST_CASE("facet tags agree with the LP oracle") {
    for (const Poset& p : instance_set(5)) {
        auto paths = enumerate_paths(p);
        for (std::size_t i = 0; i < paths.size(); ++i) {
            auto rows = inequality_system(p, paths, static_cast<int>(i)).rat_rows();
            auto classified = facets(p, paths, static_cast<int>(i));
            for (std::size_t k = 0; k < classified.size(); ++k)
                CHECK((classified[k].tag == FacetTag::Redundant) == is_redundant(rows, k));
        }
    }
}

TEST_CASE("necessity witness") {
    Poset g22 = Poset::grid(2, 2);
    auto paths22 = enumerate_paths(g22);
    Path up = path_by_labels(g22, {"(1,1)", "(1,2)", "(2,2)"});
    Path right = path_by_labels(g22, {"(1,1)", "(2,1)", "(2,2)"});
    int iu = index_of_path(paths22, up), ir = index_of_path(paths22, right);
    std::vector<Rat> w = necessity_witness(g22, paths22, iu, ir);
    CHECK(w[g22.vertex("(1,2)")] == 0);
    for (int v : right.vertices) CHECK(w[v] == 1);
    CHECK(path_length(w, right) == 3);
    CHECK(path_length(w, up) == 2);

    Poset g33 = Poset::grid(3, 3);
    auto paths33 = enumerate_paths(g33);
    Path up33 = path_by_labels(g33, {"(1,1)", "(1,2)", "(1,3)", "(2,3)", "(3,3)"});
    Path right33 = path_by_labels(g33, {"(1,1)", "(2,1)", "(3,1)", "(3,2)", "(3,3)"});
    std::vector<Rat> w33 = necessity_witness(g33, paths33, index_of_path(paths33, up33),
                                             index_of_path(paths33, right33));
    CHECK(w33[g33.vertex("(1,2)")] == 1);
    CHECK(w33[g33.vertex("(1,3)")] == 1);
    CHECK(w33[g33.vertex("(2,3)")] == 0);
    CHECK(path_length(w33, right33) == 5);
    CHECK(path_length(w33, up33) == 4);

    CHECK_THROWS_AS(
        necessity_witness(g33, paths33,
                          index_of_path(paths33, path_by_labels(g33, {"(1,1)", "(1,2)", "(2,2)",
                                                                      "(2,3)", "(3,3)"})),
                          index_of_path(paths33, path_by_labels(g33, {"(1,1)", "(2,1)", "(2,2)",
                                                                      "(3,2)", "(3,3)"}))),
        std::invalid_argument);
}

TEST_CASE("necessity witness separates exactly one inequality") {
    for (const Poset& p : instance_set(4)) {
        auto paths = enumerate_paths(p);
        for (std::size_t i = 0; i < paths.size(); ++i) {
            for (std::size_t j = 0; j < paths.size(); ++j) {
                if (i == j) continue;
                if (!is_connected(disorder_graph(p, paths[i], paths[j]))) continue;
                std::vector<Rat> w =
                    necessity_witness(p, paths, static_cast<int>(i), static_cast<int>(j));
                // Gap of exactly one, and w satisfies every inequality of the
                // system except the targeted difference.
                CHECK(path_length(w, paths[j]) - path_length(w, paths[i]) == 1);
                auto sys = inequality_system(p, paths, static_cast<int>(i));
                for (const Normal& normal : sys.normals) {
                    Rat dot = 0;
                    for (int v = 0; v < p.size(); ++v)
                        if (normal.coeffs[v]) dot += Rat(normal.coeffs[v]) * w[v];
                    if (normal.kind == Normal::Kind::PathDifference &&
                        normal.other_path == static_cast<int>(j))
                        CHECK(dot < 0);
                    else
                        CHECK(dot >= 0);
                }
            }
        }
    }
}

TEST_CASE("order graphs and two-dimensional faces") {
    Poset g22 = Poset::grid(2, 2);
    Path up22 = path_by_labels(g22, {"(1,1)", "(1,2)", "(2,2)"});
    Antichain bottom = antichain_by_labels(g22, {"(1,1)"});
    Antichain top = antichain_by_labels(g22, {"(2,2)"});
    CHECK(is_two_dim_face(g22, up22, bottom, top));

    Poset g23 = Poset::grid(2, 3);
    Path top23 = path_by_labels(g23, {"(1,1)", "(1,2)", "(1,3)", "(2,3)"});
    Antichain a1 = antichain_by_labels(g23, {"(1,2)", "(2,1)"});
    Antichain a2 = antichain_by_labels(g23, {"(1,3)", "(2,1)"});
    CHECK(is_two_dim_face(g23, top23, a1, a2));

    Antichain b1 = antichain_by_labels(g23, {"(1,2)"});
    Antichain b2 = antichain_by_labels(g23, {"(1,3)", "(2,1)"});
    CHECK_FALSE(is_two_dim_face(g23, top23, b1, b2));

    // Not extreme rays of this cone: zero intersection with the path.
    Antichain off = antichain_by_labels(g23, {"(2,1)"});
    CHECK_THROWS_AS(is_two_dim_face(g23, top23, off, a1), std::invalid_argument);
    CHECK_THROWS_AS(is_two_dim_face(g23, top23, a1, a1), std::invalid_argument);
}

TEST_CASE("perturbation dimension") {
    Poset g22 = Poset::grid(2, 2);
    auto paths22 = enumerate_paths(g22);
    Path up = path_by_labels(g22, {"(1,1)", "(1,2)", "(2,2)"});
    int iu = index_of_path(paths22, up);

    std::vector<Rat> ray(4, rat(0));
    ray[g22.vertex("(1,1)")] = 1;
    CHECK(perturbation_dim(g22, paths22, iu, ray) == 1);

    // Strictly interior: positive entries, up-path strictly longest.
    std::vector<Rat> interior = weights_by_label(
        g22, {{"(1,1)", rat(3)}, {"(2,1)", rat(1)}, {"(1,2)", rat(2)}, {"(2,2)", rat(3)}});
    CHECK(perturbation_dim(g22, paths22, iu, interior) == 4);

    Poset g23 = Poset::grid(2, 3);
    auto paths23 = enumerate_paths(g23);
    Path top23 = path_by_labels(g23, {"(1,1)", "(1,2)", "(1,3)", "(2,3)"});
    std::vector<Rat> sum(6, rat(0));
    sum[g23.vertex("(1,2)")] += 1;
    sum[g23.vertex("(1,3)")] += 1;
    sum[g23.vertex("(2,1)")] += 1;
    CHECK(perturbation_dim(g23, paths23, index_of_path(paths23, top23), sum) == 3);

    std::vector<Rat> outside(4, rat(0));
    outside[g22.vertex("(2,1)")] = 1;
    CHECK_THROWS_AS(perturbation_dim(g22, paths22, iu, outside), std::invalid_argument);
}

TEST_CASE("rays have perturbation dimension one and full ray sets span") {
    for (const Poset& p : instance_set(4)) {
        auto paths = enumerate_paths(p);
        for (std::size_t i = 0; i < paths.size(); ++i) {
            auto rays = extreme_rays(p, paths[i]);
            CHECK(rays.size() >= static_cast<std::size_t>(p.size()));
            for (const Antichain& a : rays)
                CHECK(perturbation_dim(p, paths, static_cast<int>(i),
                                       ray_vector(p.size(), a)) == 1);
        }
    }
}

TEST_CASE("order graph connectivity matches the perturbation rank") {
    for (const Poset& p : instance_set(3)) {
        auto paths = enumerate_paths(p);
        for (std::size_t i = 0; i < paths.size(); ++i) {
            auto rays = extreme_rays(p, paths[i]);
            for (std::size_t a = 0; a < rays.size(); ++a)
                for (std::size_t b = a + 1; b < rays.size(); ++b) {
                    std::vector<Rat> sum = ray_vector(p.size(), rays[a]);
                    for (int v : rays[b].members) sum[v] += 1;
                    int dim = perturbation_dim(p, paths, static_cast<int>(i), sum);
                    CHECK(is_two_dim_face(p, paths[i], rays[a], rays[b]) == (dim == 2));
                }
        }
    }
}

TEST_CASE("path span rank on grids") {
    // Exploratory: the span of all path vectors of the m x n grid.
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
        Poset g = Poset::grid(m, n);
        CHECK(path_span_rank(g, enumerate_paths(g)) == (m - 1) * (n - 1) + 1);
    }
}
