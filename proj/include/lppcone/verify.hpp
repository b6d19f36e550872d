#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lppcone/cone.hpp"
#include "lppcone/poset.hpp"
#include "lppcone/rational.hpp"
#include "lppcone/rng.hpp"

namespace lppcone {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Rejection-samples a rational point of C(pi): integer entries biased
/// toward the path, scaled by a random denominator, accepted on exact
/// membership.
std::vector<Rat> sample_cone_point(const Poset& p, const std::vector<Path>& paths,
                                   int path_index, SplitMix64& rng);

/// One extreme-ray check per path: every ray has perturbation dimension 1,
/// antichains meeting the path other than once are outside the cone, and
/// sampled cone points lie in the conic hull of the rays.
std::vector<CheckResult> verify_extreme_rays(const Poset& p, int samples_per_path,
                                             std::uint64_t seed, int threads = 1);

/// One check per (path, normal): the classified facet tag against the
/// exact LP redundancy test, plus witness validation for every necessary
/// path difference.
std::vector<CheckResult> verify_facets(const Poset& p);

/// One check per (path, ray pair): order-graph connectivity against the
/// perturbation dimension of the ray sum.
std::vector<CheckResult> verify_two_dim_faces(const Poset& p);

/// |det E_U| = 1 for every linear extension.
std::vector<CheckResult> verify_determinants(const Poset& p, const Guards& guards = Guards{});

/// Exact exponential path probabilities sum to one.
std::vector<CheckResult> verify_probability_sum(const Poset& p, const std::vector<Rat>& rates,
                                                const Guards& guards = Guards{});

/// e(P)/|P|! agrees with the hook product on grids.
std::vector<CheckResult> verify_uniform_tail(const Poset& p, const Guards& guards = Guards{});

}  // namespace lppcone
