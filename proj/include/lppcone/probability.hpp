#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lppcone/poset.hpp"
#include "lppcone/rational.hpp"
#include "lppcone/rng.hpp"
#include "lppcone/simplicial.hpp"

namespace lppcone {

/// The iid weight distribution for sampling runs. The seed travels with the
/// law so that a run is fully described by (poset, law, reps).
struct WeightLaw {
    enum class Kind { Exponential, Uniform01, Custom };
    Kind kind = Kind::Uniform01;
    std::vector<double> rates;  // Exponential: one positive rate per vertex
    std::string sampler_id;     // Custom: registered sampler name
    std::uint64_t seed = 0;

    static WeightLaw exponential(std::vector<double> rates, std::uint64_t seed);
    static WeightLaw unit_exponential(int n, std::uint64_t seed);
    static WeightLaw uniform01(std::uint64_t seed);
    static WeightLaw custom(std::string sampler_id, std::uint64_t seed);
};

/// Registry for custom iid samplers referenced by WeightLaw::sampler_id.
void register_sampler(const std::string& id, std::function<double(SplitMix64&)> sampler);

/// Samples one weight vector for replicate `rep` from the law's substream.
std::vector<double> sample_weights(const WeightLaw& law, int n, std::uint64_t rep);

/// P(X in cone spanned by the given 0/1 columns) for independent
/// exponential coordinates: |det| * prod(rates) / prod(<column, rates>).
Rat exp_cone_probability(const std::vector<std::vector<int>>& columns,
                         const std::vector<Rat>& rates);

/// The cell's exact probability under independent exponential weights.
Rat simplex_prob_exponential(const SimplicialCell& cell, const std::vector<Rat>& rates);

/// Exact per-path probabilities, computed by summing the cells whose
/// longest path is the given one. The probabilities add up to one exactly.
struct ExactPathDistribution {
    std::vector<Path> paths;
    std::vector<Rat> probs;
    std::size_t cell_count = 0;
    std::vector<std::size_t> cells_per_path;
};
ExactPathDistribution exact_exponential_path_distribution(const Poset& p,
                                                          const std::vector<Rat>& rates,
                                                          const Guards& guards = Guards{});
Rat path_prob_exponential_exact(const Poset& p, const Path& pi, const std::vector<Rat>& rates,
                                const Guards& guards = Guards{});

/// Monte Carlo tabulation of the longest-path frequencies. Replicates with
/// tied maximizers are discarded and counted separately. Deterministic for
/// a fixed law seed, independent of the thread count.
struct PathDistribution {
    std::vector<Path> paths;
    std::vector<std::uint64_t> counts;
    std::uint64_t replicates = 0;
    std::uint64_t tie_discards = 0;

    double estimate(std::size_t i) const;
    double standard_error(std::size_t i) const;
};
PathDistribution mc_path_distribution(const Poset& p, const WeightLaw& law, std::uint64_t reps,
                                      int threads = 1);

/// Exploratory per-replicate statistics on a grid: longest path, its
/// length, and the maximal transversal deviation max|i-j| along it.
struct McStatistics {
    std::vector<Path> paths;
    std::vector<std::uint64_t> counts;
    int modal_path = -1;
    std::optional<double> correlation;  // deviation vs length; null if degenerate
    std::map<int, std::uint64_t> deviation_histogram;
    double mean_length = 0.0;
    std::uint64_t replicates = 0;
    std::uint64_t tie_discards = 0;
};
McStatistics mc_statistics(const Poset& grid, const WeightLaw& law, std::uint64_t reps,
                           int threads = 1);

/// P(G_P <= 1) under iid Uniform(0,1) weights: e(P) / |P|! exactly.
Rat uniform_left_tail(const Poset& p, const Guards& guards = Guards{});

/// The same left tail for the m x n grid via the hook product
/// prod 1/(m-i+n-j+1); checked against e(P)/|P|!.
Rat grid_left_tail(int m, int n);

/// True iff every maximal chain of P collects weight at most one.
/// Entries must lie in [0,1].
template <class T>
bool chain_polytope_membership(const Poset& p, const std::vector<T>& w) {
    check_dimension(p, w);
    for (const T& x : w)
        if (x < T(0) || x > T(1)) throw std::invalid_argument("weight entry outside [0,1]");
    return passage_time(p, w) <= T(1);
}

/// The time graph of a cell: vertices 1..|P|, an edge between two times iff
/// some poset vertex sits in both boundary antichains. Also evaluates the
/// singleton-count expression 1 + #{i : |dU_i| = 1} for comparison; the
/// graph is the ground truth.
struct PStarReport {
    std::vector<std::pair<int, int>> intervals;  // per vertex: [first, last] column, 1-based
    std::vector<std::vector<int>> components;    // sorted times
    int component_count = 0;
    int singleton_expression_count = 0;
};
PStarReport pstar_components(const SimplicialCell& cell);

}  // namespace lppcone
