#include "lppcone/probability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "lppcone/lpp.hpp"

namespace lppcone {

WeightLaw WeightLaw::exponential(std::vector<double> rates, std::uint64_t seed) {
    WeightLaw law;
    law.kind = Kind::Exponential;
    law.rates = std::move(rates);
    law.seed = seed;
    for (double r : law.rates)
        if (!(r > 0)) throw std::invalid_argument("exponential rates must be positive");
    return law;
}

WeightLaw WeightLaw::unit_exponential(int n, std::uint64_t seed) {
    return exponential(std::vector<double>(n, 1.0), seed);
}

WeightLaw WeightLaw::uniform01(std::uint64_t seed) {
    WeightLaw law;
    law.kind = Kind::Uniform01;
    law.seed = seed;
    return law;
}

WeightLaw WeightLaw::custom(std::string sampler_id, std::uint64_t seed) {
    WeightLaw law;
    law.kind = Kind::Custom;
    law.sampler_id = std::move(sampler_id);
    law.seed = seed;
    return law;
}

namespace {

std::unordered_map<std::string, std::function<double(SplitMix64&)>>& sampler_registry() {
    static std::unordered_map<std::string, std::function<double(SplitMix64&)>> registry;
    return registry;
}
std::mutex sampler_mutex;

}  // namespace

void register_sampler(const std::string& id, std::function<double(SplitMix64&)> sampler) {
    std::lock_guard lock(sampler_mutex);
    sampler_registry()[id] = std::move(sampler);
}

std::vector<double> sample_weights(const WeightLaw& law, int n, std::uint64_t rep) {
    SplitMix64 rng = SplitMix64::substream(law.seed, rep);
    std::vector<double> w(n);
    switch (law.kind) {
        case WeightLaw::Kind::Exponential:
            if (static_cast<int>(law.rates.size()) != n)
                throw std::invalid_argument("rate vector dimension mismatch");
            for (int v = 0; v < n; ++v) w[v] = exponential(rng, law.rates[v]);
            break;
        case WeightLaw::Kind::Uniform01:
            for (int v = 0; v < n; ++v) w[v] = uniform01(rng);
            break;
        case WeightLaw::Kind::Custom: {
            std::function<double(SplitMix64&)> sampler;
            {
                std::lock_guard lock(sampler_mutex);
                auto it = sampler_registry().find(law.sampler_id);
                if (it == sampler_registry().end())
                    throw std::invalid_argument("unknown sampler '" + law.sampler_id + "'");
                sampler = it->second;
            }
            for (int v = 0; v < n; ++v) w[v] = sampler(rng);
            break;
        }
    }
    return w;
}

Rat exp_cone_probability(const std::vector<std::vector<int>>& columns,
                         const std::vector<Rat>& rates) {
    const int n = static_cast<int>(rates.size());
    if (static_cast<int>(columns.size()) != n)
        throw std::invalid_argument("cone probability needs n linearly independent columns");
    for (const Rat& r : rates)
        if (r <= 0) throw std::invalid_argument("exponential rates must be positive");

    IntMatrix m(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(columns[i].size()) != n)
            throw std::invalid_argument("column dimension mismatch");
        for (int v = 0; v < n; ++v) m[v][i] = columns[i][v];
    }
    Int det = determinant(std::move(m));
    if (det < 0) det = -det;
    if (det == 0) throw std::invalid_argument("cone columns are linearly dependent");

    Rat prob = rat(det);
    for (int v = 0; v < n; ++v) prob *= rates[v];
    for (int i = 0; i < n; ++i) {
        Rat dot = 0;
        for (int v = 0; v < n; ++v)
            if (columns[i][v]) dot += rates[v];
        prob /= dot;
    }
    return prob;
}

Rat simplex_prob_exponential(const SimplicialCell& cell, const std::vector<Rat>& rates) {
    const int n = static_cast<int>(cell.eu.size());
    std::vector<std::vector<int>> columns(n, std::vector<int>(n, 0));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < n; ++i) columns[i][v] = cell.eu[v][i];
    return exp_cone_probability(columns, rates);
}

ExactPathDistribution exact_exponential_path_distribution(const Poset& p,
                                                          const std::vector<Rat>& rates,
                                                          const Guards& guards) {
    ExactPathDistribution dist;
    dist.paths = enumerate_paths(p);
    dist.probs.assign(dist.paths.size(), Rat(0));
    dist.cells_per_path.assign(dist.paths.size(), 0);

    std::unordered_map<std::uint64_t, std::size_t> path_index;
    for (std::size_t i = 0; i < dist.paths.size(); ++i) path_index[dist.paths[i].mask] = i;

    Rat total = 0;
    for (const LinearExtension& ext : enumerate_linear_extensions(p, guards)) {
        SimplicialCell cell = cell_from_extension(p, ext);
        Rat prob = simplex_prob_exponential(cell, rates);
        std::size_t i = path_index.at(cell.schutz.mask);
        dist.probs[i] += prob;
        dist.cells_per_path[i] += 1;
        dist.cell_count += 1;
        total += prob;
    }
    if (total != 1) throw std::logic_error("exact path probabilities do not sum to one");
    return dist;
}

Rat path_prob_exponential_exact(const Poset& p, const Path& pi, const std::vector<Rat>& rates,
                                const Guards& guards) {
    ExactPathDistribution dist = exact_exponential_path_distribution(p, rates, guards);
    for (std::size_t i = 0; i < dist.paths.size(); ++i)
        if (dist.paths[i].mask == pi.mask) return dist.probs[i];
    throw std::invalid_argument("path does not belong to the poset");
}

double PathDistribution::estimate(std::size_t i) const {
    std::uint64_t effective = replicates - tie_discards;
    return effective ? static_cast<double>(counts[i]) / static_cast<double>(effective) : 0.0;
}

double PathDistribution::standard_error(std::size_t i) const {
    std::uint64_t effective = replicates - tie_discards;
    if (!effective) return 0.0;
    double p = estimate(i);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(effective));
}

namespace {

constexpr std::uint64_t kBlockSize = 4096;

// Runs fn over fixed-size replicate blocks on the requested number of
// worker threads. Blocks are identified by index, so per-block results can
// be folded in replicate order afterwards regardless of scheduling.
template <class BlockResult, class Fn>
std::vector<BlockResult> run_blocks(std::uint64_t reps, int threads, Fn fn) {
    const std::uint64_t nblocks = (reps + kBlockSize - 1) / kBlockSize;
    std::vector<BlockResult> results(nblocks);
    if (threads < 1) threads = 1;
    if (nblocks == 0) return results;

    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::uint64_t b = next.fetch_add(1);
            if (b >= nblocks) return;
            std::uint64_t begin = b * kBlockSize;
            std::uint64_t end = std::min(reps, begin + kBlockSize);
            results[b] = fn(begin, end);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

}  // namespace

PathDistribution mc_path_distribution(const Poset& p, const WeightLaw& law, std::uint64_t reps,
                                      int threads) {
    if (reps < 1) throw std::invalid_argument("replicate count must be positive");
    PathDistribution dist;
    dist.paths = enumerate_paths(p);
    dist.counts.assign(dist.paths.size(), 0);
    dist.replicates = reps;

    std::unordered_map<std::uint64_t, std::size_t> path_index;
    for (std::size_t i = 0; i < dist.paths.size(); ++i) path_index[dist.paths[i].mask] = i;

    struct Block {
        std::vector<std::uint64_t> counts;
        std::uint64_t ties = 0;
    };
    auto blocks = run_blocks<Block>(reps, threads, [&](std::uint64_t begin, std::uint64_t end) {
        Block block;
        block.counts.assign(dist.paths.size(), 0);
        for (std::uint64_t rep = begin; rep < end; ++rep) {
            std::vector<double> w = sample_weights(law, p.size(), rep);
            ArgmaxPath best = argmax_path(p, w);
            if (best.tie)
                block.ties += 1;
            else
                block.counts[path_index.at(best.path.mask)] += 1;
        }
        return block;
    });
    for (const auto& block : blocks) {
        dist.tie_discards += block.ties;
        for (std::size_t i = 0; i < dist.counts.size(); ++i) dist.counts[i] += block.counts[i];
    }
    return dist;
}

McStatistics mc_statistics(const Poset& grid, const WeightLaw& law, std::uint64_t reps,
                           int threads) {
    if (!grid.has_coords()) throw std::invalid_argument("statistics run needs a grid poset");
    if (reps < 1) throw std::invalid_argument("replicate count must be positive");

    McStatistics stats;
    stats.paths = enumerate_paths(grid);
    stats.counts.assign(stats.paths.size(), 0);
    stats.replicates = reps;

    std::unordered_map<std::uint64_t, std::size_t> path_index;
    std::vector<int> path_deviation(stats.paths.size(), 0);
    for (std::size_t i = 0; i < stats.paths.size(); ++i) {
        path_index[stats.paths[i].mask] = i;
        int dev = 0;
        for (int v : stats.paths[i].vertices) {
            auto [a, b] = grid.coords(v);
            dev = std::max(dev, std::abs(a - b));
        }
        path_deviation[i] = dev;
    }

    struct Block {
        std::vector<std::uint64_t> counts;
        std::map<int, std::uint64_t> hist;
        double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
        std::uint64_t n = 0, ties = 0;
    };
    auto blocks = run_blocks<Block>(reps, threads, [&](std::uint64_t begin, std::uint64_t end) {
        Block block;
        block.counts.assign(stats.paths.size(), 0);
        for (std::uint64_t rep = begin; rep < end; ++rep) {
            std::vector<double> w = sample_weights(law, grid.size(), rep);
            ArgmaxPath best = argmax_path(grid, w);
            if (best.tie) {
                block.ties += 1;
                continue;
            }
            std::size_t i = path_index.at(best.path.mask);
            block.counts[i] += 1;
            double x = path_deviation[i];
            double y = path_length(w, best.path);
            block.hist[path_deviation[i]] += 1;
            block.sx += x;
            block.sy += y;
            block.sxx += x * x;
            block.syy += y * y;
            block.sxy += x * y;
            block.n += 1;
        }
        return block;
    });

    // Fold in block order so the result does not depend on the thread count.
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    std::uint64_t n = 0;
    for (const auto& block : blocks) {
        stats.tie_discards += block.ties;
        for (std::size_t i = 0; i < stats.counts.size(); ++i) stats.counts[i] += block.counts[i];
        for (auto [dev, count] : block.hist) stats.deviation_histogram[dev] += count;
        sx += block.sx;
        sy += block.sy;
        sxx += block.sxx;
        syy += block.syy;
        sxy += block.sxy;
        n += block.n;
    }
    if (n > 0) {
        stats.mean_length = sy / static_cast<double>(n);
        double dn = static_cast<double>(n);
        double varx = dn * sxx - sx * sx;
        double vary = dn * syy - sy * sy;
        if (varx > 0 && vary > 0)
            stats.correlation = (dn * sxy - sx * sy) / std::sqrt(varx * vary);
    }
    for (std::size_t i = 0; i < stats.counts.size(); ++i)
        if (stats.modal_path < 0 || stats.counts[i] > stats.counts[stats.modal_path])
            stats.modal_path = static_cast<int>(i);
    return stats;
}

Rat uniform_left_tail(const Poset& p, const Guards& guards) {
    return rat(count_linear_extensions(p, guards), factorial(p.size()));
}

Rat grid_left_tail(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be positive");
    Rat product = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) product /= Rat(m - i + n - j + 1);
    if (product != uniform_left_tail(Poset::grid(m, n)))
        throw std::logic_error("hook product disagrees with the extension count");
    return product;
}

PStarReport pstar_components(const SimplicialCell& cell) {
    const int n = static_cast<int>(cell.eu.size());
    PStarReport report;
    report.intervals.resize(n);
    for (int v = 0; v < n; ++v) {
        int first = -1, last = -1;
        for (int i = 0; i < n; ++i) {
            if (!cell.eu[v][i]) continue;
            if (first < 0) first = i + 1;
            last = i + 1;
        }
        report.intervals[v] = {first, last};
    }

    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](auto&& self, int x) -> int {
        return parent[x] == x ? x : parent[x] = self(self, parent[x]);
    };
    for (auto [first, last] : report.intervals)
        for (int i = first; i < last; ++i) parent[find(find, i)] = find(find, i + 1);

    std::map<int, std::vector<int>> groups;
    for (int i = 1; i <= n; ++i) groups[find(find, i)].push_back(i);
    for (auto& [root, members] : groups) report.components.push_back(members);
    std::sort(report.components.begin(), report.components.end());
    report.component_count = static_cast<int>(report.components.size());

    for (const Antichain& a : cell.antichains)
        if (a.members.size() == 1) report.singleton_expression_count += 1;
    report.singleton_expression_count += 1;
    return report;
}

}  // namespace lppcone
