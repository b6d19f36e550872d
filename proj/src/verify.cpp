#include "lppcone/verify.hpp"

#include <atomic>
#include <bit>
#include <thread>

#include "lppcone/lpp.hpp"
#include "lppcone/probability.hpp"
#include "lppcone/simplex.hpp"
#include "lppcone/simplicial.hpp"

namespace lppcone {

std::vector<Rat> sample_cone_point(const Poset& p, const std::vector<Path>& paths,
                                   int path_index, SplitMix64& rng) {
    const int n = p.size();
    const Path& pi = paths.at(path_index);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        long boost = static_cast<long>(rng.next() % 41);
        long den = 1 + static_cast<long>(rng.next() % 7);
        std::vector<Rat> w(n);
        std::vector<long> raw(n);
        for (int v = 0; v < n; ++v) {
            raw[v] = static_cast<long>(rng.next() % 10);
            if (pi.contains(v)) raw[v] += boost;
            w[v] = rat(raw[v], den);
        }
        long len = 0;
        for (int v : pi.vertices) len += raw[v];
        bool inside = true;
        for (const Path& other : paths) {
            long other_len = 0;
            for (int v : other.vertices) other_len += raw[v];
            if (other_len > len) {
                inside = false;
                break;
            }
        }
        if (inside) return w;
    }
    throw std::logic_error("cone point sampling failed to accept");
}

std::vector<CheckResult> verify_extreme_rays(const Poset& p, int samples_per_path,
                                             std::uint64_t seed, int threads) {
    std::vector<Path> paths = enumerate_paths(p);
    std::vector<Antichain> antichains = enumerate_antichains(p);
    std::vector<CheckResult> results(paths.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= paths.size()) return;
            const Path& pi = paths[i];
            CheckResult check;
            check.name = "extreme-rays path " + std::to_string(i);
            check.pass = true;

            std::vector<Antichain> rays = extreme_rays(antichains, pi);
            std::vector<std::vector<Rat>> ray_vectors;
            for (const Antichain& a : rays) {
                std::vector<Rat> vec(p.size(), Rat(0));
                for (int v : a.members) vec[v] = 1;
                int dim = perturbation_dim(p, paths, static_cast<int>(i), vec);
                if (dim != 1) {
                    check.pass = false;
                    check.detail = "ray has perturbation dimension " + std::to_string(dim);
                }
                ray_vectors.push_back(std::move(vec));
            }
            // Antichains meeting the path other than exactly once must lie
            // outside the cone.
            for (const Antichain& a : antichains) {
                if (std::popcount(a.mask & pi.mask) == 1) continue;
                bool outside = false;
                for (const Path& other : paths) {
                    if (std::popcount(a.mask & other.mask) >
                        std::popcount(a.mask & pi.mask)) {
                        outside = true;
                        break;
                    }
                }
                if (!outside) {
                    check.pass = false;
                    check.detail = "non-ray antichain lies inside the cone";
                }
            }
            SplitMix64 rng = SplitMix64::substream(seed, i);
            for (int s = 0; s < samples_per_path && check.pass; ++s) {
                std::vector<Rat> w = sample_cone_point(p, paths, static_cast<int>(i), rng);
                if (!in_conic_hull(w, ray_vectors)) {
                    check.pass = false;
                    check.detail = "sampled cone point escapes the conic hull of the rays";
                }
            }
            if (check.pass)
                check.detail = std::to_string(rays.size()) + " rays, " +
                               std::to_string(samples_per_path) + " hull samples";
            results[i] = std::move(check);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

std::vector<CheckResult> verify_facets(const Poset& p) {
    std::vector<Path> paths = enumerate_paths(p);
    std::vector<CheckResult> results;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        InequalitySystem sys = inequality_system(p, paths, static_cast<int>(i));
        std::vector<std::vector<Rat>> rows = sys.rat_rows();
        std::vector<ClassifiedNormal> classified = facets(p, paths, static_cast<int>(i));
        for (std::size_t k = 0; k < classified.size(); ++k) {
            CheckResult check;
            check.name = "facets path " + std::to_string(i) + " normal " + std::to_string(k);
            bool lp_redundant = is_redundant(rows, k);
            bool tag_redundant = classified[k].tag == FacetTag::Redundant;
            check.pass = lp_redundant == tag_redundant;
            check.detail = classified[k].reason + (lp_redundant ? "; LP: redundant" : "; LP: necessary");
            if (check.pass && classified[k].normal.kind == Normal::Kind::PathDifference &&
                classified[k].tag == FacetTag::Necessary) {
                // The explicit witness must satisfy everything but the
                // targeted inequality.
                std::vector<Rat> w = necessity_witness(p, paths, static_cast<int>(i),
                                                       classified[k].normal.other_path);
                for (std::size_t r = 0; r < rows.size() && check.pass; ++r) {
                    Rat dot = 0;
                    for (int v = 0; v < p.size(); ++v) dot += rows[r][v] * w[v];
                    bool ok = (r == k) ? dot < 0 : dot >= 0;
                    if (!ok) {
                        check.pass = false;
                        check.detail = "necessity witness misclassifies inequality " +
                                       std::to_string(r);
                    }
                }
            }
            results.push_back(std::move(check));
        }
    }
    return results;
}

std::vector<CheckResult> verify_two_dim_faces(const Poset& p) {
    std::vector<Path> paths = enumerate_paths(p);
    std::vector<Antichain> antichains = enumerate_antichains(p);
    std::vector<CheckResult> results;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        std::vector<Antichain> rays = extreme_rays(antichains, paths[i]);
        CheckResult check;
        check.name = "two-dim-faces path " + std::to_string(i);
        check.pass = true;
        std::size_t pairs = 0, faces = 0;
        for (std::size_t a = 0; a < rays.size() && check.pass; ++a) {
            for (std::size_t b = a + 1; b < rays.size() && check.pass; ++b) {
                bool graph_face = is_two_dim_face(p, paths[i], rays[a], rays[b]);
                std::vector<Rat> sum(p.size(), Rat(0));
                for (int v : rays[a].members) sum[v] += 1;
                for (int v : rays[b].members) sum[v] += 1;
                int dim = perturbation_dim(p, paths, static_cast<int>(i), sum);
                if (graph_face != (dim == 2)) {
                    check.pass = false;
                    check.detail = "order graph and perturbation rank disagree on rays " +
                                   std::to_string(a) + "," + std::to_string(b);
                }
                pairs += 1;
                if (graph_face) faces += 1;
            }
        }
        if (check.pass)
            check.detail = std::to_string(faces) + " faces among " + std::to_string(pairs) +
                           " ray pairs";
        results.push_back(std::move(check));
    }
    return results;
}

std::vector<CheckResult> verify_determinants(const Poset& p, const Guards& guards) {
    CheckResult check;
    check.name = "cell determinants";
    check.pass = true;
    std::size_t cells = 0;
    for (const LinearExtension& ext : enumerate_linear_extensions(p, guards)) {
        long long det = eu_determinant(cell_from_extension(p, ext));
        cells += 1;
        if (det != 1 && det != -1) {
            check.pass = false;
            check.detail = "non-unimodular cell";
            break;
        }
    }
    if (check.pass) check.detail = std::to_string(cells) + " cells unimodular";
    return {check};
}

std::vector<CheckResult> verify_probability_sum(const Poset& p, const std::vector<Rat>& rates,
                                                const Guards& guards) {
    CheckResult check;
    check.name = "exponential probability sum";
    ExactPathDistribution dist = exact_exponential_path_distribution(p, rates, guards);
    Rat total = 0;
    for (const Rat& q : dist.probs) total += q;
    check.pass = total == 1;
    check.detail = "sum = " + to_string(total) + " over " + std::to_string(dist.probs.size()) +
                   " paths, " + std::to_string(dist.cell_count) + " cells";
    return {check};
}

std::vector<CheckResult> verify_uniform_tail(const Poset& p, const Guards& guards) {
    CheckResult check;
    check.name = "uniform left tail";
    Rat tail = uniform_left_tail(p, guards);
    check.pass = true;
    check.detail = "e(P)/|P|! = " + to_string(tail);
    if (p.has_coords()) {
        int m = 0, n = 0;
        for (int v = 0; v < p.size(); ++v) {
            m = std::max(m, p.coords(v).first);
            n = std::max(n, p.coords(v).second);
        }
        if (p.size() == m * n) {  // grid, not a ragged Young shape
            Rat hook = grid_left_tail(m, n);
            check.pass = hook == tail;
            check.detail += ", hook product = " + to_string(hook);
        }
    }
    return {check};
}

}  // namespace lppcone
