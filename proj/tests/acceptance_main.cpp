// Acceptance suite: end-to-end checks of the theorem-level guarantees on
// the desk-scale instance set. Prints one PASS/FAIL line per criterion and
// exits with the number of failures. argv[1] must point at the CLI binary
// (used by the reproducibility criterion).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lppcone/cone.hpp"
#include "lppcone/lpp.hpp"
#include "lppcone/probability.hpp"
#include "lppcone/simplex.hpp"
#include "lppcone/simplicial.hpp"
#include "lppcone/verify.hpp"
#include "test_support.hpp"

using namespace lppcone;
using namespace lppcone::testsupport;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void run(int criterion, const std::function<std::string()>& body) {
    try {
        report(criterion, true, body());
    } catch (const std::exception& e) {
        report(criterion, false, e.what());
    }
}

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

std::vector<Poset> grid_list_m_plus_n_le_8() {
    std::vector<Poset> grids;
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; m + n <= 8; ++n) grids.push_back(Poset::grid(m, n));
    return grids;
}

int path_index_by_labels(const Poset& p, const std::vector<Path>& paths,
                         const std::vector<std::string>& labels) {
    Path wanted = path_by_labels(p, labels);
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (paths[i].mask == wanted.mask) return static_cast<int>(i);
    throw std::runtime_error("named path not found");
}

// --- criterion 1: extreme-ray completeness -------------------------------

std::string criterion1() {
    auto start = std::chrono::steady_clock::now();
    std::size_t paths_checked = 0;
    for (const Poset& p : instance_set(20)) {
        for (const CheckResult& check : verify_extreme_rays(p, 100, 2024, 2)) {
            require(check.pass, check.name + ": " + check.detail);
            ++paths_checked;
        }
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(seconds < 120.0, "runtime " + std::to_string(seconds) + "s exceeds 2 minutes");
    std::ostringstream os;
    os << "rays complete on " << paths_checked << " cones (dim-1 + 100-point hull checks, "
       << static_cast<int>(seconds) << "s)";
    return os.str();
}

// --- criterion 2: extreme-ray counts --------------------------------------

std::string criterion2() {
    std::size_t paths_checked = 0;
    for (const Poset& g : grid_list_m_plus_n_le_8()) {
        int m = 0, n = 0;
        for (int v = 0; v < g.size(); ++v) {
            m = std::max(m, g.coords(v).first);
            n = std::max(n, g.coords(v).second);
        }
        auto antichains = enumerate_antichains(g);
        for (const Path& pi : enumerate_paths(g)) {
            require(count_extreme_rays_grid(m, n, g, pi) ==
                        Int(extreme_rays(antichains, pi).size()),
                    "count formula mismatch on grid " + std::to_string(m) + "x" +
                        std::to_string(n));
            ++paths_checked;
        }
    }
    Poset g22 = Poset::grid(2, 2);
    require(count_extreme_rays_grid(2, 2, g22, enumerate_paths(g22)[0]) == 4, "2x2 count");
    Poset g23 = Poset::grid(2, 3);
    require(count_extreme_rays_grid(
                2, 3, g23, path_by_labels(g23, {"(1,1)", "(1,2)", "(1,3)", "(2,3)"})) == 7,
            "2x3 top-path count");
    require(count_extreme_rays_grid(
                2, 3, g23, path_by_labels(g23, {"(1,1)", "(1,2)", "(2,2)", "(2,3)"})) == 6,
            "2x3 bent-path count");
    return "formula equals enumeration on " + std::to_string(paths_checked) +
           " grid paths (m+n <= 8)";
}

// --- criterion 3: facet classification ------------------------------------

std::string criterion3() {
    std::size_t normals_checked = 0;
    for (const Poset& p : instance_set(20)) {
        for (const CheckResult& check : verify_facets(p)) {
            require(check.pass, check.name + ": " + check.detail);
            ++normals_checked;
        }
    }

    Poset g22 = Poset::grid(2, 2);
    auto paths22 = enumerate_paths(g22);
    int up22 = path_index_by_labels(g22, paths22, {"(1,1)", "(1,2)", "(2,2)"});
    int facet_count = 0;
    for (const ClassifiedNormal& c : facets(g22, paths22, up22))
        if (c.tag == FacetTag::Necessary) ++facet_count;
    require(facet_count == 4, "2x2 up-path facet count");

    Poset g33 = Poset::grid(3, 3);
    auto paths33 = enumerate_paths(g33);
    int loop_a = path_index_by_labels(g33, paths33, {"(1,1)", "(1,2)", "(2,2)", "(2,3)", "(3,3)"});
    int loop_b = path_index_by_labels(g33, paths33, {"(1,1)", "(2,1)", "(2,2)", "(3,2)", "(3,3)"});
    require(!is_connected(disorder_graph(g33, paths33[loop_a], paths33[loop_b])),
            "two-loop pair should be disconnected");
    for (const ClassifiedNormal& c : facets(g33, paths33, loop_a))
        if (c.normal.kind == Normal::Kind::PathDifference && c.normal.other_path == loop_b)
            require(c.tag == FacetTag::Redundant, "two-loop difference should be redundant");

    return "zero mismatches over " + std::to_string(normals_checked) +
           " normals; witnesses validated";
}

// --- criterion 4: two-dimensional faces ------------------------------------

std::string criterion4() {
    std::size_t pairs_checked = 0;
    for (const Poset& p : instance_set(20)) {
        for (const CheckResult& check : verify_two_dim_faces(p))
            require(check.pass, check.name + ": " + check.detail);
        for (const Path& pi : enumerate_paths(p))
            pairs_checked += extreme_rays(p, pi).size() * (extreme_rays(p, pi).size() - 1) / 2;
    }
    Poset g23 = Poset::grid(2, 3);
    Path top = path_by_labels(g23, {"(1,1)", "(1,2)", "(1,3)", "(2,3)"});
    require(!is_two_dim_face(g23, top, antichain_by_labels(g23, {"(1,2)"}),
                             antichain_by_labels(g23, {"(1,3)", "(2,1)"})),
            "2x3 negative example should not be a face");
    return "order graph matches perturbation rank on " + std::to_string(pairs_checked) +
           " ray pairs";
}

// --- criterion 5: simplicial decomposition ---------------------------------

std::string criterion5() {
    std::size_t cells = 0;
    for (const Poset& p : instance_set(20))
        for (const LinearExtension& ext : enumerate_linear_extensions(p)) {
            long long det = eu_determinant(cell_from_extension(p, ext));
            require(det == 1 || det == -1, "non-unimodular cell matrix");
            ++cells;
        }

    std::vector<Poset> grids;
    grids.push_back(Poset::grid(2, 2));
    grids.push_back(Poset::grid(2, 3));
    grids.push_back(Poset::grid(3, 3));
    std::uint64_t located = 0, rational_checks = 0;
    for (std::size_t gi = 0; gi < grids.size(); ++gi) {
        const Poset& g = grids[gi];
        const std::uint64_t samples = gi + 1 < grids.size() ? 3333 : 3334;
        for (std::uint64_t rep = 0; rep < samples; ++rep) {
            SplitMix64 rng = SplitMix64::substream(5150 + gi, rep);
            std::vector<double> w(g.size());
            for (auto& x : w) x = uniform01(rng);
            LocatedCell<double> cell = locate_cell(g, w);

            double total = 0;
            for (double l : cell.lambda) {
                require(l >= 0, "negative lambda");
                total += l;
            }
            require(std::abs(total - passage_time(g, w)) <= 1e-12,
                    "lambda sum misses the passage time");
            require(cell.cell.schutz.vertices == argmax_path(g, w).path.vertices,
                    "cell path differs from the argmax path");
            ++located;

            if (rational_checks < 100 && rep % 100 == 0) {
                // Doubles convert to rationals exactly, so the same sample
                // re-runs in exact mode; the identity E_U * lambda = w is
                // asserted inside.
                std::vector<Rat> wr(w.size());
                for (std::size_t v = 0; v < w.size(); ++v) wr[v] = Rat(w[v]);
                LocatedCell<Rat> exact = locate_cell(g, wr);
                Rat sum = 0;
                for (const Rat& l : exact.lambda) sum += l;
                require(sum == passage_time(g, wr), "exact lambda sum mismatch");
                ++rational_checks;
            }
        }
    }
    require(located == 10000, "expected 10000 located samples");
    std::ostringstream os;
    os << cells << " cells unimodular; 10000 samples located (" << rational_checks
       << " exact spot checks)";
    return os.str();
}

// --- criterion 6: exact exponential probabilities --------------------------

std::string criterion6() {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
        Poset g = Poset::grid(m, n);
        std::vector<Rat> unit(g.size(), Rat(1));
        ExactPathDistribution exact = exact_exponential_path_distribution(g, unit);
        Rat total = 0;
        for (const Rat& q : exact.probs) total += q;
        require(total == 1, "probabilities do not sum to one");
        if (m == 2 && n == 2)
            require(exact.probs[0] == rat(1, 2) && exact.probs[1] == rat(1, 2),
                    "2x2 probabilities are not 1/2, 1/2");

        PathDistribution mc =
            mc_path_distribution(g, WeightLaw::unit_exponential(g.size(), 31337), 100000, 2);
        require(mc.tie_discards == 0, "continuous law produced ties");
        for (std::size_t i = 0; i < mc.paths.size(); ++i) {
            double gap = std::abs(mc.estimate(i) - to_double(exact.probs[i]));
            require(gap <= 3 * mc.standard_error(i),
                    "MC estimate outside 3 standard errors on grid " + std::to_string(m) + "x" +
                        std::to_string(n));
        }
    }
    return "exact sums = 1 on 2x2, 2x3, 3x3; 2x2 = 1/2,1/2; MC within 3 SE; 0 tie discards";
}

// --- criterion 7: uniform left tail -----------------------------------------

std::string criterion7() {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}}) {
        Poset g = Poset::grid(m, n);
        double expected = to_double(uniform_left_tail(g));
        const std::uint64_t reps = 1000000;
        std::uint64_t inside = 0;
        for (std::uint64_t rep = 0; rep < reps; ++rep) {
            SplitMix64 rng = SplitMix64::substream(777 + m * 10 + n, rep);
            std::vector<double> w(g.size());
            for (auto& x : w) x = uniform01(rng);
            if (passage_time(g, w) <= 1.0) ++inside;
        }
        double estimate = static_cast<double>(inside) / static_cast<double>(reps);
        double se = std::sqrt(expected * (1 - expected) / static_cast<double>(reps));
        require(std::abs(estimate - expected) <= 3 * se,
                "tail estimate outside 3 standard errors on grid " + std::to_string(m) + "x" +
                    std::to_string(n));
    }
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; m + n <= 8; ++n) grid_left_tail(m, n);  // hook = e/|P|! asserted inside
    require(uniform_left_tail(Poset::grid(2, 2)) == rat(1, 12), "2x2 tail is not 1/12");
    require(uniform_left_tail(Poset::grid(2, 3)) == rat(1, 144), "2x3 tail is not 1/144");
    return "empirical tails within 3 SE of 1/12 and 1/144 (1e6 samples); hook products exact";
}

// --- criterion 8: counting identities ---------------------------------------

std::string criterion8() {
    for (long a = 0; a <= 10; ++a)
        for (long b = 0; b <= 10; ++b) antichain_count_block(a, b);  // identity asserted inside
    require(count_linear_extensions(Poset::grid(3, 3)) == 42, "e(3x3) != 42 by lattice DP");
    Int hooks = 1;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) hooks *= (3 - i) + (3 - j) + 1;
    require(factorial(9) / hooks == 42, "e(3x3) != 42 by hook product");
    return "1 + J(a,b) = C(a+b,a) for a,b <= 10; e(3x3) = 42 by DP and hooks";
}

// --- criterion 9: reproducibility --------------------------------------------

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing CLI output " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string criterion9(const std::string& cli) {
    struct RunSpec {
        std::string args;
        std::string name;
    };
    std::vector<RunSpec> runs = {
        {"pathprob --poset grid:2x3 --law exp --rates unit --mode mc --reps 20000 --seed 7",
         "pathprob"},
        {"simulate --poset grid:3x3 --law exp --rates unit --reps 20000 --seed 11", "simulate"},
    };
    for (const RunSpec& spec : runs) {
        std::vector<std::string> outputs;
        for (int threads : {1, 3, 1}) {
            std::string out = "acceptance_" + spec.name + "_" + std::to_string(outputs.size()) +
                              ".json";
            std::string command = "\"" + cli + "\" " + spec.args + " --threads " +
                                  std::to_string(threads) + " --out " + out;
            require(std::system(command.c_str()) == 0, "CLI run failed: " + command);
            outputs.push_back(out);
        }
        std::vector<std::string> raw, filtered;
        for (const std::string& out : outputs) {
            std::string text = read_file(out);
            raw.push_back(text);
            // The thread count is echoed in the config block, so comparisons
            // across thread counts strip that one line.
            std::string body;
            std::stringstream ss(text);
            std::string line;
            while (std::getline(ss, line))
                if (line.find("\"threads\"") == std::string::npos) body += line + "\n";
            filtered.push_back(body);
            std::remove(out.c_str());
        }
        require(raw[0] == raw[2], spec.name + ": identical configs gave different bytes");
        require(filtered[0] == filtered[1], spec.name + ": threads 1 vs 3 reports differ");
    }
    return "byte-identical reports across reruns and thread counts";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
        return 64;
    }
    std::string cli = argv[1];

    run(1, criterion1);
    run(2, criterion2);
    run(3, criterion3);
    run(4, criterion4);
    run(5, criterion5);
    run(6, criterion6);
    run(7, criterion7);
    run(8, criterion8);
    run(9, [&] { return criterion9(cli); });

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    return failures;
}
