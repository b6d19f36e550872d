// Command-line front end: poset construction, cone analysis, simplicial
// reports, exact and Monte Carlo path probabilities, and oracle-vs-theorem
// verification, all emitted as reproducible JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "lppcone/cone.hpp"
#include "lppcone/io.hpp"
#include "lppcone/lpp.hpp"
#include "lppcone/probability.hpp"
#include "lppcone/simplicial.hpp"
#include "lppcone/verify.hpp"
#include "lppcone/version.hpp"

using json = nlohmann::ordered_json;
using namespace lppcone;

namespace {

struct CommonOptions {
    std::string poset_spec;
    std::string out_path;  // empty = stdout
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_threads = false) {
    cmd->add_option("--poset", opts.poset_spec, "grid:MxN, young:a,b,c, or a JSON file")
        ->required();
    cmd->add_option("--out", opts.out_path, "output file (default: stdout)");
    if (with_threads)
        cmd->add_option("--threads", opts.threads, "worker threads")->check(CLI::PositiveNumber);
}

Poset load(const CommonOptions& opts) {
    std::vector<std::string> warnings;
    Poset p = load_poset(opts.poset_spec, &warnings, Guards::from_env());
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return p;
}

json path_labels(const Poset& p, const Path& pi) {
    json out = json::array();
    for (int v : pi.vertices) out.push_back(p.label(v));
    return out;
}

json antichain_labels(const Poset& p, const Antichain& a) {
    json out = json::array();
    for (int v : a.members) out.push_back(p.label(v));
    return out;
}

void emit(const CommonOptions& opts, const std::string& command, const json& config,
          const json& report) {
    json envelope;
    envelope["tool"] = "lppcone";
    envelope["version"] = kVersion;
    envelope["command"] = command;
    envelope["config"] = config;
    envelope["report"] = report;
    std::string text = envelope.dump(2) + "\n";
    if (opts.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write to '" + opts.out_path + "'");
        out << text;
    }
}

// Splits a path selector on top-level commas, so labels like "(1,2)" stay
// intact: "(1,1),(1,2),(2,2)" -> three labels.
std::vector<std::string> split_label_list(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) out.push_back(current);
    return out;
}

std::vector<int> select_paths(const Poset& p, const std::vector<Path>& paths,
                              const std::string& selector) {
    if (selector == "all") {
        std::vector<int> all(paths.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        return all;
    }
    if (!selector.empty() && selector.find_first_not_of("0123456789") == std::string::npos) {
        int index = std::stoi(selector);
        if (index < 0 || index >= static_cast<int>(paths.size()))
            throw std::invalid_argument("path index " + selector + " out of range (" +
                                        std::to_string(paths.size()) + " paths)");
        return {index};
    }
    std::vector<int> vertices;
    for (const auto& label : split_label_list(selector)) vertices.push_back(p.vertex(label));
    Path wanted = make_path(p, std::move(vertices));
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (paths[i].mask == wanted.mask) return {static_cast<int>(i)};
    throw std::invalid_argument("selector does not name a maximal chain");
}

json normal_to_json(const Poset& p, const Normal& normal) {
    json out;
    if (normal.kind == Normal::Kind::Axis) {
        out["kind"] = "axis";
        out["vertex"] = p.label(normal.vertex);
    } else {
        out["kind"] = "path_difference";
        out["other_path"] = normal.other_path;
    }
    out["coeffs"] = normal.coeffs;
    return out;
}

int run_paths(const CommonOptions& opts) {
    Poset p = load(opts);
    auto paths = enumerate_paths(p);
    json report;
    report["count"] = paths.size();
    json items = json::array();
    for (std::size_t i = 0; i < paths.size(); ++i)
        items.push_back({{"index", i}, {"vertices", path_labels(p, paths[i])}});
    report["paths"] = items;
    emit(opts, "paths", {{"poset", opts.poset_spec}}, report);
    return 0;
}

int run_antichains(const CommonOptions& opts) {
    Poset p = load(opts);
    auto antichains = enumerate_antichains(p);
    json report;
    report["count"] = antichains.size();
    json items = json::array();
    for (std::size_t i = 0; i < antichains.size(); ++i)
        items.push_back({{"index", i}, {"members", antichain_labels(p, antichains[i])}});
    report["antichains"] = items;
    emit(opts, "antichains", {{"poset", opts.poset_spec}}, report);
    return 0;
}

int run_extensions(const CommonOptions& opts, bool count_only) {
    Poset p = load(opts);
    Guards guards = Guards::from_env();
    json report;
    report["count"] = count_linear_extensions(p, guards).get_str();
    if (!count_only) {
        json items = json::array();
        for (const LinearExtension& ext : enumerate_linear_extensions(p, guards)) {
            json order = json::array();
            for (int v : ext.order) order.push_back(p.label(v));
            items.push_back(order);
        }
        report["extensions"] = items;
    }
    emit(opts, "extensions", {{"poset", opts.poset_spec}, {"count_only", count_only}}, report);
    return 0;
}

json analyze_cone(const Poset& p, const std::vector<Path>& paths,
                  const std::vector<Antichain>& antichains, int index) {
    json cone;
    cone["path_index"] = index;
    cone["path"] = path_labels(p, paths[index]);

    auto rays = extreme_rays(antichains, paths[index]);
    json ray_items = json::array();
    for (const Antichain& a : rays) ray_items.push_back(antichain_labels(p, a));
    cone["extreme_rays"] = ray_items;
    cone["extreme_ray_count"] = rays.size();

    json facet_items = json::array();
    for (const ClassifiedNormal& c : facets(p, paths, index)) {
        json item;
        item["normal"] = normal_to_json(p, c.normal);
        item["tag"] = c.tag == FacetTag::Necessary ? "necessary" : "redundant";
        item["reason"] = c.reason;
        facet_items.push_back(std::move(item));
    }
    cone["facet_classification"] = facet_items;

    json adjacency = json::array();
    for (std::size_t a = 0; a < rays.size(); ++a)
        for (std::size_t b = a + 1; b < rays.size(); ++b)
            if (is_two_dim_face(p, paths[index], rays[a], rays[b])) adjacency.push_back({a, b});
    cone["two_dim_face_adjacency"] = adjacency;
    return cone;
}

int run_cone(const CommonOptions& opts, const std::string& selector) {
    Poset p = load(opts);
    auto paths = enumerate_paths(p);
    auto antichains = enumerate_antichains(p);
    std::vector<int> selected = select_paths(p, paths, selector);

    // Per-path analyses are independent; slots keep the output order fixed.
    std::vector<json> slots(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= selected.size()) return;
            slots[i] = analyze_cone(p, paths, antichains, selected[i]);
        }
    };
    if (opts.threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < opts.threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    json report;
    report["cones"] = json::array();
    for (json& slot : slots) report["cones"].push_back(std::move(slot));
    emit(opts, "cone", {{"poset", opts.poset_spec}, {"path", selector}}, report);
    return 0;
}

int run_simplices(const CommonOptions& opts, bool group_by_path) {
    Poset p = load(opts);
    Guards guards = Guards::from_env();
    json report;
    if (group_by_path) {
        std::map<std::vector<int>, std::size_t> cells_per_path;
        for (const LinearExtension& ext : enumerate_linear_extensions(p, guards))
            cells_per_path[cell_from_extension(p, ext).schutz.vertices] += 1;
        json items = json::array();
        for (const auto& [vertices, cells] : cells_per_path) {
            json labels = json::array();
            for (int v : vertices) labels.push_back(p.label(v));
            items.push_back({{"path", labels}, {"cells", cells}});
        }
        report["by_path"] = items;
    } else {
        json items = json::array();
        for (const LinearExtension& ext : enumerate_linear_extensions(p, guards)) {
            SimplicialCell cell = cell_from_extension(p, ext);
            json item;
            json order = json::array();
            for (int v : ext.order) order.push_back(p.label(v));
            item["extension"] = order;
            json antichain_items = json::array();
            for (const Antichain& a : cell.antichains)
                antichain_items.push_back(antichain_labels(p, a));
            item["antichains"] = antichain_items;
            item["determinant"] = eu_determinant(cell);
            item["path"] = path_labels(p, cell.schutz);
            items.push_back(std::move(item));
        }
        report["cells"] = items;
    }
    emit(opts, "simplices",
         {{"poset", opts.poset_spec}, {"group_by_path", group_by_path}}, report);
    return 0;
}

WeightLaw make_law(const Poset& p, const std::string& law_name, const std::string& rates_text,
                   std::uint64_t seed) {
    if (law_name == "exp") {
        std::vector<Rat> rates = parse_rates(rates_text, p.size());
        std::vector<double> rd(rates.size());
        for (std::size_t i = 0; i < rates.size(); ++i) rd[i] = to_double(rates[i]);
        return WeightLaw::exponential(std::move(rd), seed);
    }
    if (law_name == "uniform") return WeightLaw::uniform01(seed);
    throw std::invalid_argument("unknown law '" + law_name + "' (use exp or uniform)");
}

int run_pathprob(const CommonOptions& opts, const std::string& mode, const std::string& law_name,
                 const std::string& rates_text, std::uint64_t reps,
                 std::optional<std::uint64_t> seed) {
    Poset p = load(opts);
    json config = {{"poset", opts.poset_spec}, {"mode", mode},      {"law", law_name},
                   {"rates", rates_text},      {"threads", opts.threads}};
    json report;
    if (mode == "exact") {
        if (law_name != "exp")
            throw std::invalid_argument("exact mode supports the exponential law only");
        ExactPathDistribution dist = exact_exponential_path_distribution(
            p, parse_rates(rates_text, p.size()), Guards::from_env());
        json items = json::array();
        for (std::size_t i = 0; i < dist.paths.size(); ++i)
            items.push_back({{"vertices", path_labels(p, dist.paths[i])},
                             {"prob", to_string(dist.probs[i])},
                             {"cells", dist.cells_per_path[i]}});
        report["paths"] = items;
        report["cell_count"] = dist.cell_count;
    } else if (mode == "mc") {
        if (!seed) throw std::invalid_argument("--seed is required for mc mode");
        config["reps"] = reps;
        config["seed"] = *seed;
        WeightLaw law = make_law(p, law_name, rates_text, *seed);
        PathDistribution dist = mc_path_distribution(p, law, reps, opts.threads);
        json items = json::array();
        for (std::size_t i = 0; i < dist.paths.size(); ++i)
            items.push_back({{"vertices", path_labels(p, dist.paths[i])},
                             {"count", dist.counts[i]},
                             {"est", dist.estimate(i)},
                             {"se", dist.standard_error(i)}});
        report["paths"] = items;
        report["tie_discards"] = dist.tie_discards;
        report["seed"] = *seed;
    } else {
        throw std::invalid_argument("unknown mode '" + mode + "' (use exact or mc)");
    }
    emit(opts, "pathprob", config, report);
    return 0;
}

int run_simulate(const CommonOptions& opts, const std::string& law_name,
                 const std::string& rates_text, std::uint64_t reps, std::uint64_t seed,
                 const std::string& csv_path) {
    Poset p = load(opts);
    WeightLaw law = make_law(p, law_name, rates_text, seed);
    McStatistics stats = mc_statistics(p, law, reps, opts.threads);

    json report;
    report["replicates"] = stats.replicates;
    report["tie_discards"] = stats.tie_discards;
    report["modal_path"] = path_labels(p, stats.paths[stats.modal_path]);
    report["mean_length"] = stats.mean_length;
    if (stats.correlation)
        report["deviation_length_correlation"] = *stats.correlation;
    else
        report["deviation_length_correlation"] = nullptr;
    json hist = json::array();
    for (auto [deviation, count] : stats.deviation_histogram)
        hist.push_back({{"deviation", deviation}, {"count", count}});
    report["deviation_histogram"] = hist;
    json path_items = json::array();
    for (std::size_t i = 0; i < stats.paths.size(); ++i)
        path_items.push_back(
            {{"vertices", path_labels(p, stats.paths[i])}, {"count", stats.counts[i]}});
    report["paths"] = path_items;

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw std::invalid_argument("cannot write to '" + csv_path + "'");
        csv << "deviation,count\n";
        for (auto [deviation, count] : stats.deviation_histogram)
            csv << deviation << "," << count << "\n";
    }
    emit(opts, "simulate",
         {{"poset", opts.poset_spec},
          {"law", law_name},
          {"rates", rates_text},
          {"reps", reps},
          {"seed", seed},
          {"threads", opts.threads}},
         report);
    return 0;
}

int run_verify(const CommonOptions& opts, const std::string& suite, const std::string& rates_text,
               int samples, std::uint64_t seed) {
    Poset p = load(opts);
    Guards guards = Guards::from_env();
    std::vector<CheckResult> checks;
    auto append = [&](std::vector<CheckResult> more) {
        checks.insert(checks.end(), std::make_move_iterator(more.begin()),
                      std::make_move_iterator(more.end()));
    };
    bool known = false;
    if (suite == "rays" || suite == "all") {
        append(verify_extreme_rays(p, samples, seed, opts.threads));
        known = true;
    }
    if (suite == "facets" || suite == "all") {
        append(verify_facets(p));
        known = true;
    }
    if (suite == "faces" || suite == "all") {
        append(verify_two_dim_faces(p));
        known = true;
    }
    if (suite == "determinants" || suite == "all") {
        append(verify_determinants(p, guards));
        known = true;
    }
    if (suite == "probsum" || suite == "all") {
        append(verify_probability_sum(p, parse_rates(rates_text, p.size()), guards));
        known = true;
    }
    if (suite == "tail" || suite == "all") {
        append(verify_uniform_tail(p, guards));
        known = true;
    }
    if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");

    bool all_pass = true;
    json items = json::array();
    for (const CheckResult& check : checks) {
        all_pass = all_pass && check.pass;
        items.push_back({{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
    }
    json report;
    report["checks"] = items;
    report["pass"] = all_pass;
    emit(opts, "verify",
         {{"poset", opts.poset_spec},
          {"suite", suite},
          {"rates", rates_text},
          {"samples", samples},
          {"seed", seed}},
         report);
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal-cone geometry of last passage percolation on finite posets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    CommonOptions paths_opts;
    CLI::App* paths_cmd = app.add_subcommand("paths", "enumerate maximal chains");
    add_common(paths_cmd, paths_opts);

    CommonOptions anti_opts;
    CLI::App* anti_cmd = app.add_subcommand("antichains", "enumerate nonempty antichains");
    add_common(anti_cmd, anti_opts);

    CommonOptions ext_opts;
    bool count_only = false;
    CLI::App* ext_cmd = app.add_subcommand("extensions", "enumerate linear extensions");
    add_common(ext_cmd, ext_opts);
    ext_cmd->add_flag("--count-only", count_only, "emit only the extension count");

    CommonOptions cone_opts;
    std::string selector = "all";
    CLI::App* cone_cmd =
        app.add_subcommand("cone", "extreme rays, facets, and 2D faces of maximal cones");
    add_common(cone_cmd, cone_opts, true);
    cone_cmd->add_option("--path", selector, "path index, comma-joined labels, or 'all'");

    CommonOptions simp_opts;
    bool group_by_path = false;
    CLI::App* simp_cmd = app.add_subcommand("simplices", "simplicial cells per extension");
    add_common(simp_cmd, simp_opts);
    simp_cmd->add_flag("--group-by-path", group_by_path, "aggregate cell counts per path");

    CommonOptions prob_opts;
    std::string prob_mode = "exact", prob_law = "exp", prob_rates = "unit";
    std::uint64_t prob_reps = 100000;
    std::optional<std::uint64_t> prob_seed;
    CLI::App* prob_cmd = app.add_subcommand("pathprob", "exact or Monte Carlo path probabilities");
    add_common(prob_cmd, prob_opts, true);
    prob_cmd->add_option("--mode", prob_mode, "exact | mc");
    prob_cmd->add_option("--law", prob_law, "exp | uniform");
    prob_cmd->add_option("--rates", prob_rates, "unit or comma-separated rationals");
    prob_cmd->add_option("--reps", prob_reps, "Monte Carlo replicates");
    prob_cmd->add_option("--seed", prob_seed, "RNG seed (required for mc)");

    CommonOptions sim_opts;
    std::string sim_law = "exp", sim_rates = "unit", sim_csv;
    std::uint64_t sim_reps = 100000, sim_seed = 0;
    CLI::App* sim_cmd = app.add_subcommand("simulate", "Monte Carlo path statistics on a grid");
    add_common(sim_cmd, sim_opts, true);
    sim_cmd->add_option("--law", sim_law, "exp | uniform");
    sim_cmd->add_option("--rates", sim_rates, "unit or comma-separated rationals");
    sim_cmd->add_option("--reps", sim_reps, "Monte Carlo replicates");
    sim_cmd->add_option("--seed", sim_seed, "RNG seed")->required();
    sim_cmd->add_option("--csv", sim_csv, "write the deviation histogram as CSV");

    CommonOptions verify_opts;
    std::string suite = "all", verify_rates = "unit";
    int verify_samples = 20;
    std::uint64_t verify_seed = 1;
    CLI::App* verify_cmd = app.add_subcommand("verify", "oracle-vs-theorem comparison suites");
    add_common(verify_cmd, verify_opts, true);
    verify_cmd->add_option("--suite", suite,
                           "rays | facets | faces | determinants | probsum | tail | all");
    verify_cmd->add_option("--rates", verify_rates, "rates for the probsum suite");
    verify_cmd->add_option("--samples", verify_samples, "cone points sampled per path");
    verify_cmd->add_option("--seed", verify_seed, "RNG seed for cone-point sampling");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*paths_cmd) return run_paths(paths_opts);
        if (*anti_cmd) return run_antichains(anti_opts);
        if (*ext_cmd) return run_extensions(ext_opts, count_only);
        if (*cone_cmd) return run_cone(cone_opts, selector);
        if (*simp_cmd) return run_simplices(simp_opts, group_by_path);
        if (*prob_cmd)
            return run_pathprob(prob_opts, prob_mode, prob_law, prob_rates, prob_reps, prob_seed);
        if (*sim_cmd) return run_simulate(sim_opts, sim_law, sim_rates, sim_reps, sim_seed, sim_csv);
        if (*verify_cmd)
            return run_verify(verify_opts, suite, verify_rates, verify_samples, verify_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
