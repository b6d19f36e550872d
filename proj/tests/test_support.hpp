#pragma once

#include <string>
#include <vector>

#include "lppcone/poset.hpp"
#include "lppcone/rational.hpp"
#include "lppcone/rng.hpp"

namespace lppcone::testsupport {

/// A random connected poset on `size` vertices, deterministic in the seed.
/// Relations run upward in vertex index, so the result is always acyclic;
/// disconnected draws are rejected.
inline Poset random_connected_poset(int size, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        SplitMix64 rng = SplitMix64::substream(seed, attempt);
        std::vector<std::string> labels;
        for (int v = 0; v < size; ++v) labels.push_back("v" + std::to_string(v));
        std::vector<std::pair<std::string, std::string>> relations;
        for (int u = 0; u < size; ++u)
            for (int v = u + 1; v < size; ++v)
                if (rng.next() % 100 < 30) relations.emplace_back(labels[u], labels[v]);
        try {
            return Poset::from_covers(labels, relations);
        } catch (const std::invalid_argument&) {
            continue;  // disconnected; redraw
        }
    }
}

/// The shared desk-scale instance set: grids 2x2, 2x3, 3x3 plus random
/// connected posets of 4..8 vertices.
inline std::vector<Poset> instance_set(int random_count, std::uint64_t seed = 20240521) {
    std::vector<Poset> out;
    out.push_back(Poset::grid(2, 2));
    out.push_back(Poset::grid(2, 3));
    out.push_back(Poset::grid(3, 3));
    for (int i = 0; i < random_count; ++i)
        out.push_back(random_connected_poset(4 + i % 5, seed + i));
    return out;
}

/// Weight vector with entries addressed by vertex label.
inline std::vector<Rat> weights_by_label(
    const Poset& p, const std::vector<std::pair<std::string, Rat>>& entries) {
    std::vector<Rat> w(p.size(), Rat(0));
    for (const auto& [label, value] : entries) w[p.vertex(label)] = value;
    return w;
}

inline Path path_by_labels(const Poset& p, const std::vector<std::string>& labels) {
    std::vector<int> vertices;
    for (const auto& l : labels) vertices.push_back(p.vertex(l));
    return make_path(p, std::move(vertices));
}

inline Antichain antichain_by_labels(const Poset& p, const std::vector<std::string>& labels) {
    std::vector<int> members;
    for (const auto& l : labels) members.push_back(p.vertex(l));
    return make_antichain(p, std::move(members));
}

}  // namespace lppcone::testsupport
