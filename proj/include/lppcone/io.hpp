#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lppcone/poset.hpp"
#include "lppcone/rational.hpp"

namespace lppcone {

/// Loads a poset from "grid:MxN", "young:a,b,c", or a JSON file of the form
/// {"labels": [...], "covers": [["lower","upper"], ...]}.
Poset load_poset(const std::string& spec, std::vector<std::string>* warnings = nullptr,
                 const Guards& guards = Guards{});

Poset poset_from_json(const nlohmann::json& j, std::vector<std::string>* warnings = nullptr,
                      const Guards& guards = Guards{});
nlohmann::json poset_to_json(const Poset& p);

/// "unit" or a comma-separated list of n positive rationals ("p/q" allowed).
std::vector<Rat> parse_rates(const std::string& text, int n);

/// Weight vector from a JSON array aligned with the poset label order;
/// entries are integers or "p/q" strings.
std::vector<Rat> weights_from_json(const nlohmann::json& j, int n);
nlohmann::json weights_to_json(const std::vector<Rat>& w);

/// Grid dimensions when spec is "grid:MxN"; throws otherwise.
std::pair<int, int> parse_grid_spec(const std::string& spec);

}  // namespace lppcone
