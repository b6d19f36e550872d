#include "lppcone/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lppcone {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

}  // namespace

std::pair<int, int> parse_grid_spec(const std::string& spec) {
    if (!spec.starts_with("grid:")) throw std::invalid_argument("not a grid spec: '" + spec + "'");
    std::string dims = spec.substr(5);
    auto x = dims.find_first_of("xX");
    if (x == std::string::npos)
        throw std::invalid_argument("grid spec must look like grid:MxN: '" + spec + "'");
    return {std::stoi(dims.substr(0, x)), std::stoi(dims.substr(x + 1))};
}

Poset load_poset(const std::string& spec, std::vector<std::string>* warnings,
                 const Guards& guards) {
    if (spec.starts_with("grid:")) {
        auto [m, n] = parse_grid_spec(spec);
        return Poset::grid(m, n);
    }
    if (spec.starts_with("young:")) {
        return Poset::young(parse_int_list(spec.substr(6)));
    }
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open poset file '" + spec + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed poset file '" + spec + "': " + e.what());
    }
    return poset_from_json(j, warnings, guards);
}

Poset poset_from_json(const nlohmann::json& j, std::vector<std::string>* warnings,
                      const Guards& guards) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("covers"))
        throw std::invalid_argument("poset JSON needs 'labels' and 'covers'");
    std::vector<std::string> labels;
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& pair : j.at("covers")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("cover entries must be [lower, upper] pairs");
        covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return Poset::from_covers(std::move(labels), covers, warnings, guards);
}

nlohmann::json poset_to_json(const Poset& p) {
    nlohmann::json j;
    j["labels"] = p.labels();
    auto covers = nlohmann::json::array();
    for (auto [u, v] : p.cover_pairs()) covers.push_back({p.label(u), p.label(v)});
    j["covers"] = covers;
    return j;
}

std::vector<Rat> weights_from_json(const nlohmann::json& j, int n) {
    if (!j.is_array())
        throw std::invalid_argument("weight vector must be a JSON array");
    if (static_cast<int>(j.size()) != n)
        throw std::invalid_argument("weight vector has " + std::to_string(j.size()) +
                                    " entries, expected " + std::to_string(n));
    std::vector<Rat> w;
    w.reserve(j.size());
    for (const auto& entry : j) {
        if (entry.is_string())
            w.push_back(rat_from_string(entry.get<std::string>()));
        else if (entry.is_number_integer())
            w.push_back(rat(entry.get<long>()));
        else
            throw std::invalid_argument("weight entries must be integers or 'p/q' strings");
    }
    return w;
}

nlohmann::json weights_to_json(const std::vector<Rat>& w) {
    auto j = nlohmann::json::array();
    for (const Rat& q : w) j.push_back(to_string(q));
    return j;
}

std::vector<Rat> parse_rates(const std::string& text, int n) {
    std::vector<Rat> rates;
    if (text == "unit") {
        rates.assign(n, Rat(1));
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) rates.push_back(rat_from_string(item));
        if (static_cast<int>(rates.size()) != n)
            throw std::invalid_argument("expected " + std::to_string(n) + " rates, got " +
                                        std::to_string(rates.size()));
    }
    for (const Rat& r : rates)
        if (r <= 0) throw std::invalid_argument("rates must be positive");
    return rates;
}

}  // namespace lppcone
