#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lppcone {

/// Thrown when an enumeration would exceed a configured size cap. The
/// message always carries the offending count.
struct GuardExceeded : std::runtime_error {
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Size caps for the exponential enumerations. Every cap can be overridden
/// via environment variables (LPPCONE_MAX_POSET, LPPCONE_MAX_EXTENSION_POSET,
/// LPPCONE_MAX_EXTENSIONS, LPPCONE_MAX_IDEALS) or per call.
struct Guards {
    // Order relations are kept in 64-bit reachability masks, so 64 is a hard
    // upper bound as well as the default cap.
    int max_poset_size = 64;
    // Cap on |P| for explicit linear-extension enumeration.
    int max_extension_poset = 20;
    // Cap on the number of enumerated linear extensions.
    std::size_t max_extensions = 1'000'000;
    // Cap on the number of order ideals visited by the counting DP.
    std::size_t max_ideals = 2'000'000;

    static Guards from_env();
};

}  // namespace lppcone
