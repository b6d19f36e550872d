#pragma once

#include <optional>
#include <vector>

#include "lppcone/rational.hpp"

namespace lppcone {

enum class Sense { Geq, Eq };

/// A rational feasibility problem over free variables (per-variable
/// nonnegativity can be switched on to avoid sign-splitting).
struct LPProblem {
    int num_vars = 0;
    std::vector<std::vector<Rat>> rows;
    std::vector<Sense> senses;
    std::vector<Rat> rhs;
    std::vector<bool> nonneg;                   // empty means all variables free
    std::optional<std::vector<Rat>> objective;  // unused by the feasibility solver

    void add_row(std::vector<Rat> coeffs, Sense sense, Rat b);
};

struct LPResult {
    bool feasible = false;
    std::vector<Rat> witness;  // a satisfying point when feasible
};

/// Exact phase-one simplex with Bland's rule. The returned witness is
/// re-checked against every constraint before being handed back.
LPResult lp_feasible(const LPProblem& problem);

/// True iff dropping system[index] does not enlarge the homogeneous cone
/// {w : <row, w> >= 0 for all rows}, decided by the exact feasibility of
/// {<row_k, w> >= 0 for k != index, <system[index], w> <= -1}.
bool is_redundant(const std::vector<std::vector<Rat>>& system, std::size_t index);

/// True iff target is a nonnegative combination of the rays.
bool in_conic_hull(const std::vector<Rat>& target, const std::vector<std::vector<Rat>>& rays);

}  // namespace lppcone
