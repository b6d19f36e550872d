#include "lppcone/simplex.hpp"

#include <stdexcept>

namespace lppcone {

void LPProblem::add_row(std::vector<Rat> coeffs, Sense sense, Rat b) {
    if (static_cast<int>(coeffs.size()) != num_vars)
        throw std::invalid_argument("constraint dimension mismatch");
    rows.push_back(std::move(coeffs));
    senses.push_back(sense);
    rhs.push_back(std::move(b));
}

namespace {

// Dense phase-one tableau. Column layout: structural columns (free
// variables sign-split into a plus and minus part), then slacks for the
// inequality rows, then one artificial per row that needs one.
struct Tableau {
    int m = 0, ncols = 0;
    std::vector<std::vector<Rat>> a;  // m x ncols
    std::vector<Rat> b;               // m
    std::vector<int> basis;           // m, column index of the basic variable
    std::vector<Rat> obj;             // reduced cost row (phase-one)
    Rat obj_value = 0;

    void pivot(int row, int col) {
        Rat inv = a[row][col];
        for (int j = 0; j < ncols; ++j) a[row][j] /= inv;
        b[row] /= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = 0; j < ncols; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        if (obj[col] != 0) {
            Rat f = obj[col];
            for (int j = 0; j < ncols; ++j) obj[j] -= f * a[row][j];
            obj_value -= f * b[row];
        }
        basis[row] = col;
    }
};

}  // namespace

LPResult lp_feasible(const LPProblem& problem) {
    const int n = problem.num_vars;
    const int m = static_cast<int>(problem.rows.size());
    if (static_cast<int>(problem.senses.size()) != m || static_cast<int>(problem.rhs.size()) != m)
        throw std::invalid_argument("inconsistent LP dimensions");
    if (!problem.nonneg.empty() && static_cast<int>(problem.nonneg.size()) != n)
        throw std::invalid_argument("inconsistent LP dimensions");

    auto is_nonneg = [&](int j) { return !problem.nonneg.empty() && problem.nonneg[j]; };

    // Column layout.
    std::vector<int> plus_col(n), minus_col(n, -1);
    int ncols = 0;
    for (int j = 0; j < n; ++j) {
        plus_col[j] = ncols++;
        if (!is_nonneg(j)) minus_col[j] = ncols++;
    }
    std::vector<int> slack_col(m, -1);
    for (int i = 0; i < m; ++i)
        if (problem.senses[i] == Sense::Geq) slack_col[i] = ncols++;
    const int first_artificial = ncols;

    Tableau t;
    t.m = m;
    t.a.assign(m, {});
    t.b.assign(m, Rat(0));
    t.basis.assign(m, -1);

    std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(first_artificial, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rat& c = problem.rows[i][j];
            if (c == 0) continue;
            rows[i][plus_col[j]] = c;
            if (minus_col[j] >= 0) rows[i][minus_col[j]] = -c;
        }
        if (slack_col[i] >= 0) rows[i][slack_col[i]] = -1;  // <a,x> - s = b
        Rat b = problem.rhs[i];
        if (b < 0) {
            for (Rat& c : rows[i]) c = -c;
            b = -b;
        }
        t.b[i] = b;
        // A slack that survived the sign flip with coefficient +1 can start
        // in the basis; every other row gets an artificial.
        if (slack_col[i] >= 0 && rows[i][slack_col[i]] == 1) t.basis[i] = slack_col[i];
    }
    int artificials = 0;
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < 0) ++artificials;
    t.ncols = first_artificial + artificials;
    for (int i = 0, next = first_artificial; i < m; ++i) {
        rows[i].resize(t.ncols, Rat(0));
        if (t.basis[i] < 0) {
            rows[i][next] = 1;
            t.basis[i] = next++;
        }
        t.a[i] = std::move(rows[i]);
    }

    // Phase-one objective: minimize the sum of artificials. Reduced costs
    // start as minus the sum of the artificial-basic rows.
    t.obj.assign(t.ncols, Rat(0));
    for (int j = first_artificial; j < t.ncols; ++j) t.obj[j] = 1;
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < first_artificial) continue;
        for (int j = 0; j < t.ncols; ++j) t.obj[j] -= t.a[i][j];
        t.obj_value -= t.b[i];
    }

    // Bland's rule: lowest-index entering column, lowest basic-variable
    // index among the tied leaving rows. Guarantees termination.
    for (;;) {
        int enter = -1;
        for (int j = 0; j < t.ncols; ++j)
            if (t.obj[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rat best_ratio = 0;
        for (int i = 0; i < m; ++i) {
            if (t.a[i][enter] <= 0) continue;
            Rat ratio = t.b[i] / t.a[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw std::logic_error("phase-one objective unbounded");
        t.pivot(leave, enter);
    }

    LPResult result;
    if (t.obj_value != 0) {
        result.feasible = false;
        return result;
    }

    result.feasible = true;
    std::vector<Rat> cols(t.ncols, Rat(0));
    for (int i = 0; i < m; ++i) cols[t.basis[i]] = t.b[i];
    result.witness.assign(n, Rat(0));
    for (int j = 0; j < n; ++j) {
        result.witness[j] = cols[plus_col[j]];
        if (minus_col[j] >= 0) result.witness[j] -= cols[minus_col[j]];
    }

    for (int i = 0; i < m; ++i) {
        Rat lhs = 0;
        for (int j = 0; j < n; ++j) lhs += problem.rows[i][j] * result.witness[j];
        bool ok = problem.senses[i] == Sense::Eq ? lhs == problem.rhs[i] : lhs >= problem.rhs[i];
        if (!ok) throw std::logic_error("simplex witness violates a constraint");
    }
    for (int j = 0; j < n; ++j)
        if (is_nonneg(j) && result.witness[j] < 0)
            throw std::logic_error("simplex witness violates a sign constraint");
    return result;
}

bool is_redundant(const std::vector<std::vector<Rat>>& system, std::size_t index) {
    if (index >= system.size()) throw std::invalid_argument("normal not in system");
    const int n = static_cast<int>(system[index].size());
    LPProblem lp;
    lp.num_vars = n;
    for (std::size_t k = 0; k < system.size(); ++k) {
        if (k == index) continue;
        lp.add_row(system[k], Sense::Geq, Rat(0));
    }
    // Strict violation normalized by homogeneity: <eta, w> <= -1.
    std::vector<Rat> neg(n);
    for (int j = 0; j < n; ++j) neg[j] = -system[index][j];
    lp.add_row(std::move(neg), Sense::Geq, Rat(1));
    return !lp_feasible(lp).feasible;
}

bool in_conic_hull(const std::vector<Rat>& target, const std::vector<std::vector<Rat>>& rays) {
    const int n = static_cast<int>(target.size());
    const int r = static_cast<int>(rays.size());
    for (const auto& ray : rays)
        if (static_cast<int>(ray.size()) != n)
            throw std::invalid_argument("ray dimension mismatch");
    if (r == 0) {
        for (const Rat& x : target)
            if (x != 0) return false;
        return true;
    }
    LPProblem lp;
    lp.num_vars = r;
    lp.nonneg.assign(r, true);
    for (int v = 0; v < n; ++v) {
        std::vector<Rat> row(r);
        for (int i = 0; i < r; ++i) row[i] = rays[i][v];
        lp.add_row(std::move(row), Sense::Eq, target[v]);
    }
    return lp_feasible(lp).feasible;
}

}  // namespace lppcone
