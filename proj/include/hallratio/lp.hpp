#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "hallratio/constraint.hpp"
#include "hallratio/errors.hpp"
#include "hallratio/rational.hpp"

namespace hallratio {

// min objective . alpha  subject to  row . alpha >= 1 for every row,
// alpha >= 0. All data exact rationals; objectives are nonnegative.
struct LinearProgram {
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> rows;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LPStatus s) {
    switch (s) {
        case LPStatus::Optimal: return "optimal";
        case LPStatus::Infeasible: return "infeasible";
        default: return "unbounded";
    }
}

struct LPSolution {
    LPStatus status = LPStatus::Optimal;
    Rational value;
    std::vector<Rational> alpha;
    std::vector<int> tight_rows;  // rows with row . alpha == 1
    std::vector<Rational> dual;   // one multiplier per (normalized) row
};

// Objective of LP (4.1): alpha_0 + sum_i alpha_i d(d-1)^{i-1} counts the
// paths of each length from a vertex of a d-regular graph.
inline std::vector<Rational> vertex_lp_objective(int d, int r) {
    std::vector<Rational> obj(r + 1);
    obj[0] = 1;
    Rational paths = d;
    for (int i = 1; i <= r; ++i) {
        obj[i] = paths;
        paths *= d - 1;
    }
    return obj;
}

// Objective of LP (4.2): 2 sum_i alpha_i (d-1)^i, counting paths that start
// with a fixed edge.
inline std::vector<Rational> edge_lp_objective(int d, int r) {
    std::vector<Rational> obj(r + 1);
    Rational paths = 2;
    for (int i = 0; i <= r; ++i) {
        obj[i] = paths;
        paths *= d - 1;
    }
    return obj;
}

inline LinearProgram build_lp(std::vector<Rational> objective,
                              const std::vector<std::vector<Rational>>& rows) {
    LinearProgram lp;
    lp.objective = std::move(objective);
    for (const auto& row : rows) {
        if (row.size() != lp.objective.size())
            throw PreconditionError("LP row length " + std::to_string(row.size()) +
                                    " does not match objective length " +
                                    std::to_string(lp.objective.size()));
        lp.rows.push_back(row);
    }
    return lp;
}

inline LinearProgram build_lp_vertex(const std::vector<Constraint>& cs, int d, int r) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(cs.size());
    for (const auto& c : cs) rows.push_back(c.e);
    return build_lp(vertex_lp_objective(d, r), rows);
}

inline LinearProgram build_lp_edge(const std::vector<Constraint>& cs, int d, int r) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(cs.size());
    for (const auto& c : cs) rows.push_back(c.e);
    return build_lp(edge_lp_objective(d, r), rows);
}

namespace lp_detail {

// Exact simplex with Bland's rule on the dual program
//     max 1.y   s.t.  A^T y <= c,  y >= 0,
// which has only |objective| rows however many constraints the primal has.
// The primal optimum is read off the slack reduced costs.
struct DualSimplex {
    int n;  // primal variables = dual constraints
    int m;  // primal rows = dual variables
    std::vector<std::vector<Rational>> tab;  // n rows, m+n+1 columns
    std::vector<Rational> zrow;              // reduced costs + value
    std::vector<int> basis;

    DualSimplex(const LinearProgram& lp)
        : n(static_cast<int>(lp.objective.size())),
          m(static_cast<int>(lp.rows.size())) {
        tab.assign(n, std::vector<Rational>(m + n + 1, Rational(0)));
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < m; ++i) tab[j][i] = lp.rows[i][j];
            tab[j][m + j] = 1;
            tab[j][m + n] = lp.objective[j];
        }
        zrow.assign(m + n + 1, Rational(0));
        for (int i = 0; i < m; ++i) zrow[i] = -1;  // maximize sum of y
        basis.resize(n);
        for (int j = 0; j < n; ++j) basis[j] = m + j;
    }

    // returns false if the dual is unbounded (primal infeasible)
    bool run() {
        for (;;) {
            int enter = -1;
            for (int q = 0; q < m + n; ++q)
                if (zrow[q] < 0) {
                    enter = q;
                    break;  // Bland: smallest index
                }
            if (enter < 0) return true;

            int leave = -1;
            Rational best;
            for (int j = 0; j < n; ++j) {
                if (tab[j][enter] <= 0) continue;
                Rational ratio = tab[j][m + n] / tab[j][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[j] < basis[leave])) {
                    best = ratio;
                    leave = j;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void pivot(int row, int col) {
        Rational p = tab[row][col];
        for (auto& x : tab[row]) x /= p;
        for (int j = 0; j < n; ++j) {
            if (j == row || tab[j][col] == 0) continue;
            Rational f = tab[j][col];
            for (int k = 0; k <= m + n; ++k) tab[j][k] -= f * tab[row][k];
        }
        if (zrow[col] != 0) {
            Rational f = zrow[col];
            for (int k = 0; k <= m + n; ++k) zrow[k] -= f * tab[row][k];
        }
        basis[row] = col;
    }
};

}  // namespace lp_detail

// Exact feasibility + optimality certificate: alpha primal feasible, dual
// feasible, objectives equal, complementary slackness.
inline bool verify_lp_certificate(const LinearProgram& lp, const LPSolution& sol,
                                  std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = static_cast<int>(lp.objective.size());
    const int m = static_cast<int>(lp.rows.size());
    if (static_cast<int>(sol.alpha.size()) != n) return fail("alpha size");
    if (static_cast<int>(sol.dual.size()) != m) return fail("dual size");
    for (const auto& a : sol.alpha)
        if (a < 0) return fail("alpha negative");
    Rational primal = 0;
    for (int j = 0; j < n; ++j) primal += lp.objective[j] * sol.alpha[j];
    if (primal != sol.value) return fail("objective mismatch");
    std::vector<Rational> slack(m);
    for (int i = 0; i < m; ++i) {
        Rational dot = 0;
        for (int j = 0; j < n; ++j) dot += lp.rows[i][j] * sol.alpha[j];
        if (dot < 1) return fail("primal row violated");
        slack[i] = dot - 1;
    }
    Rational dualval = 0;
    for (int i = 0; i < m; ++i) {
        if (sol.dual[i] < 0) return fail("dual negative");
        dualval += sol.dual[i];
        if (sol.dual[i] != 0 && slack[i] != 0) return fail("complementary slackness (rows)");
    }
    for (int j = 0; j < n; ++j) {
        Rational col = 0;
        for (int i = 0; i < m; ++i) col += sol.dual[i] * lp.rows[i][j];
        if (col > lp.objective[j]) return fail("dual row violated");
        if (sol.alpha[j] != 0 && col != lp.objective[j])
            return fail("complementary slackness (columns)");
    }
    if (dualval != sol.value) return fail("duality gap");
    return true;
}

// Exact minimum of the LP. Deterministic: rows are deduplicated and sorted
// before solving, and Bland's rule fixes the pivot sequence.
inline LPSolution solve_min(const LinearProgram& input) {
    for (const auto& c : input.objective)
        if (c < 0) throw PreconditionError("solve_min expects a nonnegative objective");

    LinearProgram lp;
    lp.objective = input.objective;
    lp.rows = input.rows;
    std::sort(lp.rows.begin(), lp.rows.end());
    lp.rows.erase(std::unique(lp.rows.begin(), lp.rows.end()), lp.rows.end());

    LPSolution sol;
    if (lp.rows.empty()) {
        // nothing to cover: optimum 0 at alpha = 0
        sol.value = 0;
        sol.alpha.assign(lp.objective.size(), Rational(0));
        return sol;
    }

    lp_detail::DualSimplex simplex(lp);
    if (!simplex.run()) {
        sol.status = LPStatus::Infeasible;
        return sol;
    }

    const int n = simplex.n, m = simplex.m;
    sol.alpha.assign(n, Rational(0));
    for (int j = 0; j < n; ++j) sol.alpha[j] = simplex.zrow[m + j];
    std::vector<Rational> dual(m, Rational(0));
    for (int j = 0; j < n; ++j)
        if (simplex.basis[j] < m) dual[simplex.basis[j]] = simplex.tab[j][m + n];
    sol.value = 0;
    for (const auto& y : dual) sol.value += y;

    // map the certificate back to the caller's row order
    sol.dual.assign(input.rows.size(), Rational(0));
    for (size_t i = 0; i < input.rows.size(); ++i) {
        auto it = std::lower_bound(lp.rows.begin(), lp.rows.end(), input.rows[i]);
        size_t k = static_cast<size_t>(it - lp.rows.begin());
        if (dual[k] != 0) {
            sol.dual[i] = dual[k];
            dual[k] = 0;  // assign each multiplier to the first duplicate
        }
    }
    for (size_t i = 0; i < input.rows.size(); ++i) {
        Rational dot = 0;
        for (size_t j = 0; j < input.objective.size(); ++j)
            dot += input.rows[i][j] * sol.alpha[j];
        if (dot == 1) sol.tight_rows.push_back(static_cast<int>(i));
    }

    std::string why;
    if (!verify_lp_certificate(input, sol, &why))
        throw VerificationError("LP certificate check failed: " + why);
    return sol;
}

inline bool non_increasing(const std::vector<Rational>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

// CPLEX LP text format, for cross-checking with external solvers. Rows are
// cleared of denominators so every printed coefficient is an exact integer.
inline std::string export_cplex_lp(const LinearProgram& lp) {
    auto scaled = [](const std::vector<Rational>& row) {
        Int l = 1;
        for (const auto& x : row) l = boost::multiprecision::lcm(l, den(x));
        std::vector<Int> out;
        out.reserve(row.size() + 1);
        for (const auto& x : row) out.push_back(num(x) * (l / den(x)));
        out.push_back(l);  // right-hand side
        return out;
    };
    std::ostringstream os;
    os << "Minimize\n obj:";
    auto obj = scaled(lp.objective);
    for (size_t j = 0; j + 1 < obj.size(); ++j) os << " + " << obj[j] << " a" << j;
    if (obj.back() != 1) os << "\n\\ objective scaled by " << obj.back();
    os << "\nSubject To\n";
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        auto row = scaled(lp.rows[i]);
        os << " c" << i << ":";
        for (size_t j = 0; j + 1 < row.size(); ++j)
            if (row[j] != 0) os << " + " << row[j] << " a" << j;
        os << " >= " << row.back() << "\n";
    }
    os << "Bounds\n";
    for (size_t j = 0; j < lp.objective.size(); ++j) os << " a" << j << " >= 0\n";
    os << "End\n";
    return os.str();
}

}  // namespace hallratio
