#include "dzext/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace dzext {

namespace {

// Tableau layout:
//   columns [0, n)   decision variables (phase-2 objective lives here too)
//   column  n        right-hand side
// One extra row at the bottom holds the reduced costs of the active
// objective; basis[r] names the variable basic in row r.
struct Tableau {
    int m = 0;           // constraint rows
    int n = 0;           // columns excluding rhs
    std::vector<std::vector<Rational>> t;  // (m + 1) x (n + 1)
    std::vector<int> basis;

    Rational& obj(int j) { return t[m][j]; }
    const Rational& obj(int j) const { return t[m][j]; }

    void pivot(int pr, int pc) {
        Rational inv = Rational(1) / t[pr][pc];
        for (int j = 0; j <= n; ++j) t[pr][j] *= inv;
        for (int i = 0; i <= m; ++i) {
            if (i == pr) continue;
            Rational f = t[i][pc];
            if (f == 0) continue;
            for (int j = 0; j <= n; ++j) t[i][j] -= f * t[pr][j];
        }
        basis[pr] = pc;
    }

    // Returns false when the objective row has no negative entry left.
    // `allowed` limits which columns may enter (phase 1 keeps artificials
    // out once driven from the basis).
    bool step(const std::vector<char>& allowed, bool bland) {
        int pc = -1;
        if (bland) {
            for (int j = 0; j < n; ++j) {
                if (allowed[j] && obj(j) < 0) {
                    pc = j;
                    break;
                }
            }
        } else {
            Rational best;
            for (int j = 0; j < n; ++j) {
                if (allowed[j] && obj(j) < 0 && (pc < 0 || obj(j) < best)) {
                    best = obj(j);
                    pc = j;
                }
            }
        }
        if (pc < 0) return false;

        int pr = -1;
        Rational best_ratio;
        for (int i = 0; i < m; ++i) {
            if (t[i][pc] <= 0) continue;
            Rational ratio = t[i][n] / t[i][pc];
            if (pr < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[pr])) {
                best_ratio = ratio;
                pr = i;
            }
        }
        if (pr < 0) throw std::domain_error("unbounded");
        pivot(pr, pc);
        return true;
    }
};

// Runs the simplex loop on the current objective row. Degenerate streaks
// flip pricing to Bland's rule, which terminates on any rational input.
void run(Tableau& tab, const std::vector<char>& allowed) {
    int degenerate_streak = 0;
    bool bland = false;
    Rational last_obj = tab.obj(tab.n);
    while (tab.step(allowed, bland)) {
        if (tab.obj(tab.n) == last_obj) {
            if (++degenerate_streak > 2 * (tab.m + tab.n)) bland = true;
        } else {
            degenerate_streak = 0;
            bland = false;
            last_obj = tab.obj(tab.n);
        }
    }
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
    const int m = lp.num_rows();
    const int n = lp.num_cols();

    Tableau tab;
    tab.m = m;
    tab.n = n + m;  // decision columns + one artificial per row
    tab.t.assign(m + 1, std::vector<Rational>(tab.n + 1, Rational(0)));
    tab.basis.resize(m);

    for (int i = 0; i < m; ++i) {
        Rational sign = lp.rhs[i] < 0 ? Rational(-1) : Rational(1);
        for (int j = 0; j < n; ++j) tab.t[i][j] = sign * lp.rows[i][j];
        tab.t[i][tab.n] = sign * lp.rhs[i];
        tab.t[i][n + i] = 1;
        tab.basis[i] = n + i;
    }

    // Phase 1: minimize the sum of artificials. Express that objective in
    // terms of the nonbasic columns by subtracting each constraint row.
    for (int j = 0; j <= tab.n; ++j) {
        Rational s(0);
        for (int i = 0; i < m; ++i) s += tab.t[i][j];
        tab.obj(j) = (j >= n && j < tab.n) ? Rational(0) : -s;
    }

    std::vector<char> allowed(tab.n, 1);
    LpResult res;
    try {
        run(tab, allowed);
    } catch (const std::domain_error&) {
        // Phase 1 is bounded below by 0; unboundedness cannot happen.
        res.status = LpStatus::Infeasible;
        return res;
    }
    if (tab.obj(tab.n) != 0) {
        res.status = LpStatus::Infeasible;
        return res;
    }

    // Drive any artificial still basic at value 0 out of the basis, or drop
    // its (redundant) row if no real column can replace it.
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        int pc = -1;
        for (int j = 0; j < n; ++j) {
            if (tab.t[i][j] != 0) {
                pc = j;
                break;
            }
        }
        if (pc >= 0) tab.pivot(i, pc);
    }

    // Phase 2: install the real objective, priced against the basis.
    for (int j = 0; j <= tab.n; ++j) tab.obj(j) = 0;
    for (int j = 0; j < n; ++j) tab.obj(j) = lp.cost[j];
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) continue;
        Rational f = tab.obj(tab.basis[i]);
        if (f == 0) continue;
        for (int j = 0; j <= tab.n; ++j) tab.obj(j) -= f * tab.t[i][j];
    }
    for (int j = n; j < tab.n; ++j) allowed[j] = 0;

    try {
        run(tab, allowed);
    } catch (const std::domain_error&) {
        res.status = LpStatus::Unbounded;
        return res;
    }

    res.status = LpStatus::Optimal;
    res.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][tab.n];
    }
    res.objective = 0;
    for (int j = 0; j < n; ++j) res.objective += lp.cost[j] * res.x[j];
    return res;
}

}  // namespace dzext
