#include "maprad/lp.hpp"

#include <algorithm>

namespace maprad {

namespace {

// Standard-form image of one declared variable.
struct VarMap {
    enum class Kind { shifted, negated, split } kind;
    int col = -1;  // primary column
    int col2 = -1; // negative part for split variables
    Rat base;      // x = base + u  /  x = base - u  /  x = u - w
};

struct Tableau {
    int m = 0;                          // rows
    int n = 0;                          // structural columns
    std::vector<std::vector<Rat>> a;    // m x (n+1), last column = rhs
    std::vector<int> basis;             // basis[i] = column basic in row i
    std::vector<Rat> cost;              // n+1 entries; last = -objective
};

void pivot(Tableau& t, int row, int col) {
    auto& prow = t.a[row];
    const Rat inv = Rat(1) / prow[col];
    if (inv != Rat(1))
        for (auto& v : prow)
            if (v.sign() != 0) v *= inv;
    for (int i = 0; i < t.m; ++i) {
        if (i == row) continue;
        const Rat factor = t.a[i][col];
        if (factor.sign() == 0) continue;
        auto& rrow = t.a[i];
        for (int j = 0; j <= t.n; ++j)
            if (prow[j].sign() != 0) rrow[j] -= factor * prow[j];
    }
    const Rat cfactor = t.cost[col];
    if (cfactor.sign() != 0)
        for (int j = 0; j <= t.n; ++j)
            if (prow[j].sign() != 0) t.cost[j] -= cfactor * prow[j];
    t.basis[row] = col;
}

// One simplex step. Entering rule: Dantzig (most negative reduced cost)
// until the walk stalls on degenerate pivots, then Bland's smallest-index
// rule, which cannot cycle. Leaving rule always breaks ratio ties by the
// smallest basic column, as Bland requires. Returns false at optimality,
// throws the unbounded marker otherwise.
struct Unbounded {};

constexpr int kDegenerateStallLimit = 64;

bool simplex_step(Tableau& t, int ncols, bool bland) {
    int enter = -1;
    if (bland) {
        for (int j = 0; j < ncols; ++j)
            if (t.cost[j].sign() < 0) {
                enter = j;
                break;
            }
    } else {
        for (int j = 0; j < ncols; ++j)
            if (t.cost[j].sign() < 0 && (enter < 0 || t.cost[j] < t.cost[enter])) enter = j;
    }
    if (enter < 0) return false;
    int leave = -1;
    Rat best_ratio;
    for (int i = 0; i < t.m; ++i) {
        if (t.a[i][enter].sign() <= 0) continue;
        Rat ratio = t.a[i][t.n] / t.a[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
            leave = i;
            best_ratio = ratio;
        }
    }
    if (leave < 0) throw Unbounded{};
    pivot(t, leave, enter);
    return true;
}

void run_simplex(Tableau& t, int ncols) {
    bool bland = false;
    int stalled = 0;
    Rat last_obj = t.cost[t.n];
    while (simplex_step(t, ncols, bland)) {
        if (bland) continue;
        if (t.cost[t.n] == last_obj) {
            if (++stalled >= kDegenerateStallLimit) bland = true;
        } else {
            stalled = 0;
            last_obj = t.cost[t.n];
        }
    }
}

} // namespace

LpSolution solve_lp(const LpProblem& p) {
    const int nvars = static_cast<int>(p.var_ids.size());
    for (const auto& [j, c] : p.objective)
        if (j < 0 || j >= nvars)
            throw DomainError("MalformedProblem", "objective references unknown variable");
    for (const auto& row : p.rows)
        for (const auto& [j, c] : row.coeffs)
            if (j < 0 || j >= nvars)
                throw DomainError("MalformedProblem", "constraint references unknown variable");
    for (int j = 0; j < nvars; ++j)
        if (p.lower[j] && p.upper[j] && *p.lower[j] > *p.upper[j])
            throw DomainError("MalformedProblem",
                              "inconsistent bounds on " + p.var_ids[j]);

    // Map every variable to nonnegative standard-form columns.
    std::vector<VarMap> vmap(nvars);
    int ncols = 0;
    std::vector<LpProblem::Row> extra_rows; // finite two-sided bounds
    for (int j = 0; j < nvars; ++j) {
        VarMap& v = vmap[j];
        if (p.lower[j]) {
            v.kind = VarMap::Kind::shifted;
            v.base = *p.lower[j];
            v.col = ncols++;
            if (p.upper[j])
                extra_rows.push_back({{{j, Rat(1)}}, LpProblem::Rel::le, *p.upper[j]});
        } else if (p.upper[j]) {
            v.kind = VarMap::Kind::negated;
            v.base = *p.upper[j];
            v.col = ncols++;
        } else {
            v.kind = VarMap::Kind::split;
            v.col = ncols++;
            v.col2 = ncols++;
        }
    }

    std::vector<LpProblem::Row> all_rows = p.rows;
    all_rows.insert(all_rows.end(), extra_rows.begin(), extra_rows.end());
    const int m = static_cast<int>(all_rows.size());

    // Substitute variable transforms, emit equality rows with slacks.
    int nslack = 0;
    for (const auto& row : all_rows)
        if (row.rel != LpProblem::Rel::eq) ++nslack;

    // Rows whose slack survives with coefficient +1 start basic in it;
    // only the others need a phase-1 artificial.
    std::vector<std::vector<Rat>> rowdata(m, std::vector<Rat>(ncols + nslack + 1, Rat(0)));
    std::vector<int> slack_col(m, -1);
    std::vector<bool> needs_artificial(m, false);
    {
        int slack_at = ncols;
        for (int i = 0; i < m; ++i) {
            const auto& row = all_rows[i];
            auto& out = rowdata[i];
            Rat rhs = row.rhs;
            const Rat sgn_flip = row.rel == LpProblem::Rel::ge ? Rat(-1) : Rat(1);
            for (const auto& [j, c] : row.coeffs) {
                const VarMap& v = vmap[j];
                const Rat coeff = c * sgn_flip;
                switch (v.kind) {
                    case VarMap::Kind::shifted:
                        out[v.col] += coeff;
                        rhs -= c * v.base;
                        break;
                    case VarMap::Kind::negated:
                        out[v.col] -= coeff;
                        rhs -= c * v.base;
                        break;
                    case VarMap::Kind::split:
                        out[v.col] += coeff;
                        out[v.col2] -= coeff;
                        break;
                }
            }
            rhs *= sgn_flip;
            if (row.rel != LpProblem::Rel::eq) {
                slack_col[i] = slack_at;
                out[slack_at++] = Rat(1);
            }
            out[ncols + nslack] = rhs;
            if (rhs.sign() < 0)
                for (auto& v : out)
                    if (v.sign() != 0) v = -v;
            needs_artificial[i] =
                slack_col[i] < 0 || out[slack_col[i]].sign() < 0;
        }
    }

    int nart = 0;
    for (int i = 0; i < m; ++i)
        if (needs_artificial[i]) ++nart;

    Tableau t;
    t.m = m;
    const int art0 = ncols + nslack;
    t.n = art0 + nart;
    t.a.assign(m, std::vector<Rat>(t.n + 1, Rat(0)));
    t.basis.assign(m, -1);
    t.cost.assign(t.n + 1, Rat(0));
    {
        int art_at = art0;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < art0; ++j) t.a[i][j] = std::move(rowdata[i][j]);
            t.a[i][t.n] = std::move(rowdata[i][art0]);
            if (needs_artificial[i]) {
                t.a[i][art_at] = Rat(1);
                t.basis[i] = art_at++;
                for (int j = 0; j <= t.n; ++j)
                    if (t.a[i][j].sign() != 0 && j != t.basis[i]) t.cost[j] -= t.a[i][j];
            } else {
                t.basis[i] = slack_col[i];
            }
        }
    }

    LpSolution sol;
    try {
        run_simplex(t, t.n);
    } catch (const Unbounded&) {
        throw DomainError("MalformedProblem", "phase-1 unbounded (internal)");
    }
    if (t.cost[t.n].sign() != 0) { // -objective != 0 means artificials remain
        sol.status = LpStatus::infeasible;
        return sol;
    }
    // Drive residual artificials out of the basis; drop redundant rows.
    for (int i = 0; i < t.m;) {
        if (t.basis[i] < art0) {
            ++i;
            continue;
        }
        int col = -1;
        for (int j = 0; j < art0; ++j)
            if (t.a[i][j].sign() != 0) {
                col = j;
                break;
            }
        if (col >= 0) {
            pivot(t, i, col);
            ++i;
        } else {
            t.a.erase(t.a.begin() + i);
            t.basis.erase(t.basis.begin() + i);
            --t.m;
        }
    }

    // Phase 2 over structural columns only.
    const int ncols2 = art0;
    std::vector<Rat> c2(t.n + 1, Rat(0));
    const Rat obj_sign = p.sense == LpProblem::Sense::maximize ? Rat(-1) : Rat(1);
    for (const auto& [j, c] : p.objective) {
        const VarMap& v = vmap[j];
        const Rat cc = c * obj_sign;
        switch (v.kind) {
            case VarMap::Kind::shifted:
                c2[v.col] += cc;
                break;
            case VarMap::Kind::negated:
                c2[v.col] -= cc;
                break;
            case VarMap::Kind::split:
                c2[v.col] += cc;
                c2[v.col2] -= cc;
                break;
        }
    }
    t.cost = c2;
    for (int i = 0; i < t.m; ++i) {
        const Rat cb = c2[t.basis[i]];
        if (cb.sign() == 0) continue;
        for (int j = 0; j <= t.n; ++j)
            if (t.a[i][j].sign() != 0) t.cost[j] -= cb * t.a[i][j];
    }

    try {
        run_simplex(t, ncols2);
    } catch (const Unbounded&) {
        sol.status = LpStatus::unbounded;
        return sol;
    }

    std::vector<Rat> u(t.n, Rat(0));
    for (int i = 0; i < t.m; ++i) u[t.basis[i]] = t.a[i][t.n];
    sol.assignment.assign(nvars, Rat(0));
    for (int j = 0; j < nvars; ++j) {
        const VarMap& v = vmap[j];
        switch (v.kind) {
            case VarMap::Kind::shifted:
                sol.assignment[j] = v.base + u[v.col];
                break;
            case VarMap::Kind::negated:
                sol.assignment[j] = v.base - u[v.col];
                break;
            case VarMap::Kind::split:
                sol.assignment[j] = u[v.col] - u[v.col2];
                break;
        }
    }
    sol.value = Rat(0);
    for (const auto& [j, c] : p.objective) sol.value += c * sol.assignment[j];
    sol.status = LpStatus::optimal;
    return sol;
}

bool check_solution(const LpProblem& p, const LpSolution& s) {
    if (s.status != LpStatus::optimal) return false;
    if (s.assignment.size() != p.var_ids.size()) return false;
    for (std::size_t j = 0; j < p.var_ids.size(); ++j) {
        if (p.lower[j] && s.assignment[j] < *p.lower[j]) return false;
        if (p.upper[j] && s.assignment[j] > *p.upper[j]) return false;
    }
    for (const auto& row : p.rows) {
        Rat lhs(0);
        for (const auto& [j, c] : row.coeffs) lhs += c * s.assignment[j];
        switch (row.rel) {
            case LpProblem::Rel::le:
                if (lhs > row.rhs) return false;
                break;
            case LpProblem::Rel::eq:
                if (lhs != row.rhs) return false;
                break;
            case LpProblem::Rel::ge:
                if (lhs < row.rhs) return false;
                break;
        }
    }
    Rat obj(0);
    for (const auto& [j, c] : p.objective) obj += c * s.assignment[j];
    return obj == s.value;
}

} // namespace maprad
