#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maprad/rational.hpp"

namespace maprad {

// Exact rational linear program. Variables carry optional bounds
// (nullopt = unbounded on that side); constraints are sparse rows.
struct LpProblem {
    enum class Sense { minimize, maximize };
    enum class Rel { le, eq, ge };

    struct Row {
        std::vector<std::pair<int, Rat>> coeffs;
        Rel rel = Rel::le;
        Rat rhs;
    };

    std::vector<std::string> var_ids;
    std::vector<std::optional<Rat>> lower;
    std::vector<std::optional<Rat>> upper;
    Sense sense = Sense::minimize;
    std::vector<std::pair<int, Rat>> objective;
    std::vector<Row> rows;

    int add_var(std::string id, std::optional<Rat> lo = Rat(0),
                std::optional<Rat> hi = std::nullopt) {
        var_ids.push_back(std::move(id));
        lower.push_back(std::move(lo));
        upper.push_back(std::move(hi));
        return static_cast<int>(var_ids.size()) - 1;
    }

    void add_row(std::vector<std::pair<int, Rat>> coeffs, Rel rel, Rat rhs) {
        rows.push_back(Row{std::move(coeffs), rel, std::move(rhs)});
    }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rat value;                   // objective value when optimal
    std::vector<Rat> assignment; // per declared variable when optimal
};

// Primal simplex on exact rationals with Bland's anti-cycling rule.
// Deterministic; returned optima are basic (vertex) solutions.
LpSolution solve_lp(const LpProblem& p);

// True iff s claims optimal, satisfies every bound and constraint exactly,
// and its objective matches s.value.
bool check_solution(const LpProblem& p, const LpSolution& s);

} // namespace maprad
