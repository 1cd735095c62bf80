#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "maprad/metric_space.hpp"
#include "maprad/rational.hpp"

namespace maprad {

// Finitely supported real measure on the points of a space, kept as
// point index -> nonzero rational coefficient.
struct SignedMeasure {
    std::map<int, Rat> coeffs;

    Rat total() const {
        Rat s(0);
        for (const auto& [i, c] : coeffs) s += c;
        return s;
    }
    bool in_u0() const { return total() == Rat(0); }
    bool in_u1() const { return total() == Rat(1); }

    void add(int point, const Rat& c) {
        auto it = coeffs.find(point);
        if (it == coeffs.end()) {
            if (c.sign() != 0) coeffs.emplace(point, c);
            return;
        }
        it->second += c;
        if (it->second.sign() == 0) coeffs.erase(it);
    }

    std::vector<int> positive_support() const {
        std::vector<int> s;
        for (const auto& [i, c] : coeffs)
            if (c.sign() > 0) s.push_back(i);
        return s;
    }
    std::vector<int> negative_support() const {
        std::vector<int> s;
        for (const auto& [i, c] : coeffs)
            if (c.sign() < 0) s.push_back(i);
        return s;
    }

    friend bool operator==(const SignedMeasure& a, const SignedMeasure& b) {
        return a.coeffs == b.coeffs;
    }
};

// Nonnegative measure on ordered point pairs (y != z), weights > 0.
struct TransportPlan {
    std::map<std::pair<int, int>, Rat> weights;

    friend bool operator==(const TransportPlan& a, const TransportPlan& b) {
        return a.weights == b.weights;
    }
};

Rat plan_cost(const FiniteMetricSpace& x, const TransportPlan& plan);

// Directed pair graph of a plan with the derived support/cycle data.
struct PlanGraph {
    std::vector<std::pair<int, int>> edges;
    std::set<int> positive_support; // initial points
    std::set<int> negative_support; // terminal points
    bool acyclic = true;            // undirected sense
};

PlanGraph plan_graph(const TransportPlan& plan);

// Linear extension of D(nu_{x,y}) = mu_x - mu_y; lands in U0.
SignedMeasure boundary(const TransportPlan& plan);

struct AeNormResult {
    Rat value;
    TransportPlan plan; // acyclic, supports matching mu's
};

// Arens-Eells (Lipschitz-free) norm of mu in U0, with an optimal plan in
// normal form: acyclic pair graph, positive/negative supports equal to
// mu's. Throws NotInU0 on nonzero total mass.
AeNormResult ae_norm(const FiniteMetricSpace& x, const SignedMeasure& mu);

// The unique plan supported inside the given forest with boundary mu,
// coefficients determined by component sums. Throws CycleInForest /
// SupportMismatch / UnbalancedComponent / NonPositiveCoefficient.
TransportPlan plan_from_forest(const SignedMeasure& mu,
                               const std::vector<std::pair<int, int>>& forest);

struct EnumeratedPlan {
    TransportPlan plan;
    Rat cost;
};

// All plans with boundary mu whose graphs are acyclic with supports equal
// to mu's (the normal-form plans); the minimum cost over the list equals
// ae_norm. Exhaustive over forests of the positive-to-negative support
// bipartite graph. Throws BudgetExceeded when the combined support exceeds
// the budget.
std::vector<EnumeratedPlan> enumerate_acyclic_plans(const FiniteMetricSpace& x,
                                                    const SignedMeasure& mu,
                                                    int budget = 10);

// ae_norm(mu_a + mu_b - mu_c - mu_d) for four distinct points; equals
// min(d(a,c)+d(b,d), d(a,d)+d(b,c)).
Rat difference_norm_bound(const FiniteMetricSpace& x, int a, int b, int c, int d);

} // namespace maprad
