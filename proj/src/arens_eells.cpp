#include "maprad/arens_eells.hpp"

#include <algorithm>
#include <functional>

#include "maprad/lp.hpp"

namespace maprad {

Rat plan_cost(const FiniteMetricSpace& x, const TransportPlan& plan) {
    Rat c(0);
    for (const auto& [pair, w] : plan.weights) c += w * x.dist(pair.first, pair.second);
    return c;
}

PlanGraph plan_graph(const TransportPlan& plan) {
    PlanGraph g;
    std::map<int, int> comp; // union-find over touched vertices
    std::function<int(int)> find = [&](int v) {
        if (comp[v] == v) return v;
        return comp[v] = find(comp[v]);
    };
    for (const auto& [pair, w] : plan.weights) {
        (void)w;
        g.edges.push_back(pair);
        g.positive_support.insert(pair.first);
        g.negative_support.insert(pair.second);
        if (!comp.count(pair.first)) comp[pair.first] = pair.first;
        if (!comp.count(pair.second)) comp[pair.second] = pair.second;
        const int a = find(pair.first);
        const int b = find(pair.second);
        if (a == b)
            g.acyclic = false;
        else
            comp[a] = b;
    }
    return g;
}

SignedMeasure boundary(const TransportPlan& plan) {
    SignedMeasure mu;
    for (const auto& [pair, w] : plan.weights) {
        mu.add(pair.first, w);
        mu.add(pair.second, -w);
    }
    return mu;
}

namespace {

void check_measure_support(const FiniteMetricSpace& x, const SignedMeasure& mu) {
    for (const auto& [i, c] : mu.coeffs) {
        (void)c;
        if (i < 0 || i >= x.size())
            throw DomainError("ValidationError", "measure supported outside the space");
    }
}

// Cancels undirected cycles in a plan without changing its boundary and
// without increasing its cost; each pass removes at least one edge. Basic
// LP solutions are already forests; this keeps the normal-form guarantee
// independent of that detail.
void cancel_cycles(const FiniteMetricSpace& x, TransportPlan& plan) {
    for (;;) {
        PlanGraph g = plan_graph(plan);
        if (g.acyclic) return;
        // Locate one undirected cycle by DFS over the edge list.
        std::map<int, std::vector<std::pair<int, bool>>> adj; // vertex -> (edge, forward?)
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            adj[g.edges[e].first].push_back({static_cast<int>(e), true});
            adj[g.edges[e].second].push_back({static_cast<int>(e), false});
        }
        std::map<int, std::pair<int, bool>> parent_edge;
        std::set<int> visited;
        std::vector<std::pair<int, bool>> cycle; // (edge, traversed forward?)
        std::function<bool(int, int)> dfs = [&](int v, int via) {
            visited.insert(v);
            for (const auto& [e, fwd] : adj[v]) {
                if (e == via) continue;
                const int w = fwd ? g.edges[e].second : g.edges[e].first;
                if (!visited.count(w)) {
                    parent_edge[w] = {e, fwd};
                    if (dfs(w, e)) return true;
                } else {
                    cycle.clear();
                    cycle.push_back({e, fwd});
                    for (int cur = v; cur != w;) {
                        auto pe = parent_edge[cur];
                        cycle.push_back(pe);
                        cur = pe.second ? g.edges[pe.first].first : g.edges[pe.first].second;
                    }
                    return true;
                }
            }
            return false;
        };
        for (const auto& [v, lst] : adj) {
            (void)lst;
            if (!visited.count(v) && dfs(v, -1)) break;
        }
        // Shifting +lambda adds to forward edges and subtracts from
        // backward ones; the boundary is unchanged either way. Pick the
        // non-increasing-cost direction that actually zeroes an edge.
        Rat delta(0);
        bool has_bwd = false;
        bool has_fwd = false;
        for (const auto& [e, fwd] : cycle) {
            const Rat d = x.dist(g.edges[e].first, g.edges[e].second);
            delta += fwd ? d : -d;
            (fwd ? has_fwd : has_bwd) = true;
        }
        bool shift_up = delta.sign() < 0 || (delta.sign() == 0 && has_bwd);
        if (shift_up && !has_bwd) shift_up = false;
        if (!shift_up && !has_fwd) shift_up = true;
        Rat lam;
        bool first = true;
        for (const auto& [e, fwd] : cycle) {
            if (fwd == shift_up) continue; // this edge grows under the shift
            const Rat& w = plan.weights.at(g.edges[e]);
            if (first || w < lam) {
                lam = w;
                first = false;
            }
        }
        for (const auto& [e, fwd] : cycle) {
            auto it = plan.weights.find(g.edges[e]);
            if (fwd == shift_up)
                it->second += lam;
            else
                it->second -= lam;
            if (it->second.sign() == 0) plan.weights.erase(it);
        }
    }
}

} // namespace

AeNormResult ae_norm(const FiniteMetricSpace& x, const SignedMeasure& mu) {
    check_measure_support(x, mu);
    if (!mu.in_u0())
        throw DomainError("NotInU0", "measure has nonzero total mass " + mu.total().str());

    const std::vector<int> sources = mu.positive_support();
    const std::vector<int> sinks = mu.negative_support();
    AeNormResult out;
    out.value = Rat(0);
    if (sources.empty()) return out; // zero measure

    // Transportation LP from positive to negative support. A basic optimal
    // solution has forest support, which is exactly the normal form.
    LpProblem p;
    std::vector<std::vector<int>> var(sources.size(), std::vector<int>(sinks.size()));
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = 0; j < sinks.size(); ++j)
            var[i][j] = p.add_var(x.label(sources[i]) + "->" + x.label(sinks[j]), Rat(0));
    for (std::size_t i = 0; i < sources.size(); ++i) {
        std::vector<std::pair<int, Rat>> row;
        for (std::size_t j = 0; j < sinks.size(); ++j) row.push_back({var[i][j], Rat(1)});
        p.add_row(std::move(row), LpProblem::Rel::eq, mu.coeffs.at(sources[i]));
    }
    for (std::size_t j = 0; j < sinks.size(); ++j) {
        std::vector<std::pair<int, Rat>> row;
        for (std::size_t i = 0; i < sources.size(); ++i) row.push_back({var[i][j], Rat(1)});
        p.add_row(std::move(row), LpProblem::Rel::eq, -mu.coeffs.at(sinks[j]));
    }
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = 0; j < sinks.size(); ++j)
            p.objective.push_back({var[i][j], x.dist(sources[i], sinks[j])});

    const LpSolution sol = solve_lp(p);
    if (sol.status != LpStatus::optimal)
        throw DomainError("MalformedProblem", "transportation program did not solve");

    out.value = sol.value;
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = 0; j < sinks.size(); ++j)
            if (sol.assignment[var[i][j]].sign() > 0)
                out.plan.weights[{sources[i], sinks[j]}] = sol.assignment[var[i][j]];
    cancel_cycles(x, out.plan);
    return out;
}

TransportPlan plan_from_forest(const SignedMeasure& mu,
                               const std::vector<std::pair<int, int>>& forest) {
    // vertex set of the forest must equal the support of mu
    std::set<int> verts;
    for (const auto& [a, b] : forest) {
        if (a == b) throw DomainError("CycleInForest", "self-loop in forest");
        verts.insert(a);
        verts.insert(b);
    }
    std::set<int> support;
    for (const auto& [i, c] : mu.coeffs) {
        (void)c;
        support.insert(i);
    }
    if (verts != support)
        throw DomainError("SupportMismatch",
                          "forest vertex set differs from the measure support");

    // acyclicity (undirected)
    std::map<int, int> uf;
    std::function<int(int)> find = [&](int v) {
        if (uf[v] == v) return v;
        return uf[v] = find(uf[v]);
    };
    for (int v : verts) uf[v] = v;
    for (const auto& [a, b] : forest) {
        const int ra = find(a);
        const int rb = find(b);
        if (ra == rb)
            throw DomainError("CycleInForest", "edge list contains an undirected cycle");
        uf[ra] = rb;
    }

    // Coefficient of (a,b) = sum of mu over the component containing a
    // once the edge is removed.
    std::map<int, std::vector<std::pair<int, int>>> adj;
    for (std::size_t e = 0; e < forest.size(); ++e) {
        adj[forest[e].first].push_back({static_cast<int>(e), forest[e].second});
        adj[forest[e].second].push_back({static_cast<int>(e), forest[e].first});
    }
    TransportPlan plan;
    for (std::size_t e = 0; e < forest.size(); ++e) {
        Rat sum(0);
        std::set<int> seen{forest[e].second}; // block crossing the removed edge
        std::vector<int> stack{forest[e].first};
        seen.insert(forest[e].first);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            auto it = mu.coeffs.find(v);
            if (it != mu.coeffs.end()) sum += it->second;
            for (const auto& [idx, w] : adj[v]) {
                if (idx == static_cast<int>(e) || seen.count(w)) continue;
                seen.insert(w);
                stack.push_back(w);
            }
        }
        if (sum.sign() <= 0)
            throw DomainError("NonPositiveCoefficient",
                              "forest admits no positive plan",
                              {{"edge", std::to_string(forest[e].first) + "->" +
                                            std::to_string(forest[e].second)},
                               {"coefficient", sum.str()}});
        plan.weights[forest[e]] = sum;
    }
    if (!(boundary(plan) == mu))
        throw DomainError("UnbalancedComponent",
                          "some forest component carries nonzero total mass");
    return plan;
}

std::vector<EnumeratedPlan> enumerate_acyclic_plans(const FiniteMetricSpace& x,
                                                    const SignedMeasure& mu,
                                                    int budget) {
    check_measure_support(x, mu);
    if (!mu.in_u0())
        throw DomainError("NotInU0", "measure has nonzero total mass");
    const std::vector<int> sources = mu.positive_support();
    const std::vector<int> sinks = mu.negative_support();
    const int ns = static_cast<int>(sources.size());
    const int nt = static_cast<int>(sinks.size());
    if (ns + nt > budget)
        throw DomainError("BudgetExceeded",
                          "support size " + std::to_string(ns + nt) + " exceeds budget " +
                              std::to_string(budget));
    std::vector<EnumeratedPlan> out;
    if (ns == 0) return out;

    // Every normal-form plan routes from a source to a sink, so its graph
    // is a forest in the complete bipartite graph covering all supports.
    const int ne = ns * nt;
    std::vector<std::pair<int, int>> chosen;
    // union-find over 0..ns+nt-1, rebuilt per recursion via undo stack
    std::vector<int> uf(ns + nt);
    for (int i = 0; i < ns + nt; ++i) uf[i] = i;
    std::function<int(int)> find = [&](int v) {
        while (uf[v] != v) v = uf[v];
        return v;
    };

    std::function<void(int)> rec = [&](int e) {
        if (e == ne) {
            if (static_cast<int>(chosen.size()) < std::max(ns, nt)) return; // cannot cover
            std::set<int> covered;
            for (const auto& [a, b] : chosen) {
                covered.insert(a);
                covered.insert(b);
            }
            if (static_cast<int>(covered.size()) != ns + nt) return;
            try {
                TransportPlan plan = plan_from_forest(mu, chosen);
                out.push_back({plan, plan_cost(x, plan)});
            } catch (const DomainError&) {
                // forest admits no all-positive plan; skip
            }
            return;
        }
        rec(e + 1);
        const int i = e / nt;
        const int j = e % nt;
        const int ra = find(i);
        const int rb = find(ns + j);
        if (ra != rb) {
            uf[ra] = rb;
            chosen.push_back({sources[i], sinks[j]});
            rec(e + 1);
            chosen.pop_back();
            uf[ra] = ra;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const EnumeratedPlan& a, const EnumeratedPlan& b) {
        return a.plan.weights < b.plan.weights;
    });
    return out;
}

Rat difference_norm_bound(const FiniteMetricSpace& x, int a, int b, int c, int d) {
    const int idx[4] = {a, b, c, d};
    for (int i = 0; i < 4; ++i) {
        if (idx[i] < 0 || idx[i] >= x.size())
            throw DomainError("ValidationError", "point index out of range");
        for (int j = i + 1; j < 4; ++j)
            if (idx[i] == idx[j])
                throw DomainError("ValidationError",
                                  "difference_norm_bound needs four distinct points");
    }
    SignedMeasure mu;
    mu.add(a, Rat(1));
    mu.add(b, Rat(1));
    mu.add(c, Rat(-1));
    mu.add(d, Rat(-1));
    return ae_norm(x, mu).value;
}

} // namespace maprad
