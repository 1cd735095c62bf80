#include "maprad/radius.hpp"

#include <algorithm>
#include <cmath>

#include "maprad/lp.hpp"

namespace maprad {

ConvRadiusResult map_rad_conv(const FiniteMetricSpace& x) {
    const int n = x.size();
    LpProblem p;
    std::vector<int> w(n);
    for (int z = 0; z < n; ++z) w[z] = p.add_var("w_" + x.label(z), Rat(0));
    const int t = p.add_var("t", Rat(0));
    {
        std::vector<std::pair<int, Rat>> row;
        for (int z = 0; z < n; ++z) row.push_back({w[z], Rat(1)});
        p.add_row(std::move(row), LpProblem::Rel::eq, Rat(1));
    }
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<int, Rat>> row;
        for (int z = 0; z < n; ++z)
            if (z != i) row.push_back({w[z], x.dist(i, z)});
        row.push_back({t, Rat(-1)});
        p.add_row(std::move(row), LpProblem::Rel::le, Rat(0));
    }
    p.objective = {{t, Rat(1)}};

    const LpSolution sol = solve_lp(p);
    if (sol.status != LpStatus::optimal)
        throw DomainError("MalformedProblem", "conv radius program did not solve");

    ConvRadiusResult out;
    out.value = sol.value;
    out.weights.resize(n);
    for (int z = 0; z < n; ++z) out.weights[z] = sol.assignment[w[z]];
    for (int i = 0; i < n; ++i) {
        Rat integral(0);
        for (int z = 0; z < n; ++z) integral += out.weights[z] * x.dist(i, z);
        if (integral == out.value) out.tight.push_back(i);
    }
    return out;
}

namespace {

// Ordered pairs that transport cannot bypass: (y,z) is dropped when some
// w has d(y,w) + d(w,z) = d(y,z), because routing through w costs the
// same and both legs are strictly shorter (so the rewrite terminates).
// Plans over the surviving pairs reach the same optimum; for graph
// metrics these are exactly the graph edges.
std::vector<std::pair<int, int>> irreducible_pairs(const FiniteMetricSpace& x) {
    const int n = x.size();
    std::vector<std::pair<int, int>> pairs;
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
            if (y == z) continue;
            bool reducible = false;
            for (int w = 0; w < n && !reducible; ++w)
                if (w != y && w != z && x.dist(y, w) + x.dist(w, z) == x.dist(y, z))
                    reducible = true;
            if (!reducible) pairs.push_back({y, z});
        }
    return pairs;
}

} // namespace

NmvRadiusResult map_rad_nmv(const FiniteMetricSpace& x) {
    const int n = x.size();

    // Chain squeeze: diam/2 <= nmv <= conv, so conv = diam/2 pins the
    // value, and the conv witness certifies it: star plans from mu into
    // each point have cost = integral d(x,z) dmu <= conv.
    const Rat half_diam = x.diameter() / Rat(2);
    const ConvRadiusResult conv = map_rad_conv(x);
    if (conv.value == half_diam) {
        NmvRadiusResult out;
        out.value = conv.value;
        for (int z = 0; z < n; ++z) out.witness_mu.add(z, conv.weights[z]);
        out.plans.resize(n);
        for (int xi = 0; xi < n; ++xi)
            for (int z = 0; z < n; ++z)
                if (z != xi && conv.weights[z].sign() > 0)
                    out.plans[xi].weights[{z, xi}] = conv.weights[z];
        return out;
    }

    LpProblem p;
    std::vector<int> a(n);
    for (int z = 0; z < n; ++z)
        a[z] = p.add_var("a_" + x.label(z), std::nullopt, std::nullopt);
    const int t = p.add_var("t", Rat(0));

    // plan variables: f[x][(y,z)] over the irreducible ordered pairs
    const std::vector<std::pair<int, int>> pairs = irreducible_pairs(x);
    const int np = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> f(n, std::vector<int>(np));
    for (int xi = 0; xi < n; ++xi)
        for (int e = 0; e < np; ++e)
            f[xi][e] = p.add_var("f" + std::to_string(xi) + "_" + std::to_string(e), Rat(0));

    {
        std::vector<std::pair<int, Rat>> row;
        for (int z = 0; z < n; ++z) row.push_back({a[z], Rat(1)});
        p.add_row(std::move(row), LpProblem::Rel::eq, Rat(1));
    }
    for (int xi = 0; xi < n; ++xi) {
        // boundary: D(f^xi) = mu - mu_xi, one equation per point
        for (int q = 0; q < n; ++q) {
            std::vector<std::pair<int, Rat>> row;
            for (int e = 0; e < np; ++e) {
                if (pairs[e].first == q) row.push_back({f[xi][e], Rat(1)});
                if (pairs[e].second == q) row.push_back({f[xi][e], Rat(-1)});
            }
            row.push_back({a[q], Rat(-1)});
            p.add_row(std::move(row), LpProblem::Rel::eq, q == xi ? Rat(-1) : Rat(0));
        }
        // cost(f^xi) <= t
        std::vector<std::pair<int, Rat>> row;
        for (int e = 0; e < np; ++e)
            row.push_back({f[xi][e], x.dist(pairs[e].first, pairs[e].second)});
        row.push_back({t, Rat(-1)});
        p.add_row(std::move(row), LpProblem::Rel::le, Rat(0));
    }
    p.objective = {{t, Rat(1)}};

    const LpSolution sol = solve_lp(p);
    if (sol.status != LpStatus::optimal)
        throw DomainError("MalformedProblem", "nmv radius program did not solve");

    NmvRadiusResult out;
    out.value = sol.value;
    for (int z = 0; z < n; ++z) out.witness_mu.add(z, sol.assignment[a[z]]);
    out.plans.resize(n);
    for (int xi = 0; xi < n; ++xi)
        for (int e = 0; e < np; ++e)
            if (sol.assignment[f[xi][e]].sign() > 0)
                out.plans[xi].weights[pairs[e]] = sol.assignment[f[xi][e]];
    return out;
}

SupBallResult chebyshev_supnorm(const EmbeddedPointSet& a, ChebWithin within) {
    check_point_set(a);
    if (a.norm != NormTag::sup)
        throw DomainError("ValidationError", "chebyshev_supnorm needs the sup-norm tag");
    const int n = a.dim;
    const int m = static_cast<int>(a.points.size());

    LpProblem p;
    std::vector<int> y(n);
    for (int j = 0; j < n; ++j)
        y[j] = p.add_var("y" + std::to_string(j), std::nullopt, std::nullopt);
    const int t = p.add_var("t", Rat(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            p.add_row({{y[j], Rat(1)}, {t, Rat(-1)}}, LpProblem::Rel::le, a.points[i][j]);
            p.add_row({{y[j], Rat(-1)}, {t, Rat(-1)}}, LpProblem::Rel::le, -a.points[i][j]);
        }
    if (within == ChebWithin::hull) {
        std::vector<int> lam(m);
        for (int i = 0; i < m; ++i) lam[i] = p.add_var("lam" + std::to_string(i), Rat(0));
        std::vector<std::pair<int, Rat>> row;
        for (int i = 0; i < m; ++i) row.push_back({lam[i], Rat(1)});
        p.add_row(std::move(row), LpProblem::Rel::eq, Rat(1));
        for (int j = 0; j < n; ++j) {
            std::vector<std::pair<int, Rat>> r;
            r.push_back({y[j], Rat(1)});
            for (int i = 0; i < m; ++i) r.push_back({lam[i], -a.points[i][j]});
            p.add_row(std::move(r), LpProblem::Rel::eq, Rat(0));
        }
    }
    p.objective = {{t, Rat(1)}};
    const LpSolution sol = solve_lp(p);
    if (sol.status != LpStatus::optimal)
        throw DomainError("MalformedProblem", "chebyshev program did not solve");

    SupBallResult out;
    out.radius = sol.value;
    out.center.resize(n);
    for (int j = 0; j < n; ++j) out.center[j] = sol.assignment[y[j]];
    for (int i = 0; i < m; ++i) {
        Rat worst(0);
        for (int j = 0; j < n; ++j) worst = rat_max(worst, rat_abs(out.center[j] - a.points[i][j]));
        if (worst == out.radius) out.tight.push_back(i);
    }
    return out;
}

std::variant<Rat, double> enlargement_radius(const EmbeddedPointSet& a) {
    check_point_set(a);
    if (a.norm == NormTag::sup) {
        Rat best(0);
        for (std::size_t i = 0; i < a.points.size(); ++i)
            for (std::size_t j = i + 1; j < a.points.size(); ++j) {
                Rat d(0);
                for (int t = 0; t < a.dim; ++t)
                    d = rat_max(d, rat_abs(a.points[i][t] - a.points[j][t]));
                best = rat_max(best, d);
            }
        return best / Rat(2);
    }
    double best = 0.0;
    for (std::size_t i = 0; i < a.points.size(); ++i)
        for (std::size_t j = i + 1; j < a.points.size(); ++j) {
            double s = 0.0;
            for (int t = 0; t < a.dim; ++t) {
                const double d = (a.points[i][t] - a.points[j][t]).to_double();
                s += d * d;
            }
            best = std::max(best, std::sqrt(s));
        }
    return best / 2.0;
}

SextupleResult sextuple(const FiniteMetricSpace& x, const EuclidSearchConfig& cfg) {
    SextupleResult out;
    out.diam = x.diameter();
    out.half_diam = out.diam / Rat(2);
    out.euc_lower = out.half_diam;
    out.rad_x = x.intrinsic_radius().first;
    out.conv = map_rad_conv(x).value;
    out.nmv = map_rad_nmv(x).value;
    out.search = euclidean_map_rad_search(x, cfg);
    out.euc_search_lb = std::max(out.search.lower_bound, out.half_diam.to_double());
    return out;
}

SextupleResult sextuple(const FiniteMetricSpace& x) {
    EuclidSearchConfig cfg;
    cfg.dim = std::max(1, std::min(x.size() - 1, 3));
    return sextuple(x, cfg);
}

} // namespace maprad
