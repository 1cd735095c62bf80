#include "maprad/euclid_search.hpp"

#include <cmath>
#include <random>

#include "maprad/meb.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maprad {

namespace {

// fixed search hyperparameters (echoed in the result)
constexpr int kEpochs = 24;
constexpr int kItersPerEpoch = 60;
constexpr double kStep0 = 0.20;         // times the diameter
constexpr double kStepDecay = 0.85;
constexpr double kNoise = 1.0;          // noise-to-radial mix in the walk
constexpr double kRichGetRicher = 6.0;  // outward push ~ (r_i/r)^gamma
constexpr int kSweeps0 = 8;             // projection sweeps, doubled per epoch
constexpr int kSweepCap = 512;
constexpr int kPolishRounds = 140;      // trust-region LP polish

using Config = std::vector<std::vector<double>>;

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double pair_dist(const Config& q, int i, int j) {
    double s = 0.0;
    for (std::size_t t = 0; t < q[i].size(); ++t) {
        const double d = q[i][t] - q[j][t];
        s += d * d;
    }
    return std::sqrt(s);
}

// One Gauss-Seidel pass over the violated pair caps.
double project_sweep(Config& q, const std::vector<std::vector<double>>& cap) {
    const int n = static_cast<int>(q.size());
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double len = pair_dist(q, i, j);
            const double c = cap[i][j];
            if (len <= c || len == 0.0) continue;
            worst = std::max(worst, len / c - 1.0);
            const double f = 0.5 * (len - c) / len;
            for (std::size_t t = 0; t < q[i].size(); ++t) {
                const double d = q[i][t] - q[j][t];
                q[i][t] -= f * d;
                q[j][t] += f * d;
            }
        }
    return worst;
}

// Uniform contraction about the centroid makes every cap hold exactly;
// scaling all pairwise distances by one factor is the repair step.
void repair(const Config& in, const std::vector<std::vector<double>>& cap, Config& out) {
    const int n = static_cast<int>(in.size());
    const int dim = static_cast<int>(in[0].size());
    double ratio = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cap[i][j] > 0.0) ratio = std::max(ratio, pair_dist(in, i, j) / cap[i][j]);
    std::vector<double> centroid(dim, 0.0);
    for (const auto& p : in)
        for (int t = 0; t < dim; ++t) centroid[t] += p[t] / n;
    out = in;
    if (ratio > 1.0)
        for (auto& p : out)
            for (int t = 0; t < dim; ++t) p[t] = centroid[t] + (p[t] - centroid[t]) / ratio;
}

double repaired_value(const Config& in, const std::vector<std::vector<double>>& cap,
                      Config& out) {
    repair(in, cap, out);
    return meb_euclidean_points(out).radius;
}

// Dense floating-point simplex for the trust-region subproblem:
// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so the slack
// basis starts feasible. Dantzig entering rule with a Bland fallback
// after degenerate stalling. The step it proposes is re-validated by an
// exact repair + ball evaluation, so double precision here is fine.
struct TinyLp {
    int m = 0, n = 0;
    std::vector<std::vector<double>> t; // m x (n+m+1)
    std::vector<int> basis;

    void init(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
              const std::vector<double>& c) {
        m = static_cast<int>(a.size());
        n = static_cast<int>(c.size());
        t.assign(m + 1, std::vector<double>(n + m + 1, 0.0));
        basis.resize(m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
            t[i][n + i] = 1.0;
            t[i][n + m] = b[i];
            basis[i] = n + i;
        }
        for (int j = 0; j < n; ++j) t[m][j] = -c[j]; // minimize -c.x
    }

    // returns x (size n) or empty on stall/unbounded
    std::vector<double> solve() {
        const double eps = 1e-11;
        int stalled = 0;
        bool bland = false;
        for (int iter = 0; iter < 2000; ++iter) {
            int enter = -1;
            if (bland) {
                for (int j = 0; j < n + m; ++j)
                    if (t[m][j] < -eps) {
                        enter = j;
                        break;
                    }
            } else {
                double bestc = -eps;
                for (int j = 0; j < n + m; ++j)
                    if (t[m][j] < bestc) {
                        bestc = t[m][j];
                        enter = j;
                    }
            }
            if (enter < 0) break; // optimal
            int leave = -1;
            double best_ratio = 0.0;
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] <= eps) continue;
                const double ratio = t[i][n + m] / t[i][enter];
                if (leave < 0 || ratio < best_ratio - 1e-14 ||
                    (ratio < best_ratio + 1e-14 && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return {}; // unbounded: caller shrinks the region
            const double before = t[m][n + m];
            const double piv = t[leave][enter];
            for (double& v : t[leave]) v /= piv;
            for (int i = 0; i <= m; ++i) {
                if (i == leave) continue;
                const double f = t[i][enter];
                if (f == 0.0) continue;
                for (int j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
            }
            basis[leave] = enter;
            if (std::fabs(t[m][n + m] - before) < 1e-15) {
                if (++stalled > 40) bland = true;
            } else {
                stalled = 0;
            }
        }
        std::vector<double> x(n, 0.0);
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) x[basis[i]] = t[i][n + m];
        return x;
    }
};

// Trust-region step: linearize the ball radius at the support points and
// the nearly tight caps, maximize the radius gain over a box trust
// region. The radius variable is shifted by 10*eta so every row keeps a
// nonnegative right-hand side. Linearization error is second order in
// eta, so shrinking eta polishes the configuration to ~1e-8.
bool slp_step(const std::vector<std::vector<double>>& cap, Config& q, Config& best_cfg,
              double& best, double eta) {
    const int n = static_cast<int>(q.size());
    const int dim = static_cast<int>(q[0].size());
    const EuclideanBall ball = meb_euclidean_points(q);
    if (ball.radius < 1e-12) return false;

    // variables: dq = u - eta (u in [0, 2 eta] via budget rows),
    // same for dc; drs = dr + 10 eta in [0, 11 eta].
    const int nq = n * dim;
    const int nv = nq + dim + 1;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    auto fresh_row = [&]() -> std::vector<double>& {
        a.emplace_back(nv, 0.0);
        return a.back();
    };
    // box: u_k <= 2 eta
    for (int k = 0; k < nq + dim; ++k) {
        fresh_row()[k] = 1.0;
        b.push_back(2.0 * eta);
    }
    {
        fresh_row()[nq + dim] = 1.0;
        b.push_back(11.0 * eta);
    }
    // support rows: drs - unit.(dq - dc) <= len - r + 10 eta  (>= 0)
    for (int i = 0; i < n; ++i) {
        double len = 0.0;
        std::vector<double> u(dim);
        for (int t = 0; t < dim; ++t) {
            u[t] = q[i][t] - ball.center[t];
            len += u[t] * u[t];
        }
        len = std::sqrt(len);
        if (len < ball.radius - 10.0 * eta || len < 1e-12) continue;
        auto& row = fresh_row();
        row[nq + dim] = 1.0;
        double shift = 10.0 * eta; // from drs; dq/dc shifts cancel exactly
        for (int t = 0; t < dim; ++t) {
            row[i * dim + t] = -u[t] / len;
            row[nq + t] = u[t] / len;
        }
        b.push_back(len - ball.radius + shift);
    }
    // cap rows: unit.(dq_i - dq_j) <= cap - len  (shifts cancel)
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double len = pair_dist(q, i, j);
            if (cap[i][j] <= 0.0 || len < cap[i][j] - 10.0 * eta || len < 1e-12) continue;
            auto& row = fresh_row();
            for (int t = 0; t < dim; ++t) {
                const double cu = (q[i][t] - q[j][t]) / len;
                row[i * dim + t] += cu;
                row[j * dim + t] -= cu;
            }
            b.push_back(cap[i][j] - len);
        }
    std::vector<double> c(nv, 0.0);
    c[nq + dim] = 1.0;

    TinyLp lp;
    lp.init(a, b, c);
    const std::vector<double> sol = lp.solve();
    if (sol.empty()) return false;

    Config trial = q;
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < dim; ++t) trial[i][t] += sol[i * dim + t] - eta;
    Config fixed;
    const double v = repaired_value(trial, cap, fixed);
    if (v > best + 1e-15) {
        best = v;
        best_cfg = fixed;
        q = fixed;
        return true;
    }
    return false;
}

struct RestartOutcome {
    double value = -1.0;
    Config config;
};

RestartOutcome run_restart(const FiniteMetricSpace& x, int dim, std::uint64_t seed,
                           int restart) {
    const int n = x.size();
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(0xabcdef12345ULL + restart)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, n - 1);

    std::vector<std::vector<double>> cap(n, std::vector<double>(n, 0.0));
    double diam = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cap[i][j] = x.dist(i, j).to_double();
            diam = std::max(diam, cap[i][j]);
        }
    if (diam == 0.0) { // singleton
        RestartOutcome out;
        out.value = 0.0;
        out.config = Config(n, std::vector<double>(dim, 0.0));
        return out;
    }

    Config q(n, std::vector<double>(dim, 0.0));
    switch (restart % 4) {
        case 0: { // random cloud
            for (auto& p : q)
                for (double& c : p) c = 0.5 * diam * gauss(rng);
            break;
        }
        case 1: { // fold along a distance function (always feasible)
            const int a = pick(rng);
            for (int i = 0; i < n; ++i) q[i][0] = cap[a][i];
            break;
        }
        case 2: { // two distance functions scaled into feasibility
            const int a = pick(rng);
            const int b = pick(rng);
            const double s = 1.0 / std::sqrt(2.0);
            for (int i = 0; i < n; ++i) {
                q[i][0] = s * cap[a][i];
                if (dim > 1) q[i][1] = s * cap[b][i];
            }
            break;
        }
        default: { // random projection of the distance-matrix rows
            std::vector<std::vector<double>> m(dim, std::vector<double>(n));
            for (auto& row : m)
                for (double& c : row) c = gauss(rng) / std::sqrt(static_cast<double>(n));
            for (int i = 0; i < n; ++i)
                for (int t = 0; t < dim; ++t) {
                    double s = 0.0;
                    for (int j = 0; j < n; ++j) s += m[t][j] * cap[i][j];
                    q[i][t] = s;
                }
            break;
        }
    }
    for (int s = 0; s < 64; ++s)
        if (project_sweep(q, cap) < 1e-13) break;

    RestartOutcome best;
    Config best_cfg;
    best.value = repaired_value(q, cap, best_cfg);

    // exploration: noisy outward walk, outer points pushed hardest
    double step = kStep0 * diam;
    int sweeps = kSweeps0;
    for (int epoch = 0; epoch < kEpochs; ++epoch) {
        for (int iter = 0; iter < kItersPerEpoch; ++iter) {
            const EuclideanBall ball = meb_euclidean_points(q);
            Config trial = q;
            for (int i = 0; i < n; ++i) {
                std::vector<double> dir(dim);
                double len = 0.0;
                for (int t = 0; t < dim; ++t) {
                    dir[t] = q[i][t] - ball.center[t];
                    len += dir[t] * dir[t];
                }
                len = std::sqrt(len);
                const double w = (ball.radius > 1e-12 && len > 1e-12)
                                     ? std::pow(len / ball.radius, kRichGetRicher)
                                     : 0.0;
                for (int t = 0; t < dim; ++t) {
                    const double radial = len > 1e-12 ? dir[t] / len : 0.0;
                    trial[i][t] += step * (w * radial + kNoise * gauss(rng));
                }
            }
            for (int s = 0; s < sweeps; ++s)
                if (project_sweep(trial, cap) < 1e-9) break;
            Config fixed;
            const double v = repaired_value(trial, cap, fixed);
            if (v > best.value) {
                best.value = v;
                best_cfg = fixed;
                q = trial;
            } else if (v >= best.value - 0.1 * step) {
                q = trial; // sideways move keeps the walk alive
            }
        }
        step *= kStepDecay;
        sweeps = std::min(kSweepCap, sweeps * 2);
    }

    // polish: trust-region LP steps, radius halved when a step stalls
    q = best_cfg;
    double eta = 1e-2 * diam;
    for (int round = 0; round < kPolishRounds && eta > 1e-10 * diam; ++round)
        if (!slp_step(cap, q, best_cfg, best.value, eta)) eta *= 0.5;
    best.config = best_cfg;
    return best;
}

EuclidSearchResult run_search(const FiniteMetricSpace& x, const EuclidSearchConfig& cfg,
                              bool parallel) {
    if (cfg.dim < 1) throw DomainError("BadParams", "search dimension must be >= 1");
    if (cfg.restarts < 1) throw DomainError("BadParams", "restarts must be >= 1");

    std::vector<RestartOutcome> outcomes(cfg.restarts);
#ifdef _OPENMP
    if (parallel) {
        const int nthreads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (int r = 0; r < cfg.restarts; ++r)
            outcomes[r] = run_restart(x, cfg.dim, cfg.seed, r);
    }
#else
    parallel = false;
#endif
    if (!parallel)
        for (int r = 0; r < cfg.restarts; ++r) outcomes[r] = run_restart(x, cfg.dim, cfg.seed, r);

    EuclidSearchResult res;
    res.lower_bound = -1.0; // below any radius, so restart 0 always lands
    res.epochs = kEpochs;
    res.iters_per_epoch = kItersPerEpoch;
    res.step0 = kStep0;
    res.step_decay = kStepDecay;
    res.projection_sweeps0 = kSweeps0;
    for (int r = 0; r < cfg.restarts; ++r)
        if (outcomes[r].value > res.lower_bound) {
            res.lower_bound = outcomes[r].value;
            res.configuration = outcomes[r].config;
            res.best_restart = r;
        }
    // post-repair certificate
    double worst = 0.0;
    for (int i = 0; i < x.size(); ++i)
        for (int j = i + 1; j < x.size(); ++j) {
            const double c = x.dist(i, j).to_double();
            const double len =
                res.configuration.empty() ? 0.0 : pair_dist(res.configuration, i, j);
            if (c > 0.0) worst = std::max(worst, len / c - 1.0);
        }
    res.max_violation = worst;
    return res;
}

} // namespace

EuclidSearchResult euclidean_map_rad_search(const FiniteMetricSpace& x,
                                            const EuclidSearchConfig& cfg) {
    return run_search(x, cfg, true);
}

namespace serial_ref {
EuclidSearchResult euclidean_map_rad_search(const FiniteMetricSpace& x,
                                            const EuclidSearchConfig& cfg) {
    return run_search(x, cfg, false);
}
} // namespace serial_ref

} // namespace maprad
