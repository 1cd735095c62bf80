#include "maprad/brute_force.hpp"

#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maprad {

namespace {

std::int64_t map_count(int nx, int ny, std::int64_t budget) {
    std::int64_t total = 1;
    for (int i = 0; i < nx; ++i) {
        if (total > budget / ny + 1) return budget + 1;
        total *= ny;
        if (total > budget) return budget + 1;
    }
    return total;
}

void decode(std::int64_t code, int nx, int ny, std::vector<int>& f) {
    for (int i = 0; i < nx; ++i) {
        f[i] = static_cast<int>(code % ny);
        code /= ny;
    }
}

bool nonexpansive(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const std::vector<int>& f) {
    for (int i = 0; i < x.size(); ++i)
        for (int j = i + 1; j < x.size(); ++j)
            if (y.dist(f[i], f[j]) > x.dist(i, j)) return false;
    return true;
}

Rat radius_of_image(const FiniteMetricSpace& y, const std::vector<int>& f) {
    std::optional<Rat> best;
    for (int c = 0; c < y.size(); ++c) {
        Rat worst(0);
        for (int img : f)
            if (y.dist(img, c) > worst) worst = y.dist(img, c);
        if (!best || worst < *best) best = worst;
    }
    return *best;
}

Rat coradius_of_image(const FiniteMetricSpace& y, const std::vector<int>& f) {
    Rat worst(0);
    for (int c = 0; c < y.size(); ++c) {
        std::optional<Rat> nearest;
        for (int img : f)
            if (!nearest || y.dist(img, c) < *nearest) nearest = y.dist(img, c);
        if (*nearest > worst) worst = *nearest;
    }
    return worst;
}

struct Best {
    bool set = false;
    Rat value;
    std::int64_t code = 0;
};

// maximize = true for map-rad, false for map-corad; ties break toward the
// smallest map code so the witness is scheduling-independent.
void consider(Best& b, const Rat& v, std::int64_t code, bool maximize) {
    if (!b.set || (maximize ? v > b.value : v < b.value) ||
        (v == b.value && code < b.code)) {
        b.set = true;
        b.value = v;
        b.code = code;
    }
}

BruteForceResult run(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                     std::int64_t budget, int threads, bool maximize, bool parallel) {
    const std::int64_t total = map_count(x.size(), y.size(), budget);
    if (total > budget)
        throw DomainError("BudgetExceeded",
                          "|Y|^|X| exceeds the enumeration budget " + std::to_string(budget));

    Best best;
#ifdef _OPENMP
    if (parallel) {
        const int nthreads = threads > 0 ? threads : omp_get_max_threads();
        std::vector<Best> partial(nthreads);
#pragma omp parallel num_threads(nthreads)
        {
            const int tid = omp_get_thread_num();
            std::vector<int> f(x.size());
#pragma omp for schedule(static)
            for (std::int64_t code = 0; code < total; ++code) {
                decode(code, x.size(), y.size(), f);
                if (!nonexpansive(x, y, f)) continue;
                const Rat v = maximize ? radius_of_image(y, f) : coradius_of_image(y, f);
                consider(partial[tid], v, code, maximize);
            }
        }
        for (const Best& b : partial)
            if (b.set) consider(best, b.value, b.code, maximize);
    }
#else
    (void)threads;
    parallel = false;
#endif
    if (!parallel) {
        std::vector<int> f(x.size());
        for (std::int64_t code = 0; code < total; ++code) {
            decode(code, x.size(), y.size(), f);
            if (!nonexpansive(x, y, f)) continue;
            const Rat v = maximize ? radius_of_image(y, f) : coradius_of_image(y, f);
            consider(best, v, code, maximize);
        }
    }

    BruteForceResult out;
    out.value = best.value; // a constant map is always nonexpansive, so best.set
    out.best_map.resize(x.size());
    decode(best.code, x.size(), y.size(), out.best_map);
    return out;
}

} // namespace

BruteForceResult map_rad_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                    std::int64_t budget, int threads) {
    return run(x, y, budget, threads, true, true);
}

BruteForceResult map_corad_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                      std::int64_t budget, int threads) {
    return run(x, y, budget, threads, false, true);
}

namespace serial_ref {

BruteForceResult map_rad_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                    std::int64_t budget) {
    return run(x, y, budget, 1, true, false);
}

BruteForceResult map_corad_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                      std::int64_t budget) {
    return run(x, y, budget, 1, false, false);
}

} // namespace serial_ref

} // namespace maprad
