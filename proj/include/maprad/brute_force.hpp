#pragma once

#include <cstdint>
#include <vector>

#include "maprad/metric_space.hpp"

namespace maprad {

struct BruteForceResult {
    Rat value;
    std::vector<int> best_map; // best_map[i] = image index in Y of point i of X
};

// Exact map-rad(X,Y) by exhaustive enumeration of all |Y|^|X| set maps,
// keeping the nonexpansive ones and maximizing rad_Y(f(X)). Throws
// BudgetExceeded when |Y|^|X| > budget. threads = 0 uses the OpenMP
// default; the result is identical for every thread count.
BruteForceResult map_rad_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                    std::int64_t budget = 10'000'000, int threads = 0);

// Exact map-corad(X,Y): minimizes corad_Y(f(X)) over nonexpansive maps.
BruteForceResult map_corad_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                      std::int64_t budget = 10'000'000, int threads = 0);

// Serial reference implementations, kept for testing the parallel kernels.
namespace serial_ref {
BruteForceResult map_rad_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                    std::int64_t budget = 10'000'000);
BruteForceResult map_corad_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                      std::int64_t budget = 10'000'000);
} // namespace serial_ref

} // namespace maprad
