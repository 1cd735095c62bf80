#pragma once

#include <cstdint>
#include <vector>

#include "maprad/metric_space.hpp"

namespace maprad {

struct EuclidSearchConfig {
    int dim = 2;
    int restarts = 32;
    std::uint64_t seed = 1;
    int threads = 0; // 0 = OpenMP default; result independent of threads
};

// Hyperparameters are fixed constants, echoed in the result for
// reproducibility of reported bounds.
struct EuclidSearchResult {
    double lower_bound = 0.0;
    std::vector<std::vector<double>> configuration; // feasible after repair
    double max_violation = 0.0;                     // relative, post-repair
    int best_restart = -1;
    int epochs = 0;
    int iters_per_epoch = 0;
    double step0 = 0.0;
    double step_decay = 0.0;
    int projection_sweeps0 = 0; // doubled each epoch (penalty stiffening)
};

// Certified lower bound on map-rad(X, E^dim): multi-start local search
// that maximizes the enclosing-ball radius of a point configuration under
// the nonexpansiveness caps ||q_i - q_j|| <= d(x_i, x_j). Every restart
// derives its randomness from (seed, restart), so the outcome does not
// depend on scheduling and is monotone in the restart count. The reported
// bound is the ball radius of the repaired (feasible) configuration; it
// is a lower bound witness, never a claim about map-rad itself.
EuclidSearchResult euclidean_map_rad_search(const FiniteMetricSpace& x,
                                            const EuclidSearchConfig& cfg);

namespace serial_ref {
EuclidSearchResult euclidean_map_rad_search(const FiniteMetricSpace& x,
                                            const EuclidSearchConfig& cfg);
} // namespace serial_ref

} // namespace maprad
