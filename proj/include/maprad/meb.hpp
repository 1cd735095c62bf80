#pragma once

#include <vector>

#include "maprad/metric_space.hpp"

namespace maprad {

// Euclidean minimum enclosing ball of a point configuration.
struct EuclideanBall {
    double radius = 0.0;
    std::vector<double> center;
    std::vector<int> support; // indices that determine the ball, <= dim+1
};

// Welzl's move-to-front algorithm on doubles; deterministic, processing
// points in input order. Radius is exact to ~1e-12 relative.
EuclideanBall meb_euclidean_points(const std::vector<std::vector<double>>& pts);

// Same, for a Euclidean-tagged rational point set.
EuclideanBall meb_euclidean(const EmbeddedPointSet& a);

} // namespace maprad
