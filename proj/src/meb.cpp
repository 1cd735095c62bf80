#include "maprad/meb.hpp"

#include <cmath>
#include <list>

namespace maprad {

namespace {

double dist2(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

// Smallest ball with all the given points on its boundary: circumsphere
// within their affine hull. Solves the Gram system 2 G lambda = g by
// Gaussian elimination; near-dependent support points are dropped.
EuclideanBall ball_on_boundary(const std::vector<std::vector<double>>& pts,
                               const std::vector<int>& support) {
    EuclideanBall ball;
    ball.support = support;
    if (support.empty()) {
        ball.radius = -1.0; // contains nothing
        return ball;
    }
    const std::vector<double>& p0 = pts[support[0]];
    const int k = static_cast<int>(support.size()) - 1;
    ball.center = p0;
    if (k == 0) {
        ball.radius = 0.0;
        return ball;
    }
    const int dim = static_cast<int>(p0.size());
    std::vector<std::vector<double>> v(k, std::vector<double>(dim));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < dim; ++j) v[i][j] = pts[support[i + 1]][j] - p0[j];

    std::vector<std::vector<double>> m(k, std::vector<double>(k + 1));
    double scale = 0.0;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            double dot = 0.0;
            for (int t = 0; t < dim; ++t) dot += v[i][t] * v[j][t];
            m[i][j] = 2.0 * dot;
            scale = std::max(scale, std::fabs(m[i][j]));
        }
        m[i][k] = 0.0;
        for (int t = 0; t < dim; ++t) m[i][k] += v[i][t] * v[i][t];
    }
    // partial pivoting
    std::vector<double> lambda(k, 0.0);
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    const double tiny = 1e-12 * std::max(scale, 1e-300);
    int rank = 0;
    std::vector<int> piv_col;
    for (int col = 0; col < k && rank < k; ++col) {
        int best = -1;
        for (int r = rank; r < k; ++r)
            if (best < 0 || std::fabs(m[r][col]) > std::fabs(m[best][col])) best = r;
        if (best < 0 || std::fabs(m[best][col]) <= tiny) continue;
        std::swap(m[rank], m[best]);
        for (int r = 0; r < k; ++r) {
            if (r == rank) continue;
            const double f = m[r][col] / m[rank][col];
            if (f == 0.0) continue;
            for (int c = col; c <= k; ++c) m[r][c] -= f * m[rank][c];
        }
        piv_col.push_back(col);
        ++rank;
    }
    for (int r = 0; r < rank; ++r) lambda[piv_col[r]] = m[r][k] / m[r][piv_col[r]];

    for (int i = 0; i < k; ++i)
        for (int t = 0; t < dim; ++t) ball.center[t] += lambda[i] * v[i][t];
    ball.radius = std::sqrt(dist2(ball.center, p0));
    return ball;
}

bool in_ball(const std::vector<double>& p, const EuclideanBall& b) {
    if (b.radius < 0.0) return false;
    const double r2 = b.radius * b.radius;
    return dist2(p, b.center) <= r2 + 1e-12 * (r2 + 1.0);
}

EuclideanBall mtf_mb(const std::vector<std::vector<double>>& pts, std::list<int>& order,
                     std::list<int>::iterator end, std::vector<int>& support, int dim) {
    EuclideanBall ball = ball_on_boundary(pts, support);
    if (static_cast<int>(support.size()) == dim + 1) return ball;
    for (auto it = order.begin(); it != end;) {
        auto next = std::next(it);
        const int idx = *it;
        if (!in_ball(pts[idx], ball)) {
            support.push_back(idx);
            ball = mtf_mb(pts, order, it, support, dim);
            support.pop_back();
            order.erase(it);
            order.push_front(idx); // move-to-front
        }
        it = next;
    }
    return ball;
}

} // namespace

EuclideanBall meb_euclidean_points(const std::vector<std::vector<double>>& pts) {
    if (pts.empty()) throw DomainError("ValidationError", "empty point set");
    const int dim = static_cast<int>(pts[0].size());
    std::list<int> order;
    for (std::size_t i = 0; i < pts.size(); ++i) order.push_back(static_cast<int>(i));
    std::vector<int> support;
    EuclideanBall ball = mtf_mb(pts, order, order.end(), support, dim);
    if (ball.radius < 0.0) {
        ball.radius = 0.0;
        ball.center = pts[0];
        ball.support = {0};
    }
    // Absorb floating-point slack: the reported radius always covers.
    double worst = 0.0;
    for (const auto& p : pts) worst = std::max(worst, dist2(p, ball.center));
    ball.radius = std::max(ball.radius, std::sqrt(worst));
    return ball;
}

EuclideanBall meb_euclidean(const EmbeddedPointSet& a) {
    check_point_set(a);
    if (a.norm != NormTag::euclidean)
        throw DomainError("ValidationError", "minimum enclosing ball needs the euclidean tag");
    std::vector<std::vector<double>> pts(a.points.size(), std::vector<double>(a.dim));
    for (std::size_t i = 0; i < a.points.size(); ++i)
        for (int j = 0; j < a.dim; ++j) pts[i][j] = a.points[i][j].to_double();
    return meb_euclidean_points(pts);
}

} // namespace maprad
