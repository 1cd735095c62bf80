#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "maprad/rational.hpp"

namespace maprad {

// Finite metric space: labeled points with an exact rational distance
// matrix. Immutable once constructed; construction re-checks all three
// metric axioms.
class FiniteMetricSpace {
public:
    // Throws AsymmetryError / NegativeOrZeroOffDiagonal / TriangleViolation
    // (each naming its witness) when the matrix is not a metric.
    static FiniteMetricSpace validated(std::vector<std::string> labels,
                                       std::vector<std::vector<Rat>> dist);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Rat& dist(int i, int j) const { return d_[i][j]; }
    const std::vector<std::vector<Rat>>& matrix() const { return d_; }
    std::optional<int> index_of(std::string_view label) const;

    Rat diameter() const;
    // (rad_X(X), index of an achieving center); ties broken by first label
    // in input order.
    std::pair<Rat, int> intrinsic_radius() const;

private:
    FiniteMetricSpace(std::vector<std::string> labels, std::vector<std::vector<Rat>> dist)
        : labels_(std::move(labels)), d_(std::move(dist)) {}

    std::vector<std::string> labels_;
    std::vector<std::vector<Rat>> d_;
};

struct GraphEdge {
    std::string a;
    std::string b;
    Rat length;
};

// Undirected weighted graph. Parallel edges are allowed (they matter as
// distinct subdivision carriers); self-loops are not.
struct WeightedGraph {
    std::vector<std::string> vertices;
    std::vector<GraphEdge> edges;
};

enum class NormTag { sup, euclidean };

// Point set in R^n with rational coordinates and a norm tag. Irrational
// geometry enters only through rational approximation of coordinates;
// Euclidean computations downstream convert to double.
struct EmbeddedPointSet {
    int dim = 0;
    NormTag norm = NormTag::sup;
    std::vector<std::vector<Rat>> points;
};

// Checks structural invariants (edge lengths > 0, no self-loops, endpoints
// declared); throws ValidationError otherwise.
void check_graph(const WeightedGraph& g);

// All-pairs shortest-path metric of a connected weighted graph.
FiniteMetricSpace graph_metric(const WeightedGraph& g);

// Replaces each edge by k equal sub-edges (k-1 interior points per edge),
// then takes the graph metric. Original vertices keep their labels;
// interior points are labeled "a-b:i/k".
FiniteMetricSpace discretize_graph(const WeightedGraph& g, int k);

// Named example spaces. The name string carries the parameters:
// "D_3", "cycle(4,4)", "octahedron_skeleton", "tetrahedron_skeleton",
// "cube_skeleton", "seven_point". Skeletons and seven_point come back as
// graphs; D_m and cycle(L,k) as metric spaces.
std::variant<FiniteMetricSpace, WeightedGraph> builtin_space(const std::string& name);

// Convenience: builtin by name, discretizing graph-valued builtins with k.
FiniteMetricSpace builtin_metric(const std::string& name, int k = 1);

// x_i -> (d(x_i, x_j))_j under the sup norm; isometric for finite spaces.
EmbeddedPointSet kuratowski_embedding(const FiniteMetricSpace& x);

void check_point_set(const EmbeddedPointSet& a);

} // namespace maprad
