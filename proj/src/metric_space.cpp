#include "maprad/metric_space.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace maprad {

FiniteMetricSpace FiniteMetricSpace::validated(std::vector<std::string> labels,
                                               std::vector<std::vector<Rat>> dist) {
    const std::size_t n = labels.size();
    if (n == 0)
        throw DomainError("ValidationError", "empty point set");
    if (dist.size() != n)
        throw DomainError("ValidationError", "distance matrix is not |labels| x |labels|");
    for (const auto& row : dist)
        if (row.size() != n)
            throw DomainError("ValidationError", "distance matrix is not square");
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != n)
            throw DomainError("ValidationError", "duplicate point labels");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i][i] != Rat(0))
            throw DomainError("ValidationError", "nonzero diagonal at " + labels[i],
                              {{"point", labels[i]}});
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist[i][j] != dist[j][i])
                throw DomainError("AsymmetryError",
                                  "d(" + labels[i] + "," + labels[j] + ") != d(" + labels[j] +
                                      "," + labels[i] + ")",
                                  {{"a", labels[i]}, {"b", labels[j]}});
            if (dist[i][j].sign() <= 0)
                throw DomainError("NegativeOrZeroOffDiagonal",
                                  "d(" + labels[i] + "," + labels[j] + ") = " +
                                      dist[i][j].str(),
                                  {{"a", labels[i]}, {"b", labels[j]}});
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (dist[i][k] > dist[i][j] + dist[j][k])
                    throw DomainError("TriangleViolation",
                                      "d(" + labels[i] + "," + labels[k] + ") > d(" +
                                          labels[i] + "," + labels[j] + ") + d(" + labels[j] +
                                          "," + labels[k] + ")",
                                      {{"a", labels[i]}, {"b", labels[j]}, {"c", labels[k]}});
    return FiniteMetricSpace(std::move(labels), std::move(dist));
}

std::optional<int> FiniteMetricSpace::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

Rat FiniteMetricSpace::diameter() const {
    Rat best(0);
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (d_[i][j] > best) best = d_[i][j];
    return best;
}

std::pair<Rat, int> FiniteMetricSpace::intrinsic_radius() const {
    int best = 0;
    Rat best_ecc;
    for (int p = 0; p < size(); ++p) {
        Rat ecc(0);
        for (int x = 0; x < size(); ++x)
            if (d_[p][x] > ecc) ecc = d_[p][x];
        if (p == 0 || ecc < best_ecc) {
            best = p;
            best_ecc = ecc;
        }
    }
    return {best_ecc, best};
}

void check_graph(const WeightedGraph& g) {
    if (g.vertices.empty())
        throw DomainError("ValidationError", "graph has no vertices");
    std::set<std::string> verts(g.vertices.begin(), g.vertices.end());
    if (verts.size() != g.vertices.size())
        throw DomainError("ValidationError", "duplicate vertex labels");
    for (const auto& e : g.edges) {
        if (!verts.count(e.a) || !verts.count(e.b))
            throw DomainError("ValidationError",
                              "edge endpoint not declared: " + e.a + "-" + e.b);
        if (e.a == e.b)
            throw DomainError("ValidationError", "self-loop at " + e.a);
        if (e.length.sign() <= 0)
            throw DomainError("ValidationError",
                              "non-positive edge length on " + e.a + "-" + e.b);
    }
}

FiniteMetricSpace graph_metric(const WeightedGraph& g) {
    check_graph(g);
    const int n = static_cast<int>(g.vertices.size());
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[g.vertices[i]] = i;

    // Floyd-Warshall on exact rationals; nullopt = unreachable.
    std::vector<std::vector<std::optional<Rat>>> d(n, std::vector<std::optional<Rat>>(n));
    for (int i = 0; i < n; ++i) d[i][i] = Rat(0);
    for (const auto& e : g.edges) {
        const int a = idx[e.a];
        const int b = idx[e.b];
        if (!d[a][b] || e.length < *d[a][b]) {
            d[a][b] = e.length;
            d[b][a] = e.length;
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!d[i][k]) continue;
            for (int j = 0; j < n; ++j) {
                if (!d[k][j]) continue;
                Rat via = *d[i][k] + *d[k][j];
                if (!d[i][j] || via < *d[i][j]) d[i][j] = via;
            }
        }
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!d[i][j])
                throw DomainError("DisconnectedGraph",
                                  "no path between " + g.vertices[i] + " and " + g.vertices[j],
                                  {{"a", g.vertices[i]}, {"b", g.vertices[j]}});
            m[i][j] = *d[i][j];
        }
    return FiniteMetricSpace::validated(g.vertices, std::move(m));
}

FiniteMetricSpace discretize_graph(const WeightedGraph& g, int k) {
    check_graph(g);
    if (k < 1)
        throw DomainError("BadParams", "subdivision count must be >= 1");
    WeightedGraph fine;
    fine.vertices = g.vertices;
    std::map<std::pair<std::string, std::string>, int> seen;
    for (const auto& e : g.edges) {
        auto key = std::make_pair(std::min(e.a, e.b), std::max(e.a, e.b));
        const int occurrence = ++seen[key];
        std::string base = e.a + "-" + e.b;
        if (occurrence > 1) base += "(" + std::to_string(occurrence) + ")";
        const Rat piece = e.length / Rat(k);
        std::string prev = e.a;
        for (int i = 1; i < k; ++i) {
            std::string mid = base + ":" + std::to_string(i) + "/" + std::to_string(k);
            fine.vertices.push_back(mid);
            fine.edges.push_back({prev, mid, piece});
            prev = mid;
        }
        fine.edges.push_back({prev, e.b, piece});
    }
    return graph_metric(fine);
}

namespace {

FiniteMetricSpace make_d_m(int m) {
    if (m < 1) throw DomainError("BadParams", "D_m needs m >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::vector<Rat>> d(m, std::vector<Rat>(m, Rat(1)));
    for (int i = 0; i < m; ++i) d[i][i] = Rat(0);
    return FiniteMetricSpace::validated(std::move(labels), std::move(d));
}

FiniteMetricSpace make_cycle(const Rat& circumference, int k) {
    if (k < 1 || circumference.sign() <= 0)
        throw DomainError("BadParams", "cycle(L,k) needs L > 0 and k >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("c" + std::to_string(i));
    std::vector<std::vector<Rat>> d(k, std::vector<Rat>(k, Rat(0)));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const int gap = std::min(j - i, k - (j - i));
            d[i][j] = d[j][i] = circumference * Rat(gap) / Rat(k);
        }
    return FiniteMetricSpace::validated(std::move(labels), std::move(d));
}

WeightedGraph make_octahedron() {
    // Vertices p0,q0,p1,q1,p2,q2; each pair adjacent except the antipodal
    // (p_i, q_i). All 12 edges have length 1.
    WeightedGraph g;
    g.vertices = {"p0", "q0", "p1", "q1", "p2", "q2"};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            if (j == i + 1 && i % 2 == 0) continue; // antipodal pair
            g.edges.push_back({g.vertices[i], g.vertices[j], Rat(1)});
        }
    return g;
}

WeightedGraph make_tetrahedron() {
    WeightedGraph g;
    g.vertices = {"v0", "v1", "v2", "v3"};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            g.edges.push_back({g.vertices[i], g.vertices[j], Rat(1)});
    return g;
}

WeightedGraph make_cube() {
    WeightedGraph g;
    for (int v = 0; v < 8; ++v) {
        std::string name = "v";
        for (int b = 2; b >= 0; --b) name += ((v >> b) & 1) ? '1' : '0';
        g.vertices.push_back(name);
    }
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b) {
            const int w = v ^ (1 << b);
            if (v < w) g.edges.push_back({g.vertices[v], g.vertices[w], Rat(1)});
        }
    return g;
}

WeightedGraph make_seven_point() {
    // x joined to each y_i by a length-1 edge; y_i joined to z_j (i != j)
    // by a length-2 edge.
    WeightedGraph g;
    g.vertices = {"x", "y0", "y1", "y2", "z0", "z1", "z2"};
    for (int i = 0; i < 3; ++i)
        g.edges.push_back({"x", "y" + std::to_string(i), Rat(1)});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j)
                g.edges.push_back({"y" + std::to_string(i), "z" + std::to_string(j), Rat(2)});
    return g;
}

} // namespace

std::variant<FiniteMetricSpace, WeightedGraph> builtin_space(const std::string& name) {
    if (name.rfind("D_", 0) == 0) {
        try {
            std::size_t pos = 0;
            const int m = std::stoi(name.substr(2), &pos);
            if (pos == name.size() - 2) return make_d_m(m);
        } catch (const DomainError&) {
            throw;
        } catch (...) {
        }
        throw DomainError("BadParams", "cannot parse '" + name + "'");
    }
    if (name.rfind("cycle(", 0) == 0 && name.back() == ')') {
        const std::string inner = name.substr(6, name.size() - 7);
        const auto comma = inner.find(',');
        if (comma == std::string::npos)
            throw DomainError("BadParams", "cycle needs cycle(L,k)");
        try {
            const Rat circumference = Rat::parse(inner.substr(0, comma));
            const int k = std::stoi(inner.substr(comma + 1));
            return make_cycle(circumference, k);
        } catch (const DomainError&) {
            throw;
        } catch (...) {
            throw DomainError("BadParams", "cannot parse '" + name + "'");
        }
    }
    if (name == "octahedron_skeleton") return make_octahedron();
    if (name == "tetrahedron_skeleton") return make_tetrahedron();
    if (name == "cube_skeleton") return make_cube();
    if (name == "seven_point") return make_seven_point();
    throw DomainError("UnknownName", "no builtin space named '" + name + "'");
}

FiniteMetricSpace builtin_metric(const std::string& name, int k) {
    auto v = builtin_space(name);
    if (std::holds_alternative<FiniteMetricSpace>(v)) {
        if (k != 1)
            throw DomainError("BadParams",
                              "'" + name + "' is already a metric space; k applies to graphs");
        return std::get<FiniteMetricSpace>(std::move(v));
    }
    return discretize_graph(std::get<WeightedGraph>(v), k);
}

EmbeddedPointSet kuratowski_embedding(const FiniteMetricSpace& x) {
    EmbeddedPointSet out;
    out.dim = x.size();
    out.norm = NormTag::sup;
    out.points = x.matrix();
    return out;
}

void check_point_set(const EmbeddedPointSet& a) {
    if (a.dim < 1) throw DomainError("ValidationError", "point set dimension must be >= 1");
    if (a.points.empty()) throw DomainError("ValidationError", "empty point set");
    for (const auto& p : a.points)
        if (static_cast<int>(p.size()) != a.dim)
            throw DomainError("ValidationError", "point with wrong number of coordinates");
}

} // namespace maprad
