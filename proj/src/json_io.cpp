#include "maprad/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace maprad {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("IoError", "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("ParseError", std::string("invalid JSON in '") + path + "': " + e.what());
    }
}

InputKind detect_kind(const json& j) {
    if (!j.is_object()) throw DomainError("ParseError", "top-level JSON must be an object");
    if (j.contains("labels") && j.contains("dist")) return InputKind::space;
    if (j.contains("vertices") && j.contains("edges")) return InputKind::graph;
    if (j.contains("points")) return InputKind::points;
    if (j.contains("dim") && j.contains("vertices")) return InputKind::polytope_v;
    if (j.contains("dim") && j.contains("rows")) return InputKind::polytope_h;
    if (j.contains("coeffs")) return InputKind::measure;
    if (j.contains("planes")) return InputKind::planes;
    throw DomainError("KindMismatch", "unrecognized input file shape");
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw DomainError("ParseError", "rational must be an integer or a 'p/q' string");
}

FiniteMetricSpace space_from_json(const json& j) {
    if (detect_kind(j) != InputKind::space)
        throw DomainError("KindMismatch", "expected a space file with labels and dist");
    std::vector<std::string> labels;
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    std::vector<std::vector<Rat>> dist;
    for (const auto& row : j.at("dist")) {
        std::vector<Rat> r;
        for (const auto& cell : row) r.push_back(rat_from_json(cell));
        dist.push_back(std::move(r));
    }
    return FiniteMetricSpace::validated(std::move(labels), std::move(dist));
}

WeightedGraph graph_from_json(const json& j) {
    if (detect_kind(j) != InputKind::graph)
        throw DomainError("KindMismatch", "expected a graph file with vertices and edges");
    WeightedGraph g;
    for (const auto& v : j.at("vertices")) g.vertices.push_back(v.get<std::string>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw DomainError("ParseError", "edge must be [a, b, length]");
        g.edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                           rat_from_json(e[2])});
    }
    check_graph(g);
    return g;
}

EmbeddedPointSet points_from_json(const json& j) {
    if (detect_kind(j) != InputKind::points)
        throw DomainError("KindMismatch", "expected a point-set file");
    EmbeddedPointSet a;
    a.dim = j.at("dim").get<int>();
    const std::string norm = j.value("norm", "sup");
    if (norm == "sup")
        a.norm = NormTag::sup;
    else if (norm == "euclidean")
        a.norm = NormTag::euclidean;
    else
        throw DomainError("ParseError", "norm must be 'sup' or 'euclidean'");
    for (const auto& row : j.at("points")) {
        std::vector<Rat> pt;
        for (const auto& cell : row) pt.push_back(rat_from_json(cell));
        a.points.push_back(std::move(pt));
    }
    check_point_set(a);
    return a;
}

PolytopeV polytope_v_from_json(const json& j) {
    if (detect_kind(j) != InputKind::polytope_v)
        throw DomainError("KindMismatch", "expected a vertex-polytope file");
    PolytopeV c;
    c.dim = j.at("dim").get<int>();
    for (const auto& row : j.at("vertices")) {
        std::vector<Rat> pt;
        for (const auto& cell : row) pt.push_back(rat_from_json(cell));
        c.vertices.push_back(std::move(pt));
    }
    check_polytope(c);
    return c;
}

PolytopeH polytope_h_from_json(const json& j) {
    if (detect_kind(j) != InputKind::polytope_h)
        throw DomainError("KindMismatch", "expected a half-space polytope file");
    PolytopeH b;
    b.dim = j.at("dim").get<int>();
    for (const auto& row : j.at("rows")) {
        HalfSpace hs;
        for (const auto& cell : row.at("normal")) hs.normal.push_back(rat_from_json(cell));
        hs.offset = rat_from_json(row.at("offset"));
        b.rows.push_back(std::move(hs));
    }
    check_polytope(b);
    return b;
}

std::vector<HalfSpace> planes_from_json(const json& j) {
    if (detect_kind(j) != InputKind::planes)
        throw DomainError("KindMismatch", "expected a plane-list file");
    std::vector<HalfSpace> planes;
    for (const auto& row : j.at("planes")) {
        HalfSpace hs;
        for (const auto& cell : row.at("normal")) hs.normal.push_back(rat_from_json(cell));
        hs.offset = rat_from_json(row.at("offset"));
        planes.push_back(std::move(hs));
    }
    return planes;
}

MeasureFile measure_from_json(const json& j, const std::string& base_dir) {
    if (detect_kind(j) != InputKind::measure)
        throw DomainError("KindMismatch", "expected a measure file with coeffs");
    MeasureFile out;
    if (j.contains("space")) {
        const auto& s = j.at("space");
        if (s.is_string()) {
            std::string path = s.get<std::string>();
            if (!path.empty() && path[0] != '/' && !base_dir.empty())
                path = base_dir + "/" + path;
            out.space = space_from_json(load_json_file(path));
        } else {
            out.space = space_from_json(s);
        }
    }
    for (const auto& [label, cell] : j.at("coeffs").items())
        out.coeffs[label] = rat_from_json(cell);
    return out;
}

SignedMeasure bind_measure(const FiniteMetricSpace& space,
                           const std::map<std::string, Rat>& coeffs) {
    SignedMeasure mu;
    for (const auto& [label, c] : coeffs) {
        const auto idx = space.index_of(label);
        if (!idx)
            throw DomainError("ValidationError",
                              "measure supported on unknown point '" + label + "'");
        mu.add(*idx, c);
    }
    return mu;
}

// ---- serialization ----

json to_json(const Rat& r) { return r.str(); }

json to_json(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return json(std::strtod(buf, nullptr));
}

json to_json(const FiniteMetricSpace& x) {
    json dist = json::array();
    for (int i = 0; i < x.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < x.size(); ++j) row.push_back(to_json(x.dist(i, j)));
        dist.push_back(std::move(row));
    }
    return json{{"labels", x.labels()}, {"dist", std::move(dist)}};
}

json to_json(const WeightedGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({e.a, e.b, to_json(e.length)});
    return json{{"vertices", g.vertices}, {"edges", std::move(edges)}};
}

json to_json(const EmbeddedPointSet& a) {
    json pts = json::array();
    for (const auto& p : a.points) {
        json row = json::array();
        for (const auto& c : p) row.push_back(to_json(c));
        pts.push_back(std::move(row));
    }
    return json{{"dim", a.dim},
                {"norm", a.norm == NormTag::sup ? "sup" : "euclidean"},
                {"points", std::move(pts)}};
}

json to_json(const FiniteMetricSpace& x, const SignedMeasure& mu) {
    json coeffs = json::object();
    for (const auto& [i, c] : mu.coeffs) coeffs[x.label(i)] = to_json(c);
    return coeffs;
}

json to_json(const FiniteMetricSpace& x, const TransportPlan& plan) {
    json weights = json::object();
    for (const auto& [pair, w] : plan.weights)
        weights[x.label(pair.first) + "->" + x.label(pair.second)] = to_json(w);
    return weights;
}

json to_json(const FiniteMetricSpace& x, const ConvRadiusResult& r) {
    json measure = json::object();
    for (int z = 0; z < x.size(); ++z)
        if (r.weights[z].sign() != 0) measure[x.label(z)] = to_json(r.weights[z]);
    json tight = json::array();
    for (int i : r.tight) tight.push_back(x.label(i));
    return json{{"value", to_json(r.value)},
                {"measure", std::move(measure)},
                {"tight", std::move(tight)}};
}

json to_json(const FiniteMetricSpace& x, const NmvRadiusResult& r) {
    json plans = json::object();
    for (int i = 0; i < x.size(); ++i) plans[x.label(i)] = to_json(x, r.plans[i]);
    return json{{"value", to_json(r.value)},
                {"mu", to_json(x, r.witness_mu)},
                {"plans", std::move(plans)}};
}

json to_json(const EmbeddedPointSet& a, const SupBallResult& r) {
    (void)a;
    json center = json::array();
    for (const auto& c : r.center) center.push_back(to_json(c));
    return json{{"radius", to_json(r.radius)},
                {"center", std::move(center)},
                {"tight", r.tight}};
}

json to_json(const EuclideanBall& b) {
    json center = json::array();
    for (double c : b.center) center.push_back(to_json(c));
    return json{{"radius", to_json(b.radius)},
                {"center", std::move(center)},
                {"support", b.support},
                {"tolerance", 1e-9}};
}

json to_json(const FiniteMetricSpace& x, const EuclidSearchResult& r) {
    json config = json::array();
    for (int i = 0; i < static_cast<int>(r.configuration.size()); ++i) {
        json row = json::array();
        for (double c : r.configuration[i]) row.push_back(to_json(c));
        config.push_back(json{{"point", x.label(i)}, {"coords", std::move(row)}});
    }
    return json{{"lower_bound", to_json(r.lower_bound)},
                {"configuration", std::move(config)},
                {"max_violation", to_json(r.max_violation)},
                {"best_restart", r.best_restart},
                {"tolerance", 1e-9},
                {"hyperparameters",
                 json{{"epochs", r.epochs},
                      {"iters_per_epoch", r.iters_per_epoch},
                      {"step0", to_json(r.step0)},
                      {"step_decay", to_json(r.step_decay)},
                      {"projection_sweeps0", r.projection_sweeps0}}}};
}

json to_json(const FiniteMetricSpace& x, const SextupleResult& r) {
    return json{{"half_diam", to_json(r.half_diam)},
                {"euc", json{{"lower", to_json(r.euc_lower)},
                             {"search_lower_bound", to_json(r.euc_search_lb)}}},
                {"nmv", to_json(r.nmv)},
                {"conv", to_json(r.conv)},
                {"rad_X", to_json(r.rad_x)},
                {"diam", to_json(r.diam)},
                {"search", to_json(x, r.search)}};
}

json to_json(const PolytopeV& c) {
    json verts = json::array();
    for (const auto& v : c.vertices) {
        json row = json::array();
        for (const auto& x : v) row.push_back(to_json(x));
        verts.push_back(std::move(row));
    }
    return json{{"dim", c.dim}, {"vertices", std::move(verts)}};
}

json to_json(const ParkResult& r) {
    json out{{"parkable", r.parkable}};
    if (r.v) {
        json v = json::array();
        for (const auto& c : *r.v) v.push_back(to_json(c));
        out["v"] = std::move(v);
    }
    return out;
}

json to_json(const ParkReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json normal = json::array();
        for (const auto& c : e.plane.normal) normal.push_back(to_json(c));
        json entry{{"normal", std::move(normal)},
                   {"offset", to_json(e.plane.offset)},
                   {"meets", e.meets}};
        if (e.meets) {
            entry["parkable"] = e.parkable;
            if (e.witness) {
                json v = json::array();
                for (const auto& c : *e.witness) v.push_back(to_json(c));
                entry["v"] = std::move(v);
            }
        }
        entries.push_back(std::move(entry));
    }
    return json{{"verdict", r.verdict == ParkVerdict::refuted_by_witness
                                ? "RefutedByWitness"
                                : "NoViolationFound"},
                {"sections", std::move(entries)}};
}

} // namespace maprad
