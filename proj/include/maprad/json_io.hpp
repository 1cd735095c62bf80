#pragma once

#include <string>

#include <json.hpp>

#include "maprad/arens_eells.hpp"
#include "maprad/brute_force.hpp"
#include "maprad/euclid_search.hpp"
#include "maprad/meb.hpp"
#include "maprad/metric_space.hpp"
#include "maprad/parkability.hpp"
#include "maprad/radius.hpp"

namespace maprad {

using json = nlohmann::json;

// ---- parsing (file formats documented in the README) ----

json load_json_file(const std::string& path); // IoError / ParseError

enum class InputKind { space, graph, points, polytope_v, polytope_h, measure, planes };

InputKind detect_kind(const json& j);

Rat rat_from_json(const json& j); // "p/q" string or integer

FiniteMetricSpace space_from_json(const json& j);
WeightedGraph graph_from_json(const json& j);
EmbeddedPointSet points_from_json(const json& j);
PolytopeV polytope_v_from_json(const json& j);
PolytopeH polytope_h_from_json(const json& j);
std::vector<HalfSpace> planes_from_json(const json& j);

// Measure files carry coefficients keyed by point label and may inline
// their space under "space" (object or path).
struct MeasureFile {
    std::optional<FiniteMetricSpace> space;
    std::map<std::string, Rat> coeffs;
};
MeasureFile measure_from_json(const json& j, const std::string& base_dir);

SignedMeasure bind_measure(const FiniteMetricSpace& space,
                           const std::map<std::string, Rat>& coeffs);

// ---- serialization ----

json to_json(const Rat& r);                 // "p/q" string
json to_json(double v);                     // number, 12 significant digits
json to_json(const FiniteMetricSpace& x);
json to_json(const WeightedGraph& g);
json to_json(const EmbeddedPointSet& a);
json to_json(const FiniteMetricSpace& x, const SignedMeasure& mu);
json to_json(const FiniteMetricSpace& x, const TransportPlan& plan);
json to_json(const FiniteMetricSpace& x, const ConvRadiusResult& r);
json to_json(const FiniteMetricSpace& x, const NmvRadiusResult& r);
json to_json(const EmbeddedPointSet& a, const SupBallResult& r);
json to_json(const EuclideanBall& b);
json to_json(const FiniteMetricSpace& x, const EuclidSearchResult& r);
json to_json(const FiniteMetricSpace& x, const SextupleResult& r);
json to_json(const PolytopeV& c);
json to_json(const ParkResult& r);
json to_json(const ParkReport& r);

} // namespace maprad
