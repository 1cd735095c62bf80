#pragma once

#include <variant>
#include <vector>

#include "maprad/arens_eells.hpp"
#include "maprad/euclid_search.hpp"
#include "maprad/metric_space.hpp"

namespace maprad {

// map-rad(X, Conv) = inf over probability measures mu of
// sup_x integral d(x,z) dmu(z), solved exactly as an LP.
struct ConvRadiusResult {
    Rat value;
    std::vector<Rat> weights;  // probability weights per point
    std::vector<int> tight;    // points where the sup is attained
};

ConvRadiusResult map_rad_conv(const FiniteMetricSpace& x);

// map-rad(X, NmV) via the affine-measure formulation: one exact LP over a
// unit-mass signed measure mu plus a transport plan per point certifying
// ||mu - mu_x|| <= value.
struct NmvRadiusResult {
    Rat value;
    SignedMeasure witness_mu;          // total mass 1
    std::vector<TransportPlan> plans;  // per point of X
};

NmvRadiusResult map_rad_nmv(const FiniteMetricSpace& x);

// Chebyshev ball in the sup norm, exact: ambient R^n, or restricted to the
// convex hull of the input points.
enum class ChebWithin { ambient, hull };

struct SupBallResult {
    Rat radius;
    std::vector<Rat> center;
    std::vector<int> tight; // points at distance exactly radius
};

SupBallResult chebyshev_supnorm(const EmbeddedPointSet& a, ChebWithin within);

// inf over normed overspaces of the radius of A: equals half the diameter
// of A in its own norm. Rational for sup-norm input, double for Euclidean.
std::variant<Rat, double> enlargement_radius(const EmbeddedPointSet& a);

// The computable entries of the chain
// diam/2 = map-rad(X,E^1) <= map-rad(X,Euc) <= map-rad(X,NmV)
//        <= map-rad(X,Conv) <= rad_X(X) <= diam(X).
// The Euc entry is an interval: [diam/2, certified search lower bound].
struct SextupleResult {
    Rat half_diam;
    Rat euc_lower;          // = half_diam (exact part of the interval)
    double euc_search_lb;   // certified lower bound from the search
    Rat nmv;
    Rat conv;
    Rat rad_x;
    Rat diam;
    EuclidSearchResult search;
};

SextupleResult sextuple(const FiniteMetricSpace& x, const EuclidSearchConfig& cfg);

// Default search setup for sextuples: dimension min(|X|-1, 3) (images of
// an m-point space span at most an (m-1)-dimensional affine subspace).
SextupleResult sextuple(const FiniteMetricSpace& x);

} // namespace maprad
