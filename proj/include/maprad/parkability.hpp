#pragma once

#include <optional>
#include <vector>

#include "maprad/rational.hpp"

namespace maprad {

// Convex polytope by vertex list (hull implied; redundant entries allowed).
struct PolytopeV {
    int dim = 0;
    std::vector<std::vector<Rat>> vertices;
};

// normal . x <= offset
struct HalfSpace {
    std::vector<Rat> normal;
    Rat offset;
};

// Convex polytope as an intersection of half-spaces; may be empty or
// unbounded (detectable by LP).
struct PolytopeH {
    int dim = 0;
    std::vector<HalfSpace> rows;
};

void check_polytope(const PolytopeV& c);
void check_polytope(const PolytopeH& b);

// Indices of listed vertices lying in the hull of the others.
std::vector<int> redundant_vertices(const PolytopeV& c);

struct ParkResult {
    bool parkable = false;
    std::optional<std::vector<Rat>> v; // translation witness, v in C
};

// Is there v in C with C - v inside B? Exact LP feasibility over the
// convex coefficients of v. Requires C inside B (else CNotInB) and equal
// dimensions (else DimensionMismatch).
ParkResult is_parkable(const PolytopeV& c, const PolytopeH& b);

// Point v with vertex multiset (deduplicated) equal to its reflection
// through v; the only candidate is the centroid, verified exactly.
std::optional<std::vector<Rat>> center_of_symmetry(const PolytopeV& c);

// Vertex representation of B intersected with {x | normal.x = offset},
// dimensions <= 3, B bounded. Empty vertex list when they do not meet.
PolytopeV section_polytope(const PolytopeH& b, const HalfSpace& plane);

struct ParkReportEntry {
    HalfSpace plane;
    bool meets = false;
    bool parkable = false;
    std::optional<std::vector<Rat>> witness;
};

enum class ParkVerdict { refuted_by_witness, no_violation_found };

struct ParkReport {
    std::vector<ParkReportEntry> entries;
    ParkVerdict verdict = ParkVerdict::no_violation_found;
};

// Samples hyperplane sections of B and tests each for parkability. Any
// failing section certifies that B has a non-parkable closed convex
// subset; an all-pass run is evidence over the sample only.
ParkReport parkability_report(const PolytopeH& b, const std::vector<HalfSpace>& planes,
                              int threads = 0);

} // namespace maprad
