#include "maprad/parkability.hpp"

#include <algorithm>
#include <set>

#include "maprad/lp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maprad {

void check_polytope(const PolytopeV& c) {
    if (c.dim < 1) throw DomainError("ValidationError", "polytope dimension must be >= 1");
    if (c.vertices.empty()) throw DomainError("ValidationError", "vertex list is empty");
    for (const auto& v : c.vertices)
        if (static_cast<int>(v.size()) != c.dim)
            throw DomainError("ValidationError", "vertex with wrong number of coordinates");
}

void check_polytope(const PolytopeH& b) {
    if (b.dim < 1) throw DomainError("ValidationError", "polytope dimension must be >= 1");
    for (const auto& row : b.rows)
        if (static_cast<int>(row.normal.size()) != b.dim)
            throw DomainError("ValidationError", "half-space normal with wrong dimension");
}

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// max/min of normal.x over B; nullopt when unbounded in that direction.
std::optional<Rat> extreme_value(const PolytopeH& b, const std::vector<Rat>& normal,
                                 LpProblem::Sense sense) {
    LpProblem p;
    std::vector<int> x(b.dim);
    for (int j = 0; j < b.dim; ++j)
        x[j] = p.add_var("x" + std::to_string(j), std::nullopt, std::nullopt);
    for (const auto& row : b.rows) {
        std::vector<std::pair<int, Rat>> r;
        for (int j = 0; j < b.dim; ++j)
            if (row.normal[j].sign() != 0) r.push_back({x[j], row.normal[j]});
        p.add_row(std::move(r), LpProblem::Rel::le, row.offset);
    }
    p.sense = sense;
    for (int j = 0; j < b.dim; ++j)
        if (normal[j].sign() != 0) p.objective.push_back({x[j], normal[j]});
    const LpSolution sol = solve_lp(p);
    if (sol.status == LpStatus::infeasible)
        throw DomainError("ValidationError", "half-space system is infeasible");
    if (sol.status == LpStatus::unbounded) return std::nullopt;
    return sol.value;
}

} // namespace

std::vector<int> redundant_vertices(const PolytopeV& c) {
    check_polytope(c);
    std::vector<int> out;
    const int m = static_cast<int>(c.vertices.size());
    if (m == 1) return out;
    for (int i = 0; i < m; ++i) {
        LpProblem p;
        std::vector<int> lam;
        for (int k = 0; k < m; ++k)
            if (k != i) lam.push_back(p.add_var("l" + std::to_string(k), Rat(0)));
        std::vector<std::pair<int, Rat>> srow;
        for (int v : lam) srow.push_back({v, Rat(1)});
        p.add_row(std::move(srow), LpProblem::Rel::eq, Rat(1));
        for (int j = 0; j < c.dim; ++j) {
            std::vector<std::pair<int, Rat>> row;
            int vi = 0;
            for (int k = 0; k < m; ++k) {
                if (k == i) continue;
                row.push_back({lam[vi++], c.vertices[k][j]});
            }
            p.add_row(std::move(row), LpProblem::Rel::eq, c.vertices[i][j]);
        }
        if (solve_lp(p).status == LpStatus::optimal) out.push_back(i);
    }
    return out;
}

ParkResult is_parkable(const PolytopeV& c, const PolytopeH& b) {
    check_polytope(c);
    check_polytope(b);
    if (c.dim != b.dim)
        throw DomainError("DimensionMismatch",
                          "C has dimension " + std::to_string(c.dim) + ", B has " +
                              std::to_string(b.dim));
    const int m = static_cast<int>(c.vertices.size());
    for (int i = 0; i < m; ++i)
        for (std::size_t r = 0; r < b.rows.size(); ++r)
            if (dot(b.rows[r].normal, c.vertices[i]) > b.rows[r].offset)
                throw DomainError("CNotInB", "C is not contained in B",
                                  {{"vertex", std::to_string(i)}, {"row", std::to_string(r)}});

    // v = sum lam_i c_i, lam in the simplex; for every vertex c_i and row
    // (a, beta): a.(c_i - v) <= beta.
    LpProblem p;
    std::vector<int> lam(m);
    for (int i = 0; i < m; ++i) lam[i] = p.add_var("l" + std::to_string(i), Rat(0));
    {
        std::vector<std::pair<int, Rat>> row;
        for (int i = 0; i < m; ++i) row.push_back({lam[i], Rat(1)});
        p.add_row(std::move(row), LpProblem::Rel::eq, Rat(1));
    }
    for (int i = 0; i < m; ++i)
        for (const auto& hs : b.rows) {
            std::vector<std::pair<int, Rat>> row;
            for (int k = 0; k < m; ++k) {
                const Rat coef = -dot(hs.normal, c.vertices[k]);
                if (coef.sign() != 0) row.push_back({lam[k], coef});
            }
            p.add_row(std::move(row), LpProblem::Rel::le,
                      hs.offset - dot(hs.normal, c.vertices[i]));
        }
    const LpSolution sol = solve_lp(p);
    ParkResult out;
    if (sol.status != LpStatus::optimal) return out;
    out.parkable = true;
    std::vector<Rat> v(c.dim, Rat(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < c.dim; ++j) v[j] += sol.assignment[lam[i]] * c.vertices[i][j];
    out.v = std::move(v);
    return out;
}

std::optional<std::vector<Rat>> center_of_symmetry(const PolytopeV& c) {
    check_polytope(c);
    std::set<std::vector<Rat>> dedup(c.vertices.begin(), c.vertices.end());
    std::vector<std::vector<Rat>> verts(dedup.begin(), dedup.end());
    const Rat count(static_cast<long>(verts.size()));
    std::vector<Rat> centroid(c.dim, Rat(0));
    for (const auto& v : verts)
        for (int j = 0; j < c.dim; ++j) centroid[j] += v[j] / count;
    for (const auto& v : verts) {
        std::vector<Rat> mirror(c.dim);
        for (int j = 0; j < c.dim; ++j) mirror[j] = centroid[j] * Rat(2) - v[j];
        if (!dedup.count(mirror)) return std::nullopt;
    }
    return centroid;
}

namespace {

void check_section_inputs(const PolytopeH& b, const HalfSpace& plane) {
    if (b.dim > 3)
        throw DomainError("DimensionTooHigh", "sections implemented for dimension <= 3");
    if (static_cast<int>(plane.normal.size()) != b.dim)
        throw DomainError("DimensionMismatch", "hyperplane dimension differs from B");
    bool zero = true;
    for (const auto& c : plane.normal)
        if (c.sign() != 0) zero = false;
    if (zero) throw DomainError("ValidationError", "hyperplane normal is zero");
}

void check_bounded(const PolytopeH& b) {
    for (int j = 0; j < b.dim; ++j) {
        std::vector<Rat> axis(b.dim, Rat(0));
        axis[j] = Rat(1);
        if (!extreme_value(b, axis, LpProblem::Sense::maximize) ||
            !extreme_value(b, axis, LpProblem::Sense::minimize))
            throw DomainError("UnboundedPolytope", "B is unbounded");
    }
}

PolytopeV section_unchecked(const PolytopeH& b, const HalfSpace& plane) {
    const int n = b.dim;
    const int m = static_cast<int>(b.rows.size());
    std::set<std::vector<Rat>> found;

    // A section vertex solves the plane equation plus n-1 active rows of
    // linearly independent normals; enumerate row subsets and keep the
    // feasible solutions.
    auto try_system = [&](const std::vector<int>& rows_idx) {
        std::vector<std::vector<Rat>> m2(n, std::vector<Rat>(n + 1));
        for (int j = 0; j < n; ++j) m2[0][j] = plane.normal[j];
        m2[0][n] = plane.offset;
        for (int r = 0; r < n - 1; ++r) {
            for (int j = 0; j < n; ++j) m2[r + 1][j] = b.rows[rows_idx[r]].normal[j];
            m2[r + 1][n] = b.rows[rows_idx[r]].offset;
        }
        // exact Gaussian elimination
        for (int col = 0, row = 0; col < n && row < n; ++col) {
            int piv = -1;
            for (int r = row; r < n; ++r)
                if (m2[r][col].sign() != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return; // singular: no unique solution
            std::swap(m2[row], m2[piv]);
            for (int r = 0; r < n; ++r) {
                if (r == row || m2[r][col].sign() == 0) continue;
                const Rat f = m2[r][col] / m2[row][col];
                for (int cc = col; cc <= n; ++cc) m2[r][cc] -= f * m2[row][cc];
            }
            ++row;
        }
        std::vector<Rat> pt(n);
        for (int r = 0; r < n; ++r) {
            int lead = -1;
            for (int j = 0; j < n; ++j)
                if (m2[r][j].sign() != 0) {
                    lead = j;
                    break;
                }
            if (lead < 0) return;
            pt[lead] = m2[r][n] / m2[r][lead];
        }
        for (const auto& hs : b.rows)
            if (dot(hs.normal, pt) > hs.offset) return;
        if (dot(plane.normal, pt) != plane.offset) return;
        found.insert(pt);
    };

    if (n == 1) {
        try_system({});
    } else if (n == 2) {
        for (int r = 0; r < m; ++r) try_system({r});
    } else {
        for (int r1 = 0; r1 < m; ++r1)
            for (int r2 = r1 + 1; r2 < m; ++r2) try_system({r1, r2});
    }

    PolytopeV out;
    out.dim = n;
    out.vertices.assign(found.begin(), found.end());
    return out;
}

} // namespace

PolytopeV section_polytope(const PolytopeH& b, const HalfSpace& plane) {
    check_polytope(b);
    check_section_inputs(b, plane);
    check_bounded(b);
    return section_unchecked(b, plane);
}

ParkReport parkability_report(const PolytopeH& b, const std::vector<HalfSpace>& planes,
                              int threads) {
    check_polytope(b);
    for (const auto& plane : planes) check_section_inputs(b, plane);
    check_bounded(b);

    ParkReport report;
    report.entries.resize(planes.size());
    const int np = static_cast<int>(planes.size());

    std::exception_ptr first_error = nullptr;
    auto run_one = [&](int i) {
        try {
            ParkReportEntry& e = report.entries[i];
            e.plane = planes[i];
            const PolytopeV section = section_unchecked(b, planes[i]);
            if (section.vertices.empty()) {
                e.meets = false;
                return;
            }
            e.meets = true;
            const ParkResult r = is_parkable(section, b);
            e.parkable = r.parkable;
            e.witness = r.v;
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(maprad_park_report_err)
#endif
            {
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

#ifdef _OPENMP
    {
        const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (int i = 0; i < np; ++i) run_one(i);
    }
#else
    (void)threads;
    for (int i = 0; i < np; ++i) run_one(i);
#endif
    if (first_error) std::rethrow_exception(first_error);

    for (const auto& e : report.entries)
        if (e.meets && !e.parkable) report.verdict = ParkVerdict::refuted_by_witness;
    return report;
}

} // namespace maprad
