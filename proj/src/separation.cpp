#include "ptg/separation.hpp"

#include <algorithm>

#include "ptg/errors.hpp"
#include "ptg/lp.hpp"
#include "ptg/tangents.hpp"

namespace ptg {

std::vector<Vec> Family::all_vertices() const {
    std::vector<Vec> out;
    for (const Polytope& p : members) out.insert(out.end(), p.vertices.begin(), p.vertices.end());
    return out;
}

std::vector<std::size_t> Family::vertex_colors() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < members.size(); ++i)
        out.insert(out.end(), members[i].vertices.size(), i);
    return out;
}

bool Family::all_full_dimensional() const {
    for (std::size_t i = 0; i < members.size(); ++i)
        if (!member_full_dimensional(i)) return false;
    return true;
}

bool Family::affinely_spanning() const { return affine_rank(all_vertices()) == dim; }

namespace {

// A member given by fewer than dim+1 affinely independent vertices is stored
// as a polytope of its own affine hull's dimension, charted so the original
// coordinates are kept alongside.
Polytope member_polytope(const std::vector<Vec>& vertices, std::size_t dim) {
    // Lower-dimensional members are allowed (Family only needs vertex sets
    // plus exact facet data when the member is full dimensional); we build
    // the hull lazily at the member's intrinsic dimension.
    const std::size_t arank = affine_rank(vertices);
    if (arank == dim) return convex_hull(vertices, dim);
    // Keep the vertex list (deduped, irredundant within the affine hull is
    // not required for separation/tangency work, which quantifies over
    // vertices); record dim as the intrinsic rank with no facet data.
    Polytope p;
    p.dim = arank;
    std::vector<Vec> pts;
    for (const Vec& v : vertices)
        if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
    p.vertices = std::move(pts);
    return p;
}

}  // namespace

Family make_family(std::size_t dim, std::vector<std::vector<Vec>> member_vertices) {
    if (member_vertices.empty()) throw usage_error("EmptyFamily", "family needs members");
    Family f;
    f.dim = dim;
    for (auto& verts : member_vertices) {
        if (verts.empty()) throw usage_error("EmptyMember", "family member without vertices");
        for (const Vec& v : verts)
            if (v.size() != dim) throw usage_error("DimensionMismatch", "member vertex dimension");
        f.members.push_back(member_polytope(verts, dim));
    }
    return f;
}

SeparationCertificate is_strongly_separated(const Family& family) {
    const std::size_t m = family.size();
    SeparationCertificate cert;
    cert.separated = true;

    // Bipartitions with color 0 on the canonical (negative) side, ordered by
    // the bitmask of the rest.
    for (std::size_t mask = 0; mask < (std::size_t(1) << (m - 1)); ++mask) {
        std::set<std::size_t> inside = {0};
        for (std::size_t j = 1; j < m; ++j)
            if (mask & (std::size_t(1) << (j - 1))) inside.insert(j);

        std::vector<Vec> neg, pos;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& vs = family.members[i].vertices;
            auto& side = inside.count(i) ? neg : pos;
            side.insert(side.end(), vs.begin(), vs.end());
        }
        if (pos.empty()) {
            // I = [m]: any hyperplane strictly below the family works.
            OrientedHyperplane h{unit_vec(family.dim, 0), Rat(0)};
            Rat hi = dot(neg[0], h.normal);
            for (const Vec& v : neg) hi = std::max(hi, dot(v, h.normal));
            h.offset = hi + 1;
            cert.witnesses.push_back({inside, h});
            continue;
        }
        const auto plane = separating_hyperplane(neg, pos, true);
        if (!plane) {
            cert.separated = false;
            cert.failing_bipartition = inside;
            cert.witnesses.clear();
            return cert;
        }
        cert.witnesses.push_back({inside, *plane});
    }
    return cert;
}

std::vector<std::size_t> visible_facets(const Polytope& p, const Vec& point) {
    if (p.contains(point))
        throw usage_error("PointInsidePolytope", "visibility query from a point inside P");
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < p.facets.size(); ++f)
        if (sgn(p.facets[f].plane.value(point)) > 0) out.push_back(f);
    return out;
}

std::optional<Vec> visibility_witness(const Polytope& p,
                                      const std::vector<std::size_t>& facet_colors,
                                      const std::set<std::size_t>& colors, VisibilityMode mode) {
    if (facet_colors.size() != p.facets.size())
        throw usage_error("DimensionMismatch", "facet coloring size mismatch");
    std::set<std::size_t> used(facet_colors.begin(), facet_colors.end());
    if (colors.empty() || colors == used)
        throw usage_error("BadColorSubset", "color subset must be nonempty and proper");
    for (std::size_t c : colors)
        if (!used.count(c)) throw usage_error("BadColorSubset", "unknown color in subset");

    InequalitySystem sys;
    sys.dimension = p.dim;
    for (std::size_t f = 0; f < p.facets.size(); ++f) {
        const bool want_visible = colors.count(facet_colors[f]) ==
                                  (mode == VisibilityMode::Visible ? 1u : 0u);
        sys.add(p.facets[f].plane.normal, p.facets[f].plane.offset,
                want_visible ? Rel::GT : Rel::LT);
    }
    const FeasibilityResult r = feasible(sys);
    if (!r.feasible) return std::nullopt;
    return r.witness;
}

bool VisibilityReport::all_visible_or_covisible() const {
    return std::all_of(subsets.begin(), subsets.end(),
                       [](const SubsetReport& s) { return s.cls != SubsetClass::Neither; });
}

const SubsetReport* VisibilityReport::first_neither() const {
    for (const SubsetReport& s : subsets)
        if (s.cls == SubsetClass::Neither) return &s;
    return nullptr;
}

VisibilityReport classify_color_subsets(const Polytope& p,
                                        const std::vector<std::size_t>& facet_colors) {
    std::set<std::size_t> used(facet_colors.begin(), facet_colors.end());
    std::vector<std::size_t> colors(used.begin(), used.end());
    const std::size_t m = colors.size();

    VisibilityReport report;
    if (m < 2) return report;  // no proper nonempty subsets

    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << m); ++mask) {
        std::set<std::size_t> subset;
        for (std::size_t j = 0; j < m; ++j)
            if (mask & (std::size_t(1) << j)) subset.insert(colors[j]);

        SubsetReport entry{subset, SubsetClass::Neither, std::nullopt};
        if (auto w = visibility_witness(p, facet_colors, subset, VisibilityMode::Visible)) {
            entry.cls = SubsetClass::Visible;
            entry.witness = std::move(w);
        } else if (auto cw =
                       visibility_witness(p, facet_colors, subset, VisibilityMode::Covisible)) {
            entry.cls = SubsetClass::Covisible;
            entry.witness = std::move(cw);
        }
        report.subsets.push_back(std::move(entry));
    }
    return report;
}

std::optional<SimplicialSimplex> simplicial_simplex(const Family& family) {
    const std::size_t d = family.dim;
    if (family.size() != d + 1)
        throw usage_error("DimensionMismatch", "simplicial simplex needs d+1 members");
    const SeparationCertificate cert = is_strongly_separated(family);
    if (!cert)
        throw hypothesis_error("NotStronglySeparated", "family is not strongly separated");

    SimplicialSimplex out;
    out.planes.reserve(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        Partition part;
        part.upper = {i};
        for (std::size_t j = 0; j <= d; ++j)
            if (j != i) part.lower.push_back(j);
        try {
            out.planes.push_back(unique_tangent_excluding(family, part, i, &cert));
        } catch (const Error& e) {
            if (e.code() == "NeitherQualifies" || e.code() == "BothQualify") return std::nullopt;
            throw;
        }
    }

    // Vertex i of S solves the d equations of the planes j != i.
    for (std::size_t i = 0; i <= d; ++i) {
        Matrix a(d, d);
        Vec b(d);
        std::size_t r = 0;
        for (std::size_t j = 0; j <= d; ++j) {
            if (j == i) continue;
            for (std::size_t c = 0; c < d; ++c) a.at(r, c) = out.planes[j].normal[c];
            b[r] = out.planes[j].offset;
            ++r;
        }
        const LinearSolution sol = solve_linear(a, b);
        if (sol.kind != SolveKind::Unique) {
            out.degenerate = true;
            return out;
        }
        out.simplex_vertices.push_back(sol.particular);
    }
    // S is the bounded cell iff vertex i lies strictly on the nonnegative
    // side of the excluded plane i; equality collapses the simplex.
    for (std::size_t i = 0; i <= d; ++i) {
        if (sgn(out.planes[i].value(out.simplex_vertices[i])) <= 0) {
            out.degenerate = true;
            return out;
        }
    }
    if (affine_rank(out.simplex_vertices) != d) out.degenerate = true;
    return out;
}

}  // namespace ptg
