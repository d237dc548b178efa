#include "ptg/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "ptg/errors.hpp"

namespace ptg {

std::vector<std::size_t> TangentComplex::f_vector() const {
    std::vector<std::size_t> f;
    f.reserve(faces.size());
    for (const auto& level : faces) f.push_back(level.size());
    return f;
}

long long TangentComplex::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t t = 0; t < faces.size(); ++t)
        chi += (t % 2 == 0 ? 1 : -1) * static_cast<long long>(faces[t].size());
    return chi;
}

bool TangentComplex::empty() const {
    for (const auto& level : faces)
        if (!level.empty()) return false;
    return true;
}

TangentComplex tangent_complex(const Family& family) {
    const std::size_t d = family.dim;
    const std::size_t m = family.size();
    if (m > d) throw usage_error("DimensionMismatch", "tangent complex needs m <= d");

    const std::vector<Vec> pts = family.all_vertices();
    const std::vector<std::size_t> colors_by_point = family.vertex_colors();
    {
        std::map<Vec, std::size_t> seen;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            auto [it, fresh] = seen.try_emplace(pts[i], colors_by_point[i]);
            if (!fresh && it->second != colors_by_point[i])
                throw hypothesis_error("VertexColorClash", "two members share a vertex");
        }
    }

    const SeparationCertificate cert = is_strongly_separated(family);
    if (!cert.separated)
        throw hypothesis_error("NotStronglySeparated", "family is not strongly separated");

    const Polytope hull = convex_hull(pts, d);
    const std::vector<std::size_t> src = match_vertices(hull, pts);
    std::vector<std::size_t> vcolor(hull.vertices.size());
    for (std::size_t i = 0; i < src.size(); ++i) vcolor[i] = colors_by_point[src[i]];

    auto is_rainbow = [&](const std::vector<std::size_t>& verts) {
        std::set<std::size_t> cs;
        for (std::size_t v : verts) cs.insert(vcolor[v]);
        return cs.size() == m;
    };

    TangentComplex complex;
    complex.k = d - m;
    complex.faces.assign(complex.k + 1, {});

    // complex_index[j][i] = position of primal face i (level j) at complex
    // level d-1-j, or npos when the face is not rainbow.
    const std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> complex_index(d);
    for (std::size_t j = 0; j < d; ++j) {
        complex_index[j].assign(hull.faces[j].size(), npos);
        const std::size_t tdim = d - 1 - j;
        for (std::size_t i = 0; i < hull.faces[j].size(); ++i) {
            const Face& face = hull.faces[j][i];
            if (!is_rainbow(face.vertices)) continue;
            if (tdim >= complex.faces.size()) complex.faces.resize(tdim + 1);
            ComplexFace cf;
            cf.hull_vertices = face.vertices;
            cf.hull_facets = hull.facets_containing(face.vertices);
            if (tdim == 0)
                cf.plane = hull.facets[i].plane.flipped();  // family on H^>=
            complex_index[j][i] = complex.faces[tdim].size();
            complex.faces[tdim].push_back(std::move(cf));
        }
    }

    // A primal cover G' > G (dims j+1, j) reverses into the complex cover
    // tau_G > tau_G'; every parent of a rainbow face is rainbow.
    for (std::size_t j = 0; j + 1 < d; ++j) {
        const std::size_t tdim = d - 1 - j;
        for (std::size_t big = 0; big < hull.faces[j + 1].size(); ++big) {
            for (std::size_t small : hull.faces[j + 1][big].covers) {
                const std::size_t tau_small = complex_index[j][small];
                if (tau_small == npos) continue;
                complex.faces[tdim][tau_small].covers.push_back(complex_index[j + 1][big]);
            }
        }
    }
    for (auto& level : complex.faces)
        for (ComplexFace& f : level) std::sort(f.covers.begin(), f.covers.end());
    return complex;
}

SphereReport verify_sphere(const TangentComplex& complex) {
    SphereReport report;
    const std::size_t k = complex.k;

    if (complex.empty()) {
        report.reasons.push_back("complex is empty");
        return report;
    }
    for (std::size_t t = k + 1; t < complex.faces.size(); ++t) {
        if (!complex.faces[t].empty()) {
            report.reasons.push_back("faces above the intended dimension d-m");
            return report;
        }
    }

    report.euler = complex.euler_characteristic();
    const long long want = 1 + (k % 2 == 0 ? 1 : -1);
    report.euler_ok = report.euler == want;
    if (!report.euler_ok)
        report.reasons.push_back("euler characteristic " + std::to_string(report.euler) +
                                 " != " + std::to_string(want));

    const auto& top = complex.faces[k];
    if (k == 0) {
        report.pseudomanifold = true;
        report.connected = true;
    } else {
        std::vector<std::size_t> in_top(complex.faces[k - 1].size(), 0);
        for (const ComplexFace& f : top)
            for (std::size_t c : f.covers) ++in_top[c];
        report.pseudomanifold =
            std::all_of(in_top.begin(), in_top.end(), [](std::size_t n) { return n == 2; });
        if (!report.pseudomanifold)
            report.reasons.push_back("some (k-1)-face is not in exactly two k-faces");

        // Dual-graph connectivity over shared (k-1)-faces.
        std::map<std::size_t, std::vector<std::size_t>> by_ridge;
        for (std::size_t i = 0; i < top.size(); ++i)
            for (std::size_t c : top[i].covers) by_ridge[c].push_back(i);
        std::vector<bool> seen(top.size(), false);
        std::queue<std::size_t> queue;
        queue.push(0);
        seen[0] = true;
        std::size_t reached = 1;
        while (!queue.empty()) {
            const std::size_t cur = queue.front();
            queue.pop();
            for (std::size_t c : top[cur].covers) {
                for (std::size_t nb : by_ridge[c]) {
                    if (!seen[nb]) {
                        seen[nb] = true;
                        ++reached;
                        queue.push(nb);
                    }
                }
            }
        }
        report.connected = reached == top.size();
        if (!report.connected) report.reasons.push_back("maximal-face dual graph disconnected");
    }

    if (k == 0) {
        report.low_dim_exact = top.size() == 2;
        if (!*report.low_dim_exact)
            report.reasons.push_back("expected exactly 2 points, found " +
                                     std::to_string(top.size()));
    } else if (k == 1) {
        bool cycle = complex.faces[0].size() == complex.faces[1].size();
        std::vector<std::size_t> deg(complex.faces[0].size(), 0);
        for (const ComplexFace& e : complex.faces[1])
            for (std::size_t c : e.covers) ++deg[c];
        cycle = cycle && std::all_of(deg.begin(), deg.end(),
                                     [](std::size_t n) { return n == 2; });
        cycle = cycle && report.connected;
        report.low_dim_exact = cycle;
        if (!cycle) report.reasons.push_back("1-complex is not a single cycle");
    }

    report.pass = report.euler_ok && report.pseudomanifold && report.connected &&
                  (!report.low_dim_exact || *report.low_dim_exact);
    return report;
}

TangentComplex rainbow_points_dual(const Polytope& p,
                                   const std::vector<std::size_t>& facet_colors) {
    if (facet_colors.size() != p.facets.size())
        throw usage_error("DimensionMismatch", "facet coloring size mismatch");
    const std::set<std::size_t> used(facet_colors.begin(), facet_colors.end());
    const std::size_t m = used.size();
    const std::size_t d = p.dim;
    if (m > d) throw usage_error("DimensionMismatch", "rainbow locus needs at most d colors");

    const VisibilityReport report = classify_color_subsets(p, facet_colors);
    if (const SubsetReport* bad = report.first_neither()) {
        std::string subset;
        for (std::size_t c : bad->colors) subset += (subset.empty() ? "" : ",") + std::to_string(c);
        throw hypothesis_error("HypothesisFails",
                               "color subset {" + subset + "} is neither visible nor covisible");
    }

    auto rainbow_contained = [&](const std::vector<std::size_t>& face_vertices,
                                 std::vector<std::size_t>& containing) {
        containing = p.facets_containing(face_vertices);
        std::set<std::size_t> cs;
        for (std::size_t f : containing) cs.insert(facet_colors[f]);
        return cs.size() == m;
    };

    TangentComplex complex;
    complex.k = d - m;
    complex.faces.assign(complex.k + 1, {});
    const std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> complex_index(d);

    for (std::size_t j = 0; j < d; ++j) {
        complex_index[j].assign(p.faces[j].size(), npos);
        for (std::size_t i = 0; i < p.faces[j].size(); ++i) {
            std::vector<std::size_t> containing;
            if (!rainbow_contained(p.faces[j][i].vertices, containing)) continue;
            if (j >= complex.faces.size()) complex.faces.resize(j + 1);
            ComplexFace cf;
            cf.hull_vertices = p.faces[j][i].vertices;
            cf.hull_facets = std::move(containing);
            complex_index[j][i] = complex.faces[j].size();
            complex.faces[j].push_back(std::move(cf));
        }
    }
    // Primal covers restricted to the locus (which is closed downward).
    for (std::size_t j = 1; j < d; ++j) {
        for (std::size_t big = 0; big < p.faces[j].size(); ++big) {
            if (complex_index[j][big] == npos) continue;
            ComplexFace& cf = complex.faces[j][complex_index[j][big]];
            for (std::size_t small : p.faces[j][big].covers) {
                if (complex_index[j - 1][small] == npos)
                    throw internal_error("LocusNotClosed", "rainbow locus missing a subface");
                cf.covers.push_back(complex_index[j - 1][small]);
            }
        }
    }
    for (auto& level : complex.faces)
        for (ComplexFace& f : level) std::sort(f.covers.begin(), f.covers.end());
    return complex;
}

}  // namespace ptg
