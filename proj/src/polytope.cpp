#include "ptg/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ptg/errors.hpp"
#include "ptg/lp.hpp"

namespace ptg {

bool Polytope::contains(const Vec& p) const {
    for (const Facet& f : facets)
        if (sgn(f.plane.value(p)) > 0) return false;
    return true;
}

bool Polytope::strictly_contains(const Vec& p) const {
    for (const Facet& f : facets)
        if (sgn(f.plane.value(p)) >= 0) return false;
    return true;
}

std::vector<std::size_t> Polytope::facets_containing(
    const std::vector<std::size_t>& face_vertices) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (std::includes(facets[i].vertices.begin(), facets[i].vertices.end(),
                          face_vertices.begin(), face_vertices.end()))
            out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> Polytope::f_vector() const {
    std::vector<std::size_t> f;
    f.reserve(faces.size());
    for (const auto& level : faces) f.push_back(level.size());
    return f;
}

namespace {

// Orients `plane` so every point satisfies <= and collects the incident
// point indices. Throws when the plane does not support the point set.
Facet finalize_facet(OrientedHyperplane plane, const std::vector<Vec>& pts) {
    int seen = 0;
    std::vector<std::size_t> on;
    std::vector<int> signs(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        signs[i] = plane.side(pts[i]);
        if (signs[i] != 0 && seen == 0) seen = signs[i];
    }
    if (seen > 0) {
        plane = plane.flipped();
        for (int& s : signs) s = -s;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (signs[i] == 0)
            on.push_back(i);
        else if (signs[i] > 0)
            throw internal_error("NotSupporting", "candidate facet plane cuts the point set");
    }
    return Facet{std::move(plane), std::move(on)};
}

std::vector<std::size_t> sorted_intersection(const std::vector<std::size_t>& a,
                                             const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::size_t affine_rank_of_subset(const std::vector<Vec>& pts,
                                  const std::vector<std::size_t>& idx) {
    std::vector<Vec> sub;
    sub.reserve(idx.size());
    for (std::size_t i : idx) sub.push_back(pts[i]);
    return affine_rank(sub);
}

Polytope hull_1d(const std::vector<Vec>& points) {
    Vec lo = points[0], hi = points[0];
    for (const Vec& p : points) {
        if (p[0] < lo[0]) lo = p;
        if (p[0] > hi[0]) hi = p;
    }
    if (lo[0] == hi[0])
        throw hypothesis_error("NotFullDimensional", "points do not span R^1");
    Polytope poly;
    poly.dim = 1;
    poly.vertices = {lo, hi};
    poly.facets = {Facet{OrientedHyperplane{{Rat(-1)}, -lo[0]}, {0}},
                   Facet{OrientedHyperplane{{Rat(1)}, hi[0]}, {1}}};
    poly.faces = {{Face{{0}, {}}, Face{{1}, {}}}};
    return poly;
}

// Greedy affinely independent subset of size d+1.
std::vector<std::size_t> initial_simplex(const std::vector<Vec>& pts, std::size_t d) {
    std::vector<std::size_t> chosen = {0};
    std::vector<Vec> sofar = {pts[0]};
    for (std::size_t i = 1; i < pts.size() && chosen.size() < d + 1; ++i) {
        sofar.push_back(pts[i]);
        if (affine_rank(sofar) == chosen.size()) {
            chosen.push_back(i);
        } else {
            sofar.pop_back();
        }
    }
    if (chosen.size() < d + 1)
        throw hypothesis_error("NotFullDimensional", "points do not affinely span R^d");
    return chosen;
}

void build_lattice(Polytope& poly) {
    const std::size_t d = poly.dim;
    poly.faces.assign(d, {});
    auto& levels = poly.faces;

    levels[d - 1].reserve(poly.facets.size());
    for (const Facet& f : poly.facets) levels[d - 1].push_back(Face{f.vertices, {}});

    for (std::size_t k = d - 1; k >= 1; --k) {
        std::map<std::vector<std::size_t>, std::size_t> index_of;
        for (Face& big : levels[k]) {
            std::set<std::size_t> covers;
            for (const Facet& cut : poly.facets) {
                std::vector<std::size_t> sub = sorted_intersection(big.vertices, cut.vertices);
                if (sub.empty() || sub == big.vertices) continue;
                if (affine_rank_of_subset(poly.vertices, sub) != k - 1) continue;
                auto [it, fresh] = index_of.try_emplace(sub, levels[k - 1].size());
                if (fresh) levels[k - 1].push_back(Face{sub, {}});
                covers.insert(it->second);
            }
            big.covers.assign(covers.begin(), covers.end());
        }
        // Keep level ordering deterministic: sort by vertex set and remap.
        std::vector<std::size_t> order(levels[k - 1].size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return levels[k - 1][a].vertices < levels[k - 1][b].vertices;
        });
        std::vector<std::size_t> rank_of(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) rank_of[order[i]] = i;
        std::vector<Face> sorted_level(order.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            sorted_level[i] = std::move(levels[k - 1][order[i]]);
        levels[k - 1] = std::move(sorted_level);
        for (Face& big : levels[k])
            for (std::size_t& c : big.covers) c = rank_of[c];
    }
}

}  // namespace

Polytope convex_hull(const std::vector<Vec>& points, std::size_t d) {
    if (d == 0) throw usage_error("DimensionMismatch", "dimension must be positive");
    for (const Vec& p : points)
        if (p.size() != d) throw usage_error("DimensionMismatch", "point dimension != d");

    // Exact dedup, keeping first occurrences.
    std::vector<Vec> pts;
    for (const Vec& p : points)
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);

    if (pts.size() < d + 1)
        throw hypothesis_error("NotFullDimensional", "points do not affinely span R^d");
    if (d == 1) return hull_1d(pts);

    const std::vector<std::size_t> seed = initial_simplex(pts, d);

    std::vector<Vec> verts;
    for (std::size_t i : seed) verts.push_back(pts[i]);

    std::vector<Facet> facets;
    for (std::size_t omit = 0; omit <= d; ++omit) {
        std::vector<Vec> span;
        for (std::size_t i = 0; i <= d; ++i)
            if (i != omit) span.push_back(verts[i]);
        facets.push_back(finalize_facet(hyperplane_through(span), verts));
    }

    std::set<std::size_t> seeded(seed.begin(), seed.end());
    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
        if (seeded.count(pi)) continue;
        const Vec& p = pts[pi];
        if (std::find(verts.begin(), verts.end(), p) != verts.end()) continue;

        std::vector<int> cls(facets.size());  // +1 beyond, 0 on, -1 beneath
        bool any_beyond = false;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            cls[f] = facets[f].plane.side(p);
            any_beyond |= cls[f] > 0;
        }
        if (!any_beyond) continue;  // p already in the hull

        // Candidate planes of the next hull: beneath facets survive, "on"
        // facets extend across p, and each horizon ridge spans a new facet
        // with p. Incidences are recomputed from scratch afterwards.
        std::vector<OrientedHyperplane> candidates;
        auto push_unique = [&](const OrientedHyperplane& h) {
            for (const OrientedHyperplane& c : candidates)
                if (c.same_oriented(h)) return;
            candidates.push_back(h);
        };
        for (std::size_t f = 0; f < facets.size(); ++f)
            if (cls[f] <= 0) push_unique(facets[f].plane);
        for (std::size_t fb = 0; fb < facets.size(); ++fb) {
            if (cls[fb] <= 0) continue;
            for (std::size_t gb = 0; gb < facets.size(); ++gb) {
                if (cls[gb] >= 0) continue;
                std::vector<std::size_t> ridge =
                    sorted_intersection(facets[fb].vertices, facets[gb].vertices);
                if (ridge.size() < d - 1) continue;
                if (affine_rank_of_subset(verts, ridge) != d - 2) continue;
                std::vector<Vec> span;
                for (std::size_t i : ridge) span.push_back(verts[i]);
                span.push_back(p);
                push_unique(hyperplane_through(span));
            }
        }

        verts.push_back(p);
        std::vector<Facet> next;
        next.reserve(candidates.size());
        for (const OrientedHyperplane& h : candidates) next.push_back(finalize_facet(h, verts));

        // Drop points that stopped being extreme: a point is a vertex iff
        // its incident facet normals span R^d.
        std::vector<bool> keep(verts.size(), false);
        for (std::size_t vi = 0; vi < verts.size(); ++vi) {
            std::vector<Vec> normals;
            for (const Facet& f : next)
                if (std::binary_search(f.vertices.begin(), f.vertices.end(), vi))
                    normals.push_back(f.plane.normal);
            keep[vi] = rank_of(normals) == d;
        }
        std::vector<std::size_t> remap(verts.size());
        std::vector<Vec> kept;
        for (std::size_t vi = 0; vi < verts.size(); ++vi) {
            if (keep[vi]) {
                remap[vi] = kept.size();
                kept.push_back(std::move(verts[vi]));
            }
        }
        for (Facet& f : next) {
            std::vector<std::size_t> inc;
            for (std::size_t vi : f.vertices)
                if (keep[vi]) inc.push_back(remap[vi]);
            f.vertices = std::move(inc);
        }
        verts = std::move(kept);
        facets = std::move(next);
    }

    std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
        return hyperplane_less(a.plane, b.plane);
    });

    Polytope poly;
    poly.dim = d;
    poly.vertices = std::move(verts);
    poly.facets = std::move(facets);
    build_lattice(poly);
    return poly;
}

std::vector<std::size_t> match_vertices(const Polytope& p, const std::vector<Vec>& points) {
    std::vector<std::size_t> src(p.vertices.size());
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        auto it = std::find(points.begin(), points.end(), p.vertices[i]);
        if (it == points.end())
            throw internal_error("NoSourcePoint", "hull vertex missing from input set");
        src[i] = static_cast<std::size_t>(it - points.begin());
    }
    return src;
}

Vec interior_point(const Polytope& p) {
    Vec c = zero_vec(p.dim);
    for (const Vec& v : p.vertices) c = vec_add(c, v);
    c = vec_scale(c, Rat(1, static_cast<long>(p.vertices.size())));
    return c;
}

Polytope polar_dual(const Polytope& p) {
    const std::size_t d = p.dim;
    for (const Facet& f : p.facets)
        if (sgn(f.plane.offset) <= 0)
            throw usage_error("OriginNotInterior", "polar dual needs 0 strictly inside");

    Polytope dual;
    dual.dim = d;
    dual.vertices.reserve(p.facets.size());
    for (const Facet& f : p.facets)
        dual.vertices.push_back(vec_scale(f.plane.normal, 1 / f.plane.offset));

    dual.facets.reserve(p.vertices.size());
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        std::vector<std::size_t> inc;
        for (std::size_t f = 0; f < p.facets.size(); ++f)
            if (std::binary_search(p.facets[f].vertices.begin(), p.facets[f].vertices.end(), v))
                inc.push_back(f);
        dual.facets.push_back(Facet{OrientedHyperplane{p.vertices[v], Rat(1)}, std::move(inc)});
    }

    // Order-reversed lattice: a primal k-face becomes a dual (d-1-k)-face
    // whose vertex set lists the primal facets containing it.
    dual.faces.assign(d, {});
    for (std::size_t k = 0; k < d; ++k) {
        dual.faces[d - 1 - k].resize(p.faces[k].size());
        for (std::size_t i = 0; i < p.faces[k].size(); ++i)
            dual.faces[d - 1 - k][i].vertices = p.facets_containing(p.faces[k][i].vertices);
    }
    // Primal cover (big k-face covers small (k-1)-face) flips into the dual
    // cover (small* covers big*).
    for (std::size_t k = 1; k < d; ++k) {
        for (std::size_t i = 0; i < p.faces[k].size(); ++i)
            for (std::size_t c : p.faces[k][i].covers)
                dual.faces[d - k][c].covers.push_back(i);
    }
    for (auto& level : dual.faces)
        for (Face& f : level) std::sort(f.covers.begin(), f.covers.end());
    return dual;
}

Polytope vertex_figure(const Polytope& p, std::size_t v, const Rat& t) {
    if (p.dim < 2) throw usage_error("DimensionMismatch", "vertex figure needs dim >= 2");
    if (v >= p.vertices.size()) throw usage_error("NotAVertex", "vertex index out of range");
    if (sgn(t) <= 0 || t >= 1) throw usage_error("BadCutFactor", "cut factor must be in (0,1)");

    // Sum of incident facet normals supports P exactly at v.
    Vec n = zero_vec(p.dim);
    for (const Facet& f : p.facets)
        if (std::binary_search(f.vertices.begin(), f.vertices.end(), v))
            n = vec_add(n, f.plane.normal);

    const Rat at_v = dot(p.vertices[v], n);
    bool have_other = false;
    Rat max_other;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i == v) continue;
        const Rat val = dot(p.vertices[i], n);
        if (!have_other || val > max_other) max_other = val;
        have_other = true;
    }
    if (!have_other || max_other >= at_v)
        throw internal_error("NotAVertex", "support direction failed to isolate the vertex");
    const Rat cut = at_v - t * (at_v - max_other);

    // One cross-section point per edge at v.
    std::vector<Vec> section;
    for (const Face& edge : p.faces[1]) {
        if (!std::binary_search(edge.vertices.begin(), edge.vertices.end(), v)) continue;
        for (std::size_t w : edge.vertices) {
            if (w == v) continue;
            const Rat at_w = dot(p.vertices[w], n);
            const Rat s = (at_v - cut) / (at_v - at_w);
            section.push_back(vec_add(p.vertices[v],
                                      vec_scale(vec_sub(p.vertices[w], p.vertices[v]), s)));
        }
    }

    // Chart the cutting hyperplane down by dropping a coordinate where the
    // normal is nonzero; an affine bijection, so combinatorics survive.
    std::size_t drop = 0;
    while (drop < p.dim && sgn(n[drop]) == 0) ++drop;
    std::vector<Vec> charted;
    charted.reserve(section.size());
    for (const Vec& q : section) {
        Vec c;
        c.reserve(p.dim - 1);
        for (std::size_t j = 0; j < p.dim; ++j)
            if (j != drop) c.push_back(q[j]);
        charted.push_back(std::move(c));
    }
    return convex_hull(charted, p.dim - 1);
}

VectorConfiguration linearize(const std::vector<Vec>& points) {
    VectorConfiguration config;
    config.dim = points.empty() ? 0 : points[0].size() + 1;
    config.vectors.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        Vec v = points[i];
        v.push_back(1);
        config.vectors.push_back(std::move(v));
        config.labels.push_back(i);
    }
    return config;
}

Vec AffineChart::to_chart(const Vec& ambient) const {
    Vec out;
    out.reserve(ambient.size() - 1);
    for (std::size_t j = 0; j < ambient.size(); ++j)
        if (j != drop) out.push_back(ambient[j]);
    return out;
}

Vec AffineChart::plane_to_linear(const Vec& w, const Rat& beta) const {
    Vec n(h.size());
    std::size_t wi = 0;
    for (std::size_t j = 0; j < h.size(); ++j) {
        if (j == drop)
            n[j] = -beta * h[j];
        else
            n[j] = w[wi++] - beta * h[j];
    }
    return n;
}

Affinization affinize(const VectorConfiguration& config, const Vec& h) {
    if (!config.vectors.empty() && h.size() != config.dim)
        throw usage_error("DimensionMismatch", "witness dimension != configuration dimension");
    std::size_t drop = 0;
    while (drop < h.size() && sgn(h[drop]) == 0) ++drop;
    if (drop == h.size()) throw usage_error("WitnessInvalid", "zero witness vector");

    Affinization out;
    out.chart = AffineChart{h, drop};
    out.points.reserve(config.vectors.size());
    for (const Vec& v : config.vectors) {
        const Rat s = dot(h, v);
        if (sgn(s) <= 0)
            throw usage_error("WitnessInvalid", "witness has nonpositive product with a vector");
        out.points.push_back(out.chart.to_chart(vec_scale(v, 1 / s)));
    }
    return out;
}

std::optional<Vec> acyclicity_witness(const VectorConfiguration& config) {
    if (config.vectors.empty()) return std::nullopt;
    InequalitySystem sys;
    sys.dimension = config.dim;
    for (const Vec& v : config.vectors) sys.add(v, 0, Rel::GT);
    const FeasibilityResult r = feasible(sys);
    if (!r.feasible) return std::nullopt;
    return r.witness;
}

}  // namespace ptg
