#include "ptg/tangents.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ptg/errors.hpp"
#include "ptg/lp.hpp"
#include "ptg/polytope.hpp"

namespace ptg {

namespace {

void validate_partition(const Partition& part, std::size_t m) {
    std::set<std::size_t> seen;
    for (std::size_t i : part.upper) seen.insert(i);
    for (std::size_t i : part.lower) seen.insert(i);
    if (seen.size() != part.upper.size() + part.lower.size() || seen.size() != m ||
        (m > 0 && *seen.rbegin() != m - 1))
        throw usage_error("BadPartition", "partition must split members 0..m-1 exactly");
}

std::string describe_side(const std::vector<std::size_t>& side) {
    std::string s = "{";
    for (std::size_t i = 0; i < side.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(side[i] + 1);
    }
    return s + "}";
}

std::string plane_key(const OrientedHyperplane& h) {
    std::string key;
    for (const Rat& c : h.normal) key += rat_to_string(c) + ",";
    key += ";" + rat_to_string(h.offset);
    return key;
}

OrientedHyperplane unoriented_canonical(const OrientedHyperplane& h) {
    OrientedHyperplane c = h.canonical();
    for (const Rat& x : c.normal) {
        if (sgn(x) > 0) return c;
        if (sgn(x) < 0) return c.flipped();
    }
    throw usage_error("ZeroNormal", "hyperplane with zero normal");
}

}  // namespace

Partition Partition::canonical(std::size_t m) const {
    validate_partition(*this, m);
    Partition p = *this;
    if (std::find(p.upper.begin(), p.upper.end(), std::size_t(0)) == p.upper.end())
        p = p.swapped();
    std::sort(p.upper.begin(), p.upper.end());
    std::sort(p.lower.begin(), p.lower.end());
    return p;
}

std::string Partition::describe() const {
    return describe_side(upper) + "|" + describe_side(lower);
}

std::vector<Partition> canonical_partitions(std::size_t m) {
    std::vector<Partition> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << (m - 1)); ++mask) {
        Partition p;
        p.upper.push_back(0);
        for (std::size_t j = 1; j < m; ++j) {
            if (mask & (std::size_t(1) << (j - 1)))
                p.lower.push_back(j);
            else
                p.upper.push_back(j);
        }
        out.push_back(std::move(p));
    }
    return out;
}

TangentCheck verify_tangent(const OrientedHyperplane& plane, const Family& family,
                            const Partition& part) {
    validate_partition(part, family.size());
    auto check_side = [&](const std::vector<std::size_t>& side, int want) -> TangentCheck {
        for (std::size_t i : side) {
            bool touches = false;
            for (std::size_t v = 0; v < family.members[i].vertices.size(); ++v) {
                const int s = plane.side(family.members[i].vertices[v]);
                if (s == 0) touches = true;
                if (s == -want)
                    return {false, "member " + std::to_string(i + 1) + " vertex " +
                                       std::to_string(v) + " is on the wrong side"};
            }
            if (!touches)
                return {false, "member " + std::to_string(i + 1) + " does not touch the plane"};
        }
        return {true, ""};
    };
    TangentCheck up = check_side(part.upper, 1);
    if (!up.pass) return up;
    TangentCheck down = check_side(part.lower, -1);
    if (!down.pass) return down;
    return {true, ""};
}

std::vector<std::size_t> rainbow_facets(const Polytope& hull,
                                        const std::vector<std::size_t>& vertex_colors,
                                        std::size_t m) {
    if (vertex_colors.size() != hull.vertices.size())
        throw usage_error("DimensionMismatch", "vertex coloring size mismatch");
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < hull.facets.size(); ++f) {
        std::set<std::size_t> colors;
        for (std::size_t v : hull.facets[f].vertices) colors.insert(vertex_colors[v]);
        bool rainbow = true;
        for (std::size_t c = 0; c < m && rainbow; ++c) rainbow = colors.count(c) > 0;
        if (rainbow) out.push_back(f);
    }
    return out;
}

TangentPair sandwich_tangents(const Family& family, const Partition& part,
                              const SeparationCertificate* cert) {
    const std::size_t d = family.dim;
    const std::size_t m = family.size();
    if (m != d) throw usage_error("DimensionMismatch", "sandwich tangents need m = d members");
    validate_partition(part, m);

    SeparationCertificate own;
    if (!cert) {
        own = is_strongly_separated(family);
        cert = &own;
    }
    if (!cert->separated)
        throw hypothesis_error("NotStronglySeparated",
                               "failing bipartition " + [&] {
                                   std::vector<std::size_t> v(cert->failing_bipartition.begin(),
                                                              cert->failing_bipartition.end());
                                   return describe_side(v);
                               }());
    if (!family.affinely_spanning())
        throw hypothesis_error("NotAffinelySpanning", "family does not affinely span R^d");

    const std::set<std::size_t> lower_set(part.lower.begin(), part.lower.end());

    // Linearize every member vertex and negate the lower side.
    VectorConfiguration config;
    config.dim = d + 1;
    struct SourceRef {
        std::size_t member, vertex;
    };
    std::vector<SourceRef> sources;
    for (std::size_t i = 0; i < m; ++i) {
        const bool negate = lower_set.count(i) > 0;
        for (std::size_t v = 0; v < family.members[i].vertices.size(); ++v) {
            Vec w = family.members[i].vertices[v];
            w.push_back(1);
            if (negate) w = vec_scale(w, -1);
            config.vectors.push_back(std::move(w));
            config.labels.push_back(sources.size());
            sources.push_back({i, v});
        }
    }

    // Acyclicity witness: the lift of any hyperplane strictly separating the
    // lower union (below) from the upper union (above).
    Vec h;
    if (part.lower.empty()) {
        h = unit_vec(d + 1, d);
    } else if (part.upper.empty()) {
        h = vec_scale(unit_vec(d + 1, d), -1);
    } else {
        std::vector<Vec> lower_pts, upper_pts;
        for (std::size_t i : part.lower) {
            const auto& vs = family.members[i].vertices;
            lower_pts.insert(lower_pts.end(), vs.begin(), vs.end());
        }
        for (std::size_t i : part.upper) {
            const auto& vs = family.members[i].vertices;
            upper_pts.insert(upper_pts.end(), vs.begin(), vs.end());
        }
        const auto sep = separating_hyperplane(lower_pts, upper_pts, true);
        if (!sep)
            throw internal_error("AcyclicityWitnessMissing",
                                 "strongly separated family without a partition witness");
        h = sep->normal;
        h.push_back(-sep->offset);
    }

    const Affinization aff = affinize(config, h);
    const Polytope hull = convex_hull(aff.points, d);

    // Color hull vertices by source member.
    const std::vector<std::size_t> src = match_vertices(hull, aff.points);
    std::vector<std::size_t> colors(hull.vertices.size());
    for (std::size_t i = 0; i < src.size(); ++i) colors[i] = sources[config.labels[src[i]]].member;

    const std::vector<std::size_t> rainbow = rainbow_facets(hull, colors, m);
    if (rainbow.size() != 2)
        throw internal_error("RainbowCountUnexpected",
                             "expected 2 rainbow facets, found " + std::to_string(rainbow.size()));

    TangentPair pair;
    pair.partition = part;
    std::vector<TangentHyperplane> results;
    for (std::size_t f : rainbow) {
        const OrientedHyperplane& chart_plane = hull.facets[f].plane;
        Vec n = aff.chart.plane_to_linear(chart_plane.normal, chart_plane.offset);
        n = vec_scale(n, -1);  // configuration vectors on the nonnegative side

        Vec u(n.begin(), n.begin() + d);
        if (vec_is_zero(u))
            throw internal_error("DegenerateTangent", "tangent plane with zero affine normal");
        OrientedHyperplane plane{std::move(u), -n[d]};

        TangentHyperplane th;
        th.plane = plane;
        th.tangent_faces.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t v = 0; v < family.members[i].vertices.size(); ++v)
                if (plane.side(family.members[i].vertices[v]) == 0) th.tangent_faces[i].push_back(v);
            if (th.tangent_faces[i].empty())
                throw internal_error("DegenerateTangent", "member lost tangency in pullback");
        }
        results.push_back(std::move(th));
    }

    for (const TangentHyperplane& th : results) {
        const TangentCheck check = verify_tangent(th.plane, family, part);
        if (!check.pass)
            throw internal_error("TangentPostcondition", "pullback failed: " + check.failure);
    }

    if (hyperplane_less(results[1].plane, results[0].plane)) std::swap(results[0], results[1]);
    pair.first = std::move(results[0]);
    pair.second = std::move(results[1]);
    return pair;
}

std::vector<OrientedHyperplane> AllTangents::planes() const {
    std::vector<OrientedHyperplane> out;
    for (const TangentPair& p : pairs) {
        out.push_back(p.first.plane);
        out.push_back(p.second.plane);
    }
    return out;
}

AllTangents all_tangents(const Family& family) {
    const std::size_t d = family.dim;
    if (family.size() != d)
        throw usage_error("DimensionMismatch", "all_tangents needs m = d members");
    const SeparationCertificate cert = is_strongly_separated(family);
    if (!cert.separated)
        throw hypothesis_error("NotStronglySeparated", "family is not strongly separated");

    AllTangents out;
    out.full_dimensional = family.all_full_dimensional();
    for (const Partition& part : canonical_partitions(d))
        out.pairs.push_back(sandwich_tangents(family, part, &cert));

    const std::vector<OrientedHyperplane> planes = out.planes();
    out.all_distinct = true;
    for (std::size_t i = 0; i < planes.size() && out.all_distinct; ++i)
        for (std::size_t j = i + 1; j < planes.size() && out.all_distinct; ++j)
            if (planes[i].same_unoriented(planes[j])) out.all_distinct = false;
    if (out.full_dimensional && !out.all_distinct)
        throw internal_error("TangentsNotDistinct",
                             "full dimensional family produced coincident tangents");
    return out;
}

std::vector<OracleTangent> brute_force_tangents(const Family& family, const OracleOptions& opts) {
    const std::size_t d = family.dim;
    const std::vector<Vec> pts = family.all_vertices();
    const std::vector<std::size_t> colors = family.vertex_colors();
    if (pts.size() > opts.guard)
        throw usage_error("TooLarge", "vertex count " + std::to_string(pts.size()) +
                                          " exceeds oracle guard " + std::to_string(opts.guard));

    std::map<std::string, OracleTangent> found;

    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    const std::size_t n = pts.size();
    if (n < d) return {};

    auto consider = [&](const std::vector<std::size_t>& subset) {
        std::vector<Vec> span;
        for (std::size_t i : subset) span.push_back(pts[i]);
        if (affine_rank(span) != d - 1) return;
        OrientedHyperplane plane = unoriented_canonical(hyperplane_through(span));
        const std::string key = plane_key(plane);
        if (found.count(key)) return;

        std::vector<int> sides(family.size());
        for (std::size_t i = 0; i < family.size(); ++i) {
            bool above = false, below = false, on = false;
            for (const Vec& v : family.members[i].vertices) {
                const int s = plane.side(v);
                if (s > 0) above = true;
                else if (s < 0) below = true;
                else on = true;
            }
            if ((above && below) || !on) return;  // cut or missed: not tangent
            sides[i] = above ? 1 : (below ? -1 : 0);
        }
        found.emplace(key, OracleTangent{std::move(plane), std::move(sides)});
    };

    // Loop over all d-subsets in lexicographic order.
    for (;;) {
        consider(idx);
        std::size_t k = d;
        while (k > 0 && idx[k - 1] == n - d + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }

    std::vector<OracleTangent> out;
    out.reserve(found.size());
    for (auto& [key, val] : found) out.push_back(std::move(val));
    return out;
}

bool oracle_supports_partition(const OracleTangent& t, const Partition& part) {
    auto fits = [&](int flip) {
        for (std::size_t i : part.upper)
            if (flip * t.member_side[i] < 0) return false;
        for (std::size_t i : part.lower)
            if (flip * t.member_side[i] > 0) return false;
        return true;
    };
    return fits(1) || fits(-1);
}

OrientedHyperplane unique_tangent_excluding(const Family& family, const Partition& part,
                                            std::size_t special,
                                            const SeparationCertificate* cert) {
    const std::size_t d = family.dim;
    if (family.size() != d + 1)
        throw usage_error("DimensionMismatch", "unique tangent needs m = d+1 members");
    validate_partition(part, d + 1);
    if (std::find(part.upper.begin(), part.upper.end(), special) == part.upper.end())
        throw usage_error("BadPartition", "special member must lie on the upper side");

    SeparationCertificate own;
    if (!cert) {
        own = is_strongly_separated(family);
        cert = &own;
    }
    if (!cert->separated)
        throw hypothesis_error("NotStronglySeparated", "family is not strongly separated");

    // Subfamily without the special member, reindexed.
    Family sub;
    sub.dim = d;
    std::vector<std::size_t> old_index;
    for (std::size_t i = 0; i <= d; ++i) {
        if (i == special) continue;
        sub.members.push_back(family.members[i]);
        old_index.push_back(i);
    }
    auto reindex = [&](const std::vector<std::size_t>& side) {
        std::vector<std::size_t> out;
        for (std::size_t i : side) {
            if (i == special) continue;
            const auto it = std::find(old_index.begin(), old_index.end(), i);
            out.push_back(static_cast<std::size_t>(it - old_index.begin()));
        }
        return out;
    };
    Partition sub_part{reindex(part.upper), reindex(part.lower)};

    const TangentPair pair = sandwich_tangents(sub, sub_part);

    auto qualifies = [&](const OrientedHyperplane& plane) {
        for (const Vec& v : family.members[special].vertices)
            if (plane.side(v) <= 0) return false;
        return true;
    };
    const bool q1 = qualifies(pair.first.plane);
    const bool q2 = qualifies(pair.second.plane);
    if (q1 && q2)
        throw hypothesis_error("BothQualify",
                               "both sandwich candidates leave the special member strictly above");
    if (!q1 && !q2)
        throw hypothesis_error("NeitherQualifies",
                               "no sandwich candidate leaves the special member strictly above");
    return q1 ? pair.first.plane : pair.second.plane;
}

}  // namespace ptg
