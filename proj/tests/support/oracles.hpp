#pragma once

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ptg/hyperplane.hpp"
#include "ptg/polytope.hpp"

namespace ptg::testing {

inline std::size_t affine_rank_subset(const Polytope& p, const std::vector<std::size_t>& idx) {
    std::vector<Vec> sub;
    for (std::size_t i : idx) sub.push_back(p.vertices[i]);
    return affine_rank(sub);
}

inline std::string unoriented_key(const OrientedHyperplane& h) {
    OrientedHyperplane c = h.canonical();
    for (const Rat& x : c.normal) {
        if (sgn(x) < 0) {
            c = c.flipped();
            break;
        }
        if (sgn(x) > 0) break;
    }
    std::string key;
    for (const Rat& x : c.normal) key += rat_to_string(x) + ",";
    return key + ";" + rat_to_string(c.offset);
}

// Independent facet enumeration: every d-subset spanning a hyperplane that
// supports the whole point set is a facet hyperplane candidate; true facets
// are those whose contact set is (d-1)-dimensional.
inline std::set<std::string> brute_force_facet_planes(const std::vector<Vec>& pts,
                                                      std::size_t d) {
    std::set<std::string> planes;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    if (pts.size() < d) return planes;
    for (;;) {
        std::vector<Vec> sub;
        for (std::size_t i : idx) sub.push_back(pts[i]);
        if (affine_rank(sub) == d - 1) {
            const OrientedHyperplane h = hyperplane_through(sub);
            bool above = false, below = false;
            std::vector<Vec> contact;
            for (const Vec& p : pts) {
                const int s = h.side(p);
                if (s > 0) above = true;
                else if (s < 0) below = true;
                else contact.push_back(p);
            }
            if (!(above && below) && affine_rank(contact) == d - 1)
                planes.insert(unoriented_key(h));
        }
        std::size_t k = d;
        while (k > 0 && idx[k - 1] == pts.size() - d + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return planes;
}

// Full structural validation of a hull against its defining invariants.
inline void check_polytope_valid(const Polytope& p) {
    REQUIRE(p.dim >= 1);
    REQUIRE(p.faces.size() == p.dim);
    REQUIRE(p.faces[p.dim - 1].size() == p.facets.size());

    // Every vertex satisfies every facet inequality, with equality exactly
    // on the incidence list.
    for (std::size_t f = 0; f < p.facets.size(); ++f) {
        for (std::size_t v = 0; v < p.vertices.size(); ++v) {
            const int s = p.facets[f].plane.side(p.vertices[v]);
            REQUIRE(s <= 0);
            const bool listed = std::binary_search(p.facets[f].vertices.begin(),
                                                   p.facets[f].vertices.end(), v);
            REQUIRE((s == 0) == listed);
        }
        REQUIRE(affine_rank_subset(p, p.facets[f].vertices) == p.dim - 1);
    }

    // Vertices are exactly the 0-faces.
    REQUIRE(p.faces[0].size() == p.vertices.size());
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
        REQUIRE(p.faces[0][v].vertices == std::vector<std::size_t>{v});

    // No vertex is a convex combination of the others: incident facet
    // normals span R^d.
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        std::vector<Vec> normals;
        for (const Facet& f : p.facets)
            if (std::binary_search(f.vertices.begin(), f.vertices.end(), v))
                normals.push_back(f.plane.normal);
        REQUIRE(rank_of(normals) == p.dim);
    }

    if (p.dim >= 2) {
        // Every ridge lies in exactly two facets.
        for (const Face& ridge : p.faces[p.dim - 2]) {
            REQUIRE(p.facets_containing(ridge.vertices).size() == 2);
        }
        // Euler relation for the boundary complex.
        long long chi = 0;
        for (std::size_t k = 0; k < p.dim; ++k)
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(p.faces[k].size());
        REQUIRE(chi == 1 + (p.dim % 2 == 0 ? -1 : 1));
    }

    // Cover relations connect consecutive levels consistently.
    for (std::size_t k = 1; k < p.dim; ++k) {
        for (const Face& face : p.faces[k]) {
            for (std::size_t c : face.covers) {
                REQUIRE(c < p.faces[k - 1].size());
                const auto& small = p.faces[k - 1][c].vertices;
                REQUIRE(std::includes(face.vertices.begin(), face.vertices.end(), small.begin(),
                                      small.end()));
            }
        }
    }
}

}  // namespace ptg::testing
