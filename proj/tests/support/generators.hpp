#pragma once

#include <random>
#include <vector>

#include "ptg/rational.hpp"
#include "ptg/separation.hpp"

namespace ptg::testing {

using Rng = std::mt19937_64;

// Small random rational p/q with |p| <= span*q and q in 1..max_den.
inline Rat random_rat(Rng& rng, long span = 4, long max_den = 6) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long q = den(rng);
    std::uniform_int_distribution<long> num(-span * q, span * q);
    return make_rat(num(rng), q);
}

inline Vec random_vec(Rng& rng, std::size_t d, long span = 4, long max_den = 6) {
    Vec v(d);
    for (Rat& c : v) c = random_rat(rng, span, max_den);
    return v;
}

// Anchors on a scaled simplex keep the boxes far apart, which guarantees
// strong separation for every bipartition; the certificate is still checked
// by callers that rely on it.
inline std::vector<Vec> simplex_anchors(std::size_t d, std::size_t m, long scale) {
    std::vector<Vec> anchors;
    for (std::size_t i = 0; i < m; ++i) {
        Vec a = zero_vec(d);
        if (i > 0) a[i - 1] = scale;
        anchors.push_back(std::move(a));
    }
    return anchors;
}

// Random full-dimensional member around an anchor: a small simplex plus a
// few extra points, all within a box of radius ~1.
inline std::vector<Vec> random_member(Rng& rng, const Vec& anchor) {
    const std::size_t d = anchor.size();
    std::vector<Vec> pts;
    for (;;) {
        pts.clear();
        for (std::size_t i = 0; i < d + 1; ++i)
            pts.push_back(vec_add(anchor, random_vec(rng, 1, 4)));
        if (affine_rank(pts) == d) break;
    }
    std::uniform_int_distribution<int> extra(0, 2);
    for (int i = extra(rng); i > 0; --i) pts.push_back(vec_add(anchor, random_vec(rng, 1, 4)));
    return pts;
}

// Strongly separated family of m full-dimensional members in R^d.
inline Family random_separated_family(Rng& rng, std::size_t d, std::size_t m) {
    const std::vector<Vec> anchors = simplex_anchors(d, m, 12);
    std::vector<std::vector<Vec>> members;
    for (const Vec& a : anchors) members.push_back(random_member(rng, a));
    return make_family(d, std::move(members));
}

// Random polytope as the hull of a handful of points.
inline Polytope random_polytope(Rng& rng, std::size_t d, std::size_t extra = 4) {
    for (;;) {
        std::vector<Vec> pts;
        for (std::size_t i = 0; i < d + 1 + extra; ++i) pts.push_back(random_vec(rng, 4, 4));
        if (affine_rank(pts) == d) return convex_hull(pts, d);
    }
}

}  // namespace ptg::testing
