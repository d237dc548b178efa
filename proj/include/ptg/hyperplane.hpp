#pragma once

#include <vector>

#include "ptg/linalg.hpp"
#include "ptg/rational.hpp"

namespace ptg {

// Affine hyperplane {x : <x,u> = alpha} with a distinguished positive side
// {<x,u> > alpha}. The pair (u, alpha) is meaningful up to positive scaling;
// negating both flips the orientation.
struct OrientedHyperplane {
    Vec normal;
    Rat offset;

    // <p, u> - alpha; positive on the positive side.
    Rat value(const Vec& p) const { return dot(p, normal) - offset; }
    int side(const Vec& p) const { return sign(value(p)); }

    OrientedHyperplane flipped() const {
        OrientedHyperplane h{normal, -offset};
        for (Rat& c : h.normal) c = -c;
        return h;
    }

    // Divides by |first nonzero normal coordinate|: positive scaling only,
    // so orientation is preserved and the leading coordinate becomes +-1.
    OrientedHyperplane canonical() const;

    bool same_oriented(const OrientedHyperplane& o) const;
    bool same_unoriented(const OrientedHyperplane& o) const;
};

// Hyperplane through points whose affine hull has dimension d-1; orientation
// is arbitrary. Throws if the points do not span a hyperplane.
OrientedHyperplane hyperplane_through(const std::vector<Vec>& points);

// Total order on canonical forms, for deterministic output.
bool hyperplane_less(const OrientedHyperplane& a, const OrientedHyperplane& b);

}  // namespace ptg
