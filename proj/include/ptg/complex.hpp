#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptg/separation.hpp"
#include "ptg/tangents.hpp"

namespace ptg {

// One face of the tangent complex T(P). A primal j-face of the hull shows
// up here with dimension d-1-j; it is determined by the hull facets whose
// intersection it is (equivalently, the vertex set of the polar face).
struct ComplexFace {
    std::vector<std::size_t> hull_facets;    // sorted facet indices
    std::vector<std::size_t> hull_vertices;  // sorted vertex indices of the primal face
    std::vector<std::size_t> covers;         // indices into the level below
    std::optional<OrientedHyperplane> plane; // representative, 0-faces only
};

struct TangentComplex {
    std::size_t k = 0;  // intended sphere dimension d - m
    std::vector<std::vector<ComplexFace>> faces;  // by complex dimension 0..k

    std::vector<std::size_t> f_vector() const;
    long long euler_characteristic() const;
    bool empty() const;
};

struct SphereReport {
    long long euler = 0;
    bool euler_ok = false;
    bool pseudomanifold = false;
    bool connected = false;
    std::optional<bool> low_dim_exact;  // set when k <= 1
    bool pass = false;
    std::vector<std::string> reasons;
};

// Rainbow faces of the hull of the family, dualized: a j-face of P carrying
// every color maps to a (d-1-j)-face of T(P). Zero-faces carry the facet's
// supporting hyperplane, re-oriented so the family sits in H^>=.
TangentComplex tangent_complex(const Family& family);

// Necessary sphere conditions at the complex's top dimension k: Euler
// characteristic 1 + (-1)^k, every (k-1)-face in exactly two k-faces,
// connected dual graph, and the exact structure for k <= 1.
SphereReport verify_sphere(const TangentComplex& complex);

// Primal-side rainbow locus of a facet-colored polytope: the subcomplex of
// faces of P contained in at least one facet of every color. Requires every
// proper color subset to classify Visible or Covisible.
TangentComplex rainbow_points_dual(const Polytope& p,
                                   const std::vector<std::size_t>& facet_colors);

}  // namespace ptg
