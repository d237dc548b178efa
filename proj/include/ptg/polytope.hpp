#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ptg/hyperplane.hpp"
#include "ptg/linalg.hpp"
#include "ptg/rational.hpp"

namespace ptg {

// Facet = supporting hyperplane oriented with the polytope on the <= side,
// plus the indices of all vertices lying exactly on it. Facets may be
// non-simplicial; their own face structure lives in the global lattice.
struct Facet {
    OrientedHyperplane plane;
    std::vector<std::size_t> vertices;  // sorted
};

// One face of the lattice, identified by its sorted vertex-index set.
struct Face {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> covers;  // indices into the (dim-1)-level
};

struct Polytope {
    std::size_t dim = 0;
    std::vector<Vec> vertices;
    std::vector<Facet> facets;
    // faces[k] = k-dimensional faces, k = 0..dim-1. faces[dim-1] is aligned
    // index-for-index with `facets`.
    std::vector<std::vector<Face>> faces;

    bool contains(const Vec& p) const;          // closed membership
    bool strictly_contains(const Vec& p) const; // interior membership
    // Indices of facets whose hyperplane passes through every vertex of the
    // given face vertex set.
    std::vector<std::size_t> facets_containing(const std::vector<std::size_t>& face_vertices) const;
    std::vector<std::size_t> f_vector() const;  // faces per dimension 0..dim-1
};

// Incremental beneath-beyond hull with exact predicates. Coplanar facets are
// merged, so facets are the true (possibly non-simplicial) facets. Input
// points that are not extreme are dropped. Throws NotFullDimensional when
// the points do not affinely span R^d.
Polytope convex_hull(const std::vector<Vec>& points, std::size_t d);

// For each hull vertex, the index of the first input point with equal
// coordinates. Throws if some vertex has no source (cannot happen for hulls
// of `points`).
std::vector<std::size_t> match_vertices(const Polytope& p, const std::vector<Vec>& points);

// Strictly interior point; the vertex centroid works for every full
// dimensional polytope.
Vec interior_point(const Polytope& p);

// Polar dual {y : <x,y> <= 1 for all x in P}. Requires 0 strictly interior.
// Dual vertex i corresponds to primal facet i; dual facet j to primal
// vertex j; the lattice is the order-reversed primal lattice.
Polytope polar_dual(const Polytope& p);

// Vertex figure at vertex v: the cross-section of P by a hyperplane
// separating v from the other vertices, cut at fraction `t` of the gap
// (0 < t < 1). Its faces biject with the faces of P strictly containing v,
// one dimension down. Returned in intrinsic (d-1)-coordinates.
Polytope vertex_figure(const Polytope& p, std::size_t v, const Rat& t = Rat(1, 2));

// ---- linearization / affinization (the R^d <-> R^{d+1} bridge) ------------

struct VectorConfiguration {
    std::size_t dim = 0;  // ambient dimension (d+1 for lifted points)
    std::vector<Vec> vectors;
    std::vector<std::size_t> labels;  // carried through from source points
};

// p -> (p, 1). Labels default to position.
VectorConfiguration linearize(const std::vector<Vec>& points);

// Chart of the affine hyperplane {x : <h,x> = 1} used by `affinize`:
// chart coordinates are the ambient coordinates with `drop` removed, after
// scaling each vector onto the hyperplane.
struct AffineChart {
    Vec h;
    std::size_t drop;  // index of a coordinate with h[drop] != 0

    Vec to_chart(const Vec& ambient) const;    // point on the hyperplane -> R^d
    // Chart hyperplane {y : <w,y> = beta} -> linear hyperplane through 0 in
    // R^{d+1}, as its normal vector.
    Vec plane_to_linear(const Vec& w, const Rat& beta) const;
};

struct Affinization {
    std::vector<Vec> points;  // in chart coordinates, same order as input
    AffineChart chart;
};

// Scales every vector onto {<h,x> = 1} and charts it down one dimension.
// Throws WitnessInvalid unless <h,v> > 0 for every vector.
Affinization affinize(const VectorConfiguration& config, const Vec& h);

// Acyclicity witness for a configuration: h with <h,v> > 0 for all v.
std::optional<Vec> acyclicity_witness(const VectorConfiguration& config);

}  // namespace ptg
