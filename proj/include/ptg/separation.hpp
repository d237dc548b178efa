#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ptg/hyperplane.hpp"
#include "ptg/polytope.hpp"
#include "ptg/rational.hpp"

namespace ptg {

// Ordered family of polytopes; member i carries color i (0-based in code,
// 1-based at the CLI boundary).
struct Family {
    std::size_t dim = 0;
    std::vector<Polytope> members;

    std::size_t size() const { return members.size(); }
    // Union of member vertices, with per-point member index.
    std::vector<Vec> all_vertices() const;
    std::vector<std::size_t> vertex_colors() const;
    bool member_full_dimensional(std::size_t i) const { return members[i].dim == dim; }
    bool all_full_dimensional() const;
    bool affinely_spanning() const;
};

Family make_family(std::size_t dim, std::vector<std::vector<Vec>> member_vertices);

// One bipartition record: `inside` always contains color 0 (canonical side).
struct BipartitionWitness {
    std::set<std::size_t> inside;  // their union sits in H^-
    OrientedHyperplane plane;      // complement union sits in H^+
};

struct SeparationCertificate {
    bool separated = false;
    std::vector<BipartitionWitness> witnesses;      // one per bipartition when separated
    std::set<std::size_t> failing_bipartition;      // first infeasible inside-set otherwise

    explicit operator bool() const { return separated; }
};

// Runs the strict separation LP for each of the 2^{m-1} bipartitions with
// color 0 pinned to the negative side. Witnesses are stored for all of them;
// on failure the first infeasible bipartition is reported.
SeparationCertificate is_strongly_separated(const Family& family);

// Facet indices of P visible from p, i.e. facets whose supporting hyperplane
// has p strictly beyond. Throws PointInsidePolytope when p is in P.
std::vector<std::size_t> visible_facets(const Polytope& p, const Vec& point);

enum class VisibilityMode { Visible, Covisible };

// Point seeing exactly the facets whose colors lie in `colors` (Visible) or
// exactly the complement (Covisible); nullopt iff the strict system is
// infeasible.
std::optional<Vec> visibility_witness(const Polytope& p,
                                      const std::vector<std::size_t>& facet_colors,
                                      const std::set<std::size_t>& colors,
                                      VisibilityMode mode);

enum class SubsetClass { Visible, Covisible, Neither };

struct SubsetReport {
    std::set<std::size_t> colors;
    SubsetClass cls;
    std::optional<Vec> witness;
};

struct VisibilityReport {
    std::vector<SubsetReport> subsets;  // every nonempty proper color subset
    bool all_visible_or_covisible() const;
    const SubsetReport* first_neither() const;
};

VisibilityReport classify_color_subsets(const Polytope& p,
                                        const std::vector<std::size_t>& facet_colors);

// The d+1 hyperplanes of the simplicial-separation simplex S: H_i is tangent
// to every member but i, the others on the nonpositive side and member i
// strictly positive. Returns nullopt when some side condition fails.
struct SimplicialSimplex {
    std::vector<OrientedHyperplane> planes;  // plane i excludes member i
    std::vector<Vec> simplex_vertices;       // vertex i is off plane i
    bool degenerate = false;                 // S collapsed or unbounded side
};

std::optional<SimplicialSimplex> simplicial_simplex(const Family& family);

}  // namespace ptg
