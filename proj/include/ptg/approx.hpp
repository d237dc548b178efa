#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptg/separation.hpp"
#include "ptg/tangents.hpp"

namespace ptg {

// Convex body specification with rational parameters. Balls/ellipsoids are
// supported in the plane (the demo builds its own exact spherical points).
struct BodySpec {
    enum class Kind { Ball, Ellipsoid, Polytope };
    Kind kind = Kind::Polytope;
    Vec center;          // Ball, Ellipsoid
    Rat radius;          // Ball
    Vec axes;            // Ellipsoid (per-axis radii)
    std::vector<Vec> vertices;  // Polytope

    std::size_t dim() const;
};

// Inscribed n-gon with vertices exactly on the body's boundary, built from
// rational tan-half-angle points near the target angles 2*pi*k/n + phase.
// Doubling n with a fixed phase keeps the old vertex set, so the refinement
// schedule n, 2n, 4n, ... is nested by construction. Polytope bodies are
// returned as they are at every level.
Polytope inscribe_polytope(const BodySpec& body, std::size_t n, double phase = 0.0);

struct LevelDistance {
    double angle = 0.0;   // radians between matched unit normals
    double offset = 0.0;  // offset gap after unit normalization
};

struct RefinementLevel {
    std::size_t n = 0;
    TangentPair tangents;
    std::optional<LevelDistance> step[2];  // vs previous level, per matched line
};

struct RefinementRun {
    Partition partition;
    std::vector<RefinementLevel> levels;
    bool nested = true;
    bool converging = false;
    double final_gap = 0.0;       // max Cauchy distance at the last step
    double candidate_angle = 0.0; // angle between the two final tangents
};

// Per schedule level: inscribe, take the sandwich pair, and measure the
// Cauchy-style distance between consecutive levels (floating point, for
// reporting only; matching is by nearest angle, ties by offset).
RefinementRun convergence_run(const std::vector<BodySpec>& bodies, const Partition& part,
                              const std::vector<std::size_t>& schedule,
                              double threshold = 1e-2);

struct AnalyticTangent {
    double nx = 0.0, ny = 0.0;  // unit normal
    double offset = 0.0;
    bool outer = false;
};

// The classical four tangents of two disjoint circles via homothety centers.
// Values are double precision (~1e-15 relative).
std::vector<AnalyticTangent> analytic_circle_tangents(const Vec& c1, const Rat& r1,
                                                      const Vec& c2, const Rat& r2);

struct NgonDemoReport {
    std::size_t n = 0;
    std::size_t tangent_count = 0;       // distinct oracle tangents
    std::size_t edge_plane_count = 0;    // constructed vertical edge planes found
    bool separation_fails = false;
    std::set<std::size_t> failing_bipartition;
};

// Pyramid over an inscribed N-gon plus bipyramid stand-ins inside the unit
// balls at (0,0,+-10): at least N common tangent planes although the family
// is not strongly separated.
NgonDemoReport ngon_pyramid_demo(std::size_t n);

// The demo family itself (member 0 = pyramid, 1 = top, 2 = bottom).
Family ngon_pyramid_family(std::size_t n);

}  // namespace ptg
