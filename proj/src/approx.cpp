#include "ptg/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ptg/errors.hpp"

namespace ptg {

std::size_t BodySpec::dim() const {
    switch (kind) {
        case Kind::Ball:
        case Kind::Ellipsoid:
            return center.size();
        case Kind::Polytope:
            return vertices.empty() ? 0 : vertices[0].size();
    }
    return 0;
}

namespace {

// Rational point exactly on the unit circle near angle theta, via the
// tan-half-angle parametrization t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)).
Vec unit_circle_point(double theta) {
    // Wrap into (-pi, pi]; tan(theta/2) is then finite except at pi itself,
    // where a large rational keeps the construction exact.
    const double pi = std::numbers::pi;
    double wrapped = std::remainder(theta, 2 * pi);
    constexpr long denom = 1L << 16;
    double half_tan = std::tan(wrapped / 2);
    long num;
    if (!std::isfinite(half_tan) || std::abs(half_tan) > 1e6)
        num = denom * 1000000L;
    else
        num = std::lround(half_tan * denom);
    const Rat t = make_rat(num, denom);
    const Rat t2 = t * t;
    const Rat den = 1 + t2;
    return Vec{(1 - t2) / den, (2 * t) / den};
}

}  // namespace

Polytope inscribe_polytope(const BodySpec& body, std::size_t n, double phase) {
    const std::size_t d = body.dim();
    switch (body.kind) {
        case BodySpec::Kind::Polytope:
            return convex_hull(body.vertices, d);
        case BodySpec::Kind::Ball:
        case BodySpec::Kind::Ellipsoid:
            break;
    }
    if (d != 2)
        throw usage_error("UnsupportedBody", "ball/ellipsoid inscription is planar only");
    if (n < d + 1)
        throw usage_error("UnsupportedBody", "need at least d+1 vertices");
    if (body.kind == BodySpec::Kind::Ball && sgn(body.radius) <= 0)
        throw usage_error("UnsupportedBody", "radius must be positive");

    std::vector<Vec> pts;
    pts.reserve(n);
    const double pi = std::numbers::pi;
    for (std::size_t k = 0; k < n; ++k) {
        // k/n is evaluated so that the same target angle at level n and at
        // level 2n produces bit-identical doubles; nestedness follows.
        const double theta = 2 * pi * (static_cast<double>(k) / static_cast<double>(n)) + phase;
        const Vec q = unit_circle_point(theta);
        Vec p(2);
        if (body.kind == BodySpec::Kind::Ball) {
            p[0] = body.center[0] + body.radius * q[0];
            p[1] = body.center[1] + body.radius * q[1];
        } else {
            if (body.axes.size() != 2 || sgn(body.axes[0]) <= 0 || sgn(body.axes[1]) <= 0)
                throw usage_error("UnsupportedBody", "ellipsoid needs two positive axes");
            p[0] = body.center[0] + body.axes[0] * q[0];
            p[1] = body.center[1] + body.axes[1] * q[1];
        }
        pts.push_back(std::move(p));
    }
    return convex_hull(pts, 2);
}

namespace {

struct LineF {
    double nx, ny, off;  // unit normal, offset
};

LineF to_unit(const OrientedHyperplane& h) {
    const double ux = h.normal[0].get_d();
    const double uy = h.normal[1].get_d();
    const double len = std::hypot(ux, uy);
    return {ux / len, uy / len, h.offset.get_d() / len};
}

double angle_between(const LineF& a, const LineF& b) {
    const double dot = std::clamp(a.nx * b.nx + a.ny * b.ny, -1.0, 1.0);
    return std::acos(dot);
}

LevelDistance line_distance(const LineF& a, const LineF& b) {
    return {angle_between(a, b), std::abs(a.off - b.off)};
}

}  // namespace

RefinementRun convergence_run(const std::vector<BodySpec>& bodies, const Partition& part,
                              const std::vector<std::size_t>& schedule, double threshold) {
    if (schedule.empty()) throw usage_error("EmptySchedule", "refinement schedule is empty");
    if (bodies.empty()) throw usage_error("EmptyFamily", "no bodies");
    const std::size_t d = bodies[0].dim();
    if (bodies.size() != d)
        throw usage_error("DimensionMismatch", "convergence run needs d bodies in R^d");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw usage_error("BadSchedule", "schedule must be strictly increasing");

    RefinementRun run;
    run.partition = part;

    std::vector<Polytope> prev_members;
    for (std::size_t li = 0; li < schedule.size(); ++li) {
        const std::size_t n = schedule[li];
        Family family;
        family.dim = d;
        for (const BodySpec& b : bodies) family.members.push_back(inscribe_polytope(b, n));

        // Nestedness across levels: previous vertex sets must re-occur.
        if (li > 0) {
            for (std::size_t i = 0; i < family.members.size(); ++i) {
                for (const Vec& v : prev_members[i].vertices) {
                    const auto& cur = family.members[i].vertices;
                    if (std::find(cur.begin(), cur.end(), v) == cur.end()) {
                        run.nested = false;
                        break;
                    }
                }
            }
        }
        prev_members = family.members;

        RefinementLevel level;
        level.n = n;
        level.tangents = sandwich_tangents(family, part);

        if (li > 0) {
            const RefinementLevel& before = run.levels.back();
            const LineF prev[2] = {to_unit(before.tangents.first.plane),
                                   to_unit(before.tangents.second.plane)};
            const LineF cur[2] = {to_unit(level.tangents.first.plane),
                                  to_unit(level.tangents.second.plane)};
            // Nearest-angle matching, ties broken by offset distance.
            const LevelDistance straight[2] = {line_distance(prev[0], cur[0]),
                                               line_distance(prev[1], cur[1])};
            const LevelDistance crossed[2] = {line_distance(prev[0], cur[1]),
                                              line_distance(prev[1], cur[0])};
            auto score = [](const LevelDistance* p) {
                return std::make_pair(p[0].angle + p[1].angle, p[0].offset + p[1].offset);
            };
            const bool cross = score(crossed) < score(straight);
            level.step[0] = cross ? crossed[0] : straight[0];
            level.step[1] = cross ? crossed[1] : straight[1];
        }
        run.levels.push_back(std::move(level));
    }

    const RefinementLevel& last = run.levels.back();
    if (run.levels.size() >= 2) {
        run.final_gap = std::max({last.step[0]->angle, last.step[1]->angle,
                                  last.step[0]->offset, last.step[1]->offset});
        double first_gap = run.final_gap;
        if (run.levels.size() >= 2 && run.levels[1].step[0]) {
            first_gap = std::max({run.levels[1].step[0]->angle, run.levels[1].step[1]->angle,
                                  run.levels[1].step[0]->offset, run.levels[1].step[1]->offset});
        }
        run.converging = run.final_gap < threshold && run.final_gap <= first_gap;
    } else {
        run.converging = true;  // single level: nothing to disprove
    }
    run.candidate_angle =
        angle_between(to_unit(last.tangents.first.plane), to_unit(last.tangents.second.plane));
    return run;
}

std::vector<AnalyticTangent> analytic_circle_tangents(const Vec& c1, const Rat& r1,
                                                      const Vec& c2, const Rat& r2) {
    const double x1 = c1[0].get_d(), y1 = c1[1].get_d();
    const double x2 = c2[0].get_d(), y2 = c2[1].get_d();
    const double rr1 = r1.get_d(), rr2 = r2.get_d();
    const double dx = x2 - x1, dy = y2 - y1;
    const double dist = std::hypot(dx, dy);
    if (!(dist > rr1 + rr2))
        throw hypothesis_error("CirclesNotDisjoint", "circles must be disjoint and exterior");

    std::vector<AnalyticTangent> out;
    const double base = std::atan2(dy, dx);
    // Unit normal u with <c2-c1, u> = s2*r2 - s1*r1; tangency offsets follow.
    for (const bool outer : {true, false}) {
        const double k = outer ? (rr2 - rr1) : (rr2 + rr1);
        const double cosg = k / dist;
        const double gamma = std::acos(std::clamp(cosg, -1.0, 1.0));
        for (const int s : {+1, -1}) {
            const double ang = base + s * gamma;
            AnalyticTangent t;
            t.nx = std::cos(ang);
            t.ny = std::sin(ang);
            // Line <x,u> = alpha tangent to circle 1 with the circle below.
            t.offset = x1 * t.nx + y1 * t.ny - (outer ? rr1 : -rr1);
            t.outer = outer;
            out.push_back(t);
        }
    }
    return out;
}

Family ngon_pyramid_family(std::size_t n) {
    if (n < 3) throw usage_error("BadDemo", "n-gon needs n >= 3");
    BodySpec disk;
    disk.kind = BodySpec::Kind::Ball;
    disk.center = {Rat(0), Rat(0)};
    disk.radius = 1;
    const Polytope ngon = inscribe_polytope(disk, n);

    auto lift = [&](const Rat& z) {
        std::vector<Vec> pts;
        for (const Vec& v : ngon.vertices) pts.push_back({v[0], v[1], z});
        return pts;
    };

    std::vector<Vec> pyramid = lift(0);
    pyramid.push_back({Rat(0), Rat(0), Rat(1)});

    std::vector<Vec> top = lift(10);
    top.push_back({Rat(0), Rat(0), Rat(9)});
    top.push_back({Rat(0), Rat(0), Rat(11)});

    std::vector<Vec> bottom = lift(-10);
    bottom.push_back({Rat(0), Rat(0), Rat(-9)});
    bottom.push_back({Rat(0), Rat(0), Rat(-11)});

    return make_family(3, {pyramid, top, bottom});
}

NgonDemoReport ngon_pyramid_demo(std::size_t n) {
    const Family family = ngon_pyramid_family(n);

    NgonDemoReport report;
    report.n = n;

    OracleOptions opts;
    opts.guard = std::max<std::size_t>(40, 3 * n + 5);
    const std::vector<OracleTangent> tangents = brute_force_tangents(family, opts);
    report.tangent_count = tangents.size();

    // The vertical planes through the base edges are common tangents by
    // construction; count how many the oracle recovered.
    BodySpec disk;
    disk.kind = BodySpec::Kind::Ball;
    disk.center = {Rat(0), Rat(0)};
    disk.radius = 1;
    const Polytope ngon = inscribe_polytope(disk, n);
    for (const Facet& edge : ngon.facets) {
        OrientedHyperplane vertical{{edge.plane.normal[0], edge.plane.normal[1], Rat(0)},
                                    edge.plane.offset};
        for (const OracleTangent& t : tangents)
            if (t.plane.same_unoriented(vertical)) {
                ++report.edge_plane_count;
                break;
            }
    }

    const SeparationCertificate cert = is_strongly_separated(family);
    report.separation_fails = !cert.separated;
    if (!cert.separated) report.failing_bipartition = cert.failing_bipartition;
    return report;
}

}  // namespace ptg
