#include <algorithm>
#include <chrono>

#include "ptg/complex.hpp"
#include "ptg/errors.hpp"
#include "ptg/io.hpp"

namespace ptg {

namespace {

using nlohmann::json;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

json side_json(const std::vector<std::size_t>& side) {
    std::vector<std::size_t> s(side);
    std::sort(s.begin(), s.end());
    json a = json::array();
    for (std::size_t i : s) a.push_back(i + 1);
    return a;
}

json set_json(const std::set<std::size_t>& side) {
    json a = json::array();
    for (std::size_t i : side) a.push_back(i + 1);
    return a;
}

json partition_json(const Partition& part) {
    json j;
    j["A"] = side_json(part.upper);
    j["B"] = side_json(part.lower);
    return j;
}

json tangent_hyperplane_json(const TangentHyperplane& th, const Family& family) {
    json j = hyperplane_to_json(th.plane);
    json faces = json::array();
    for (std::size_t i = 0; i < th.tangent_faces.size(); ++i) {
        json pts = json::array();
        for (std::size_t v : th.tangent_faces[i])
            pts.push_back(vec_to_json(family.members[i].vertices[v]));
        faces.push_back(std::move(pts));
    }
    j["tangent_faces"] = std::move(faces);
    return j;
}

// Every emitted hyperplane must re-verify after a JSON round trip.
void check_round_trip(const json& plane_json, const Family& family, const Partition& part) {
    const OrientedHyperplane reloaded = hyperplane_from_json(plane_json);
    const TangentCheck check = verify_tangent(reloaded, family, part);
    if (!check.pass)
        throw internal_error("RoundTripFailed",
                             "serialized hyperplane failed re-verification: " + check.failure);
}

}  // namespace

CommandResult cmd_separation(const FamilyDocument& doc) {
    Stopwatch timer;
    const Family family = document_family(doc);
    const SeparationCertificate cert = is_strongly_separated(family);

    json out;
    out["command"] = "separation";
    out["members"] = family.size();
    out["separated"] = cert.separated;
    if (cert.separated) {
        json list = json::array();
        for (const BipartitionWitness& w : cert.witnesses) {
            json e;
            e["inside"] = set_json(w.inside);
            e["hyperplane"] = hyperplane_to_json(w.plane);
            list.push_back(std::move(e));
        }
        out["bipartitions"] = std::move(list);
    } else {
        out["failing_bipartition"] = set_json(cert.failing_bipartition);
    }
    out["timing_ms"] = timer.ms();
    return {out, cert.separated ? 0 : 1};
}

CommandResult cmd_tangents(const FamilyDocument& doc, const TangentFlags& flags) {
    Stopwatch timer;
    const Family family = document_family(doc);
    const std::size_t m = family.size();

    json out;
    out["command"] = "tangents";

    std::vector<std::pair<Partition, std::vector<TangentHyperplane>>> produced;

    if (flags.exclude) {
        const std::size_t special = *flags.exclude;
        if (special >= m) throw usage_error("BadFlag", "--exclude member out of range");
        Partition part;
        if (flags.partition_upper) {
            for (std::size_t i : *flags.partition_upper) part.upper.push_back(i);
            for (std::size_t i = 0; i < m; ++i)
                if (std::find(part.upper.begin(), part.upper.end(), i) == part.upper.end())
                    part.lower.push_back(i);
        } else if (doc.partition) {
            part = *doc.partition;
        } else {
            part.upper = {special};
            for (std::size_t i = 0; i < m; ++i)
                if (i != special) part.lower.push_back(i);
        }
        out["mode"] = "exclude";
        out["exclude"] = special + 1;
        out["partition"] = partition_json(part);
        const OrientedHyperplane plane = unique_tangent_excluding(family, part, special);
        out["hyperplane"] = hyperplane_to_json(plane);
    } else if (flags.partition_upper || (doc.partition && !flags.all)) {
        Partition part;
        if (flags.partition_upper) {
            part.upper = *flags.partition_upper;
            for (std::size_t i = 0; i < m; ++i)
                if (std::find(part.upper.begin(), part.upper.end(), i) == part.upper.end())
                    part.lower.push_back(i);
        } else {
            part = *doc.partition;
        }
        out["mode"] = "partition";
        const TangentPair pair = sandwich_tangents(family, part);
        produced.emplace_back(part,
                              std::vector<TangentHyperplane>{pair.first, pair.second});
    } else {
        out["mode"] = "all";
        const AllTangents all = all_tangents(family);
        out["full_dimensional"] = all.full_dimensional;
        out["all_distinct"] = all.all_distinct;
        for (const TangentPair& pair : all.pairs)
            produced.emplace_back(pair.partition,
                                  std::vector<TangentHyperplane>{pair.first, pair.second});
    }

    if (!produced.empty()) {
        json pairs = json::array();
        for (const auto& [part, planes] : produced) {
            json e;
            e["partition"] = partition_json(part);
            e["hyperplanes"] = json::array();
            for (const TangentHyperplane& th : planes) {
                json pj = tangent_hyperplane_json(th, family);
                check_round_trip(pj, family, part);
                e["hyperplanes"].push_back(std::move(pj));
            }
            pairs.push_back(std::move(e));
        }
        out["pairs"] = std::move(pairs);
    }

    if (flags.oracle) {
        OracleOptions opts;
        opts.guard = flags.oracle_guard;
        const std::vector<OracleTangent> oracle = brute_force_tangents(family, opts);
        json oj;
        oj["count"] = oracle.size();
        bool consistent = true;
        // Every produced hyperplane must appear in the oracle with a
        // compatible partition; in --all mode the sets must coincide.
        std::set<std::size_t> hit;
        for (const auto& [part, planes] : produced) {
            for (const TangentHyperplane& th : planes) {
                bool found = false;
                for (std::size_t i = 0; i < oracle.size() && !found; ++i) {
                    if (oracle[i].plane.same_unoriented(th.plane) &&
                        oracle_supports_partition(oracle[i], part)) {
                        found = true;
                        hit.insert(i);
                    }
                }
                consistent = consistent && found;
            }
        }
        if (out["mode"] == "all" && oracle.size() != hit.size()) consistent = false;
        oj["consistent"] = consistent;
        out["oracle"] = std::move(oj);
        if (!consistent)
            throw internal_error("OracleMismatch",
                                 "constructed tangents disagree with the brute-force oracle");
    }

    out["timing_ms"] = timer.ms();
    return {out, 0};
}

CommandResult cmd_complex(const FamilyDocument& doc) {
    Stopwatch timer;
    const Family family = document_family(doc);
    if (family.size() < 2 || family.size() > family.dim)
        throw usage_error("DimensionMismatch", "complex needs 2 <= m <= d");

    const TangentComplex complex = tangent_complex(family);
    const SphereReport sphere = verify_sphere(complex);

    json out;
    out["command"] = "complex";
    out["k"] = complex.k;
    json fv = json::array();
    for (std::size_t n : complex.f_vector()) fv.push_back(n);
    out["f_vector"] = std::move(fv);

    json levels = json::array();
    for (std::size_t t = 0; t < complex.faces.size(); ++t) {
        json level = json::array();
        for (const ComplexFace& f : complex.faces[t]) {
            json e;
            e["hull_facets"] = f.hull_facets;
            e["hull_vertices"] = f.hull_vertices;
            e["covers"] = f.covers;
            if (f.plane) e["hyperplane"] = hyperplane_to_json(*f.plane);
            level.push_back(std::move(e));
        }
        levels.push_back(std::move(level));
    }
    out["faces"] = std::move(levels);

    json sj;
    sj["euler"] = sphere.euler;
    sj["euler_ok"] = sphere.euler_ok;
    sj["pseudomanifold"] = sphere.pseudomanifold;
    sj["connected"] = sphere.connected;
    if (sphere.low_dim_exact) sj["low_dim_exact"] = *sphere.low_dim_exact;
    sj["pass"] = sphere.pass;
    sj["reasons"] = sphere.reasons;
    sj["note"] =
        "necessary conditions only: euler, pseudomanifold, connectivity, exact structure for k<=1";
    out["sphere"] = std::move(sj);
    out["timing_ms"] = timer.ms();
    return {out, 0};
}

CommandResult cmd_approx(const FamilyDocument& doc, const ApproxFlags& flags) {
    Stopwatch timer;
    json out;
    out["command"] = "approx";

    if (flags.demo_ngon) {
        const NgonDemoReport demo = ngon_pyramid_demo(*flags.demo_ngon);
        json dj;
        dj["n"] = demo.n;
        dj["tangent_count"] = demo.tangent_count;
        dj["edge_plane_count"] = demo.edge_plane_count;
        dj["separation_fails"] = demo.separation_fails;
        dj["failing_bipartition"] = set_json(demo.failing_bipartition);
        out["demo"] = std::move(dj);
        out["timing_ms"] = timer.ms();
        return {out, 0};
    }

    if (flags.schedule.empty()) throw usage_error("EmptySchedule", "--schedule is required");
    if (doc.bodies.empty()) throw usage_error("BadDocument", "approx needs 'bodies'");

    Partition part;
    if (doc.partition) {
        part = *doc.partition;
    } else {
        for (std::size_t i = 0; i < doc.bodies.size(); ++i) part.upper.push_back(i);
    }

    const RefinementRun run = convergence_run(doc.bodies, part, flags.schedule, flags.threshold);
    json rj;
    rj["partition"] = partition_json(run.partition);
    rj["nested"] = run.nested;
    rj["converging"] = run.converging;
    rj["final_gap"] = run.final_gap;
    rj["candidate_angle"] = run.candidate_angle;
    json levels = json::array();
    for (const RefinementLevel& level : run.levels) {
        json lj;
        lj["n"] = level.n;
        lj["hyperplanes"] = json::array();
        lj["hyperplanes"].push_back(hyperplane_to_json(level.tangents.first.plane));
        lj["hyperplanes"].push_back(hyperplane_to_json(level.tangents.second.plane));
        if (level.step[0]) {
            json steps = json::array();
            for (int i = 0; i < 2; ++i) {
                json s;
                s["angle"] = level.step[i]->angle;
                s["offset"] = level.step[i]->offset;
                steps.push_back(std::move(s));
            }
            lj["step"] = std::move(steps);
        }
        levels.push_back(std::move(lj));
    }
    rj["levels"] = std::move(levels);
    rj["note"] = "volume conditions of the limit argument are not computed; convergence is "
                 "measured empirically via the angle/offset gaps";
    out["run"] = std::move(rj);
    out["timing_ms"] = timer.ms();
    return {out, run.converging ? 0 : 1};
}

std::string cmd_render(const FamilyDocument& doc, const nlohmann::json* result,
                       const RenderFlags& flags) {
    std::vector<OrientedHyperplane> planes;
    if (result) {
        auto collect = [&](const json& j, auto&& recurse) -> void {
            if (j.is_object()) {
                if (j.contains("normal") && j.contains("offset")) {
                    planes.push_back(hyperplane_from_json(j));
                    return;
                }
                for (const auto& [key, val] : j.items()) recurse(val, recurse);
            } else if (j.is_array()) {
                for (const auto& val : j) recurse(val, recurse);
            }
        };
        collect(*result, collect);
    }
    if (flags.svg == flags.obj)
        throw usage_error("BadFlag", "choose exactly one of --svg / --obj");
    return flags.svg ? render_svg(doc, planes) : render_obj(doc, planes);
}

}  // namespace ptg
