#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "ptg/complex.hpp"
#include "ptg/errors.hpp"
#include "ptg/io.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

// Results cross the boundary as JSON text; the python package turns them
// into dicts. Rational numbers stay strings end to end.
std::string run_separation(const std::string& family_json) {
    const ptg::FamilyDocument doc = ptg::parse_family_document(family_json);
    ptg::CommandResult r = ptg::cmd_separation(doc);
    r.doc["exit_code"] = r.exit_code;
    return r.doc.dump();
}

std::string run_tangents(const std::string& family_json, bool all,
                         std::optional<std::vector<std::size_t>> partition,
                         std::optional<std::size_t> exclude, bool oracle,
                         std::size_t oracle_guard) {
    const ptg::FamilyDocument doc = ptg::parse_family_document(family_json);
    ptg::TangentFlags flags;
    flags.all = all;
    flags.oracle = oracle;
    flags.oracle_guard = oracle_guard;
    if (partition) {
        flags.partition_upper = std::vector<std::size_t>();
        for (std::size_t i : *partition) {
            if (i == 0) throw ptg::usage_error("BadFlag", "partition uses 1-based indices");
            flags.partition_upper->push_back(i - 1);
        }
    }
    if (exclude) {
        if (*exclude == 0) throw ptg::usage_error("BadFlag", "exclude uses 1-based indices");
        flags.exclude = *exclude - 1;
    }
    ptg::CommandResult r = ptg::cmd_tangents(doc, flags);
    r.doc["exit_code"] = r.exit_code;
    return r.doc.dump();
}

std::string run_complex(const std::string& family_json) {
    const ptg::FamilyDocument doc = ptg::parse_family_document(family_json);
    ptg::CommandResult r = ptg::cmd_complex(doc);
    r.doc["exit_code"] = r.exit_code;
    return r.doc.dump();
}

std::string run_approx(const std::string& family_json, std::vector<std::size_t> schedule,
                       std::optional<std::size_t> demo_ngon) {
    const ptg::FamilyDocument doc = ptg::parse_family_document(family_json);
    ptg::ApproxFlags flags;
    flags.schedule = std::move(schedule);
    flags.demo_ngon = demo_ngon;
    ptg::CommandResult r = ptg::cmd_approx(doc, flags);
    r.doc["exit_code"] = r.exit_code;
    return r.doc.dump();
}

std::string run_render(const std::string& family_json, const std::string& result_json,
                       bool svg) {
    const ptg::FamilyDocument doc = ptg::parse_family_document(family_json);
    ptg::RenderFlags flags;
    flags.svg = svg;
    flags.obj = !svg;
    if (result_json.empty()) return ptg::cmd_render(doc, nullptr, flags);
    const json result = json::parse(result_json);
    return ptg::cmd_render(doc, &result, flags);
}

std::string run_convex_hull(const std::vector<std::vector<std::string>>& points,
                            std::size_t dim) {
    std::vector<ptg::Vec> pts;
    for (const auto& p : points) {
        ptg::Vec v;
        for (const std::string& c : p) v.push_back(ptg::parse_rat(c));
        pts.push_back(std::move(v));
    }
    const ptg::Polytope hull = ptg::convex_hull(pts, dim);
    json j;
    j["dim"] = hull.dim;
    j["vertices"] = json::array();
    for (const ptg::Vec& v : hull.vertices) j["vertices"].push_back(ptg::vec_to_json(v));
    j["facets"] = json::array();
    for (const ptg::Facet& f : hull.facets) {
        json e = ptg::hyperplane_to_json(f.plane);
        e["vertices"] = f.vertices;
        j["facets"].push_back(std::move(e));
    }
    j["f_vector"] = hull.f_vector();
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact common tangents to strongly separated polytope families";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ptg::Error& e) {
            if (e.kind() == ptg::ErrorKind::Usage)
                PyErr_SetString(PyExc_ValueError, e.what());
            else
                PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def("separation", &run_separation, py::arg("family_json"),
          "Strong-separation certificate for a FamilyDocument JSON string");
    m.def("tangents", &run_tangents, py::arg("family_json"), py::arg("all") = false,
          py::arg("partition") = std::nullopt, py::arg("exclude") = std::nullopt,
          py::arg("oracle") = false, py::arg("oracle_guard") = 40,
          "Common tangent hyperplanes (JSON string result)");
    m.def("complex", &run_complex, py::arg("family_json"),
          "Tangent complex face tables plus sphere report");
    m.def("approx", &run_approx, py::arg("family_json"),
          py::arg("schedule") = std::vector<std::size_t>(),
          py::arg("demo_ngon") = std::nullopt, "Refinement runs and the n-gon demo");
    m.def("render", &run_render, py::arg("family_json"), py::arg("result_json") = "",
          py::arg("svg") = true, "SVG/OBJ scene text");
    m.def("convex_hull", &run_convex_hull, py::arg("points"), py::arg("dim"),
          "Exact convex hull of rational points");
}
