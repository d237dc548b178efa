#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptg/approx.hpp"
#include "ptg/separation.hpp"
#include "ptg/tangents.hpp"

namespace ptg {

// JSON input document. All coordinates travel as rational strings; member
// and color indices are 1-based on the wire and 0-based in memory.
struct FamilyDocument {
    std::size_t dimension = 0;
    struct PolyEntry {
        std::string name;
        std::vector<Vec> vertices;
    };
    std::vector<PolyEntry> polytopes;
    std::vector<BodySpec> bodies;
    std::optional<Partition> partition;
};

FamilyDocument parse_family_document(const std::string& text);
nlohmann::json family_document_to_json(const FamilyDocument& doc);
Family document_family(const FamilyDocument& doc);

nlohmann::json hyperplane_to_json(const OrientedHyperplane& plane);
OrientedHyperplane hyperplane_from_json(const nlohmann::json& j);

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);

// ---- deterministic figure emission (the only floating-point boundary) -----

// SVG for d = 2: member polygons plus tangent lines clipped to a bounding
// box of 1.25x the family's coordinate range. Fixed ordering and 9
// significant digits keep output byte-stable.
std::string render_svg(const FamilyDocument& doc, const std::vector<OrientedHyperplane>& planes);

// Wavefront OBJ for d = 3: one mesh per member plus one clipped polygon per
// tangent plane.
std::string render_obj(const FamilyDocument& doc, const std::vector<OrientedHyperplane>& planes);

// ---- command layer (shared by the CLI binary and the python module) -------

struct CommandResult {
    nlohmann::json doc;
    int exit_code = 0;  // 0 ok, 1 hypothesis failure
};

struct TangentFlags {
    bool all = false;
    bool oracle = false;
    std::optional<std::vector<std::size_t>> partition_upper;  // 0-based
    std::optional<std::size_t> exclude;                       // 0-based
    std::size_t oracle_guard = 40;
};

struct ApproxFlags {
    std::vector<std::size_t> schedule;
    std::optional<std::size_t> demo_ngon;
    double threshold = 1e-2;
};

CommandResult cmd_separation(const FamilyDocument& doc);
CommandResult cmd_tangents(const FamilyDocument& doc, const TangentFlags& flags);
CommandResult cmd_complex(const FamilyDocument& doc);
CommandResult cmd_approx(const FamilyDocument& doc, const ApproxFlags& flags);

struct RenderFlags {
    bool svg = false;
    bool obj = false;
};

// Renders the family plus any hyperplanes found in a prior result document.
std::string cmd_render(const FamilyDocument& doc, const nlohmann::json* result,
                       const RenderFlags& flags);

}  // namespace ptg
