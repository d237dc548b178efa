#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptg/errors.hpp"
#include "ptg/io.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ptg::usage_error("BadFile", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ptg::FamilyDocument load_family(const std::string& path) {
    return ptg::parse_family_document(read_file(path));
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const long v = std::strtol(item.c_str(), nullptr, 10);
        if (v <= 0) throw ptg::usage_error("BadFlag", "indices are 1-based positive integers");
        out.push_back(static_cast<std::size_t>(v) - 1);
    }
    if (out.empty()) throw ptg::usage_error("BadFlag", "empty index list");
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact common-tangent toolkit for strongly separated polytope families"};
    app.require_subcommand(1);

    std::string family_path, result_path, out_path;
    std::string partition_arg, schedule_arg, demo_arg;
    bool all = false, oracle = false, svg = false, obj = false;
    long exclude = 0;

    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("family", family_path, "FamilyDocument JSON file")->required();
    };

    CLI::App* sep = app.add_subcommand("separation", "Strong separation certificate");
    add_family(sep);

    CLI::App* tan = app.add_subcommand("tangents", "Common tangent hyperplanes");
    add_family(tan);
    tan->add_option("--partition", partition_arg, "comma list of members on the H>= side");
    tan->add_flag("--all", all, "all 2^d tangents over every partition");
    tan->add_option("--exclude", exclude, "member left strictly above (d+1 member families)");
    tan->add_flag("--oracle", oracle, "cross-check against the brute-force oracle");

    CLI::App* cpx = app.add_subcommand("complex", "Tangent complex and sphere checks");
    add_family(cpx);

    CLI::App* apx = app.add_subcommand("approx", "Inscribed-polytope refinement runs");
    add_family(apx);
    apx->add_option("--schedule", schedule_arg, "comma list of vertex counts, e.g. 8,16,32,64");
    apx->add_option("--demo", demo_arg, "demo scenario, e.g. ngon:5");

    CLI::App* ren = app.add_subcommand("render", "SVG (d=2) or OBJ (d=3) figure");
    add_family(ren);
    ren->add_option("--result", result_path, "result JSON with hyperplanes to draw");
    ren->add_flag("--svg", svg, "emit SVG");
    ren->add_flag("--obj", obj, "emit Wavefront OBJ");
    ren->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ptg::CommandResult result;
    if (app.got_subcommand(sep)) {
        result = ptg::cmd_separation(load_family(family_path));
    } else if (app.got_subcommand(tan)) {
        ptg::TangentFlags flags;
        flags.all = all;
        flags.oracle = oracle;
        if (!partition_arg.empty()) flags.partition_upper = parse_index_list(partition_arg);
        if (tan->count("--exclude")) {
            if (exclude <= 0) throw ptg::usage_error("BadFlag", "--exclude is 1-based");
            flags.exclude = static_cast<std::size_t>(exclude) - 1;
        }
        if (const char* guard = std::getenv("TANGENT_ORACLE_GUARD"))
            flags.oracle_guard = static_cast<std::size_t>(std::strtoul(guard, nullptr, 10));
        result = ptg::cmd_tangents(load_family(family_path), flags);
    } else if (app.got_subcommand(cpx)) {
        result = ptg::cmd_complex(load_family(family_path));
    } else if (app.got_subcommand(apx)) {
        ptg::ApproxFlags flags;
        if (!schedule_arg.empty()) {
            for (std::size_t i : parse_index_list(schedule_arg)) flags.schedule.push_back(i + 1);
        }
        if (!demo_arg.empty()) {
            if (demo_arg.rfind("ngon:", 0) != 0)
                throw ptg::usage_error("BadFlag", "unknown demo '" + demo_arg + "'");
            flags.demo_ngon = static_cast<std::size_t>(
                std::strtoul(demo_arg.c_str() + 5, nullptr, 10));
        }
        result = ptg::cmd_approx(load_family(family_path), flags);
    } else if (app.got_subcommand(ren)) {
        ptg::RenderFlags flags;
        flags.svg = svg;
        flags.obj = obj;
        nlohmann::json result_doc;
        const ptg::FamilyDocument doc = load_family(family_path);
        std::string content;
        if (!result_path.empty()) {
            try {
                result_doc = nlohmann::json::parse(read_file(result_path));
            } catch (const nlohmann::json::parse_error& e) {
                throw ptg::usage_error("BadDocument", std::string("result JSON: ") + e.what());
            }
            content = ptg::cmd_render(doc, &result_doc, flags);
        } else {
            content = ptg::cmd_render(doc, nullptr, flags);
        }
        if (out_path.empty()) {
            std::cout << content;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw ptg::usage_error("BadFile", "cannot write '" + out_path + "'");
            out << content;
        }
        return 0;
    }

    std::cout << result.doc.dump(2) << "\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ptg::Error& e) {
        nlohmann::json err;
        err["error"] = e.code();
        err["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        switch (e.kind()) {
            case ptg::ErrorKind::Usage:
                return 2;
            case ptg::ErrorKind::Hypothesis:
            case ptg::ErrorKind::Internal:
                return 1;
        }
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
