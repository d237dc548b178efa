#include "ptg/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>

#include "ptg/errors.hpp"

namespace ptg {

namespace {

using nlohmann::json;

Rat rat_field(const json& j, const char* what) {
    if (!j.is_string())
        throw usage_error("BadDocument", std::string(what) + " must be a rational string");
    return parse_rat(j.get<std::string>());
}

Vec vec_field(const json& j, std::size_t dim, const char* what) {
    if (!j.is_array() || j.size() != dim)
        throw usage_error("BadDocument",
                          std::string(what) + " must be an array of " + std::to_string(dim) +
                              " rational strings");
    Vec v;
    v.reserve(dim);
    for (const auto& c : j) v.push_back(rat_field(c, what));
    return v;
}

std::vector<std::size_t> members_field(const json& j, const char* what) {
    if (!j.is_array()) throw usage_error("BadDocument", std::string(what) + " must be an array");
    std::vector<std::size_t> out;
    for (const auto& e : j) {
        if (!e.is_number_unsigned() || e.get<std::size_t>() == 0)
            throw usage_error("BadDocument",
                              std::string(what) + " must hold 1-based member indices");
        out.push_back(e.get<std::size_t>() - 1);
    }
    return out;
}

json side_to_json(const std::vector<std::size_t>& side) {
    json a = json::array();
    std::vector<std::size_t> sorted(side);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i : sorted) a.push_back(i + 1);
    return a;
}

}  // namespace

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const Rat& c : v) a.push_back(rat_to_string(c));
    return a;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw usage_error("BadDocument", "expected coordinate array");
    Vec v;
    for (const auto& c : j) v.push_back(rat_field(c, "coordinate"));
    return v;
}

json hyperplane_to_json(const OrientedHyperplane& plane) {
    const OrientedHyperplane c = plane.canonical();
    json j;
    j["normal"] = vec_to_json(c.normal);
    j["offset"] = rat_to_string(c.offset);
    j["orientation"] = "positive side is {x : <x,normal> > offset}";
    return j;
}

OrientedHyperplane hyperplane_from_json(const json& j) {
    OrientedHyperplane h;
    h.normal = vec_from_json(j.at("normal"));
    h.offset = rat_field(j.at("offset"), "offset");
    if (vec_is_zero(h.normal)) throw usage_error("BadDocument", "hyperplane with zero normal");
    return h;
}

FamilyDocument parse_family_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw usage_error("BadDocument", std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw usage_error("BadDocument", "document must be an object");

    FamilyDocument doc;
    if (!j.contains("dimension") || !j["dimension"].is_number_unsigned())
        throw usage_error("BadDocument", "missing positive integer 'dimension'");
    doc.dimension = j["dimension"].get<std::size_t>();
    if (doc.dimension == 0) throw usage_error("BadDocument", "dimension must be positive");

    std::set<std::string> names;
    if (j.contains("polytopes")) {
        if (!j["polytopes"].is_array())
            throw usage_error("BadDocument", "'polytopes' must be an array");
        for (const auto& entry : j["polytopes"]) {
            FamilyDocument::PolyEntry pe;
            pe.name = entry.value("name", "P" + std::to_string(doc.polytopes.size() + 1));
            if (!names.insert(pe.name).second)
                throw usage_error("BadDocument", "duplicate polytope name '" + pe.name + "'");
            if (!entry.contains("vertices") || !entry["vertices"].is_array() ||
                entry["vertices"].empty())
                throw usage_error("BadDocument", "polytope '" + pe.name + "' needs vertices");
            for (const auto& vj : entry["vertices"])
                pe.vertices.push_back(vec_field(vj, doc.dimension, "vertex"));
            doc.polytopes.push_back(std::move(pe));
        }
    }

    if (j.contains("bodies")) {
        if (!j["bodies"].is_array()) throw usage_error("BadDocument", "'bodies' must be an array");
        for (const auto& bj : j["bodies"]) {
            BodySpec b;
            const std::string kind = bj.value("kind", "");
            if (kind == "ball" || kind == "disk") {
                b.kind = BodySpec::Kind::Ball;
                b.center = vec_field(bj.at("center"), doc.dimension, "center");
                b.radius = rat_field(bj.at("radius"), "radius");
                if (sgn(b.radius) <= 0) throw usage_error("BadDocument", "radius must be positive");
            } else if (kind == "ellipsoid") {
                b.kind = BodySpec::Kind::Ellipsoid;
                b.center = vec_field(bj.at("center"), doc.dimension, "center");
                b.axes = vec_field(bj.at("axes"), doc.dimension, "axes");
                for (const Rat& a : b.axes)
                    if (sgn(a) <= 0) throw usage_error("BadDocument", "axes must be positive");
            } else if (kind == "polytope") {
                b.kind = BodySpec::Kind::Polytope;
                if (!bj.contains("vertices") || !bj["vertices"].is_array())
                    throw usage_error("BadDocument", "polytope body needs vertices");
                for (const auto& vj : bj["vertices"])
                    b.vertices.push_back(vec_field(vj, doc.dimension, "vertex"));
            } else {
                throw usage_error("BadDocument", "unknown body kind '" + kind + "'");
            }
            doc.bodies.push_back(std::move(b));
        }
    }

    if (j.contains("partition")) {
        Partition part;
        part.upper = members_field(j["partition"].at("A"), "partition.A");
        part.lower = members_field(j["partition"].at("B"), "partition.B");
        doc.partition = std::move(part);
    }
    return doc;
}

json family_document_to_json(const FamilyDocument& doc) {
    json j;
    j["dimension"] = doc.dimension;
    j["polytopes"] = json::array();
    for (const auto& pe : doc.polytopes) {
        json e;
        e["name"] = pe.name;
        e["vertices"] = json::array();
        for (const Vec& v : pe.vertices) e["vertices"].push_back(vec_to_json(v));
        j["polytopes"].push_back(std::move(e));
    }
    if (!doc.bodies.empty()) {
        j["bodies"] = json::array();
        for (const BodySpec& b : doc.bodies) {
            json e;
            switch (b.kind) {
                case BodySpec::Kind::Ball:
                    e["kind"] = "ball";
                    e["center"] = vec_to_json(b.center);
                    e["radius"] = rat_to_string(b.radius);
                    break;
                case BodySpec::Kind::Ellipsoid:
                    e["kind"] = "ellipsoid";
                    e["center"] = vec_to_json(b.center);
                    e["axes"] = vec_to_json(b.axes);
                    break;
                case BodySpec::Kind::Polytope:
                    e["kind"] = "polytope";
                    e["vertices"] = json::array();
                    for (const Vec& v : b.vertices) e["vertices"].push_back(vec_to_json(v));
                    break;
            }
            j["bodies"].push_back(std::move(e));
        }
    }
    if (doc.partition) {
        j["partition"]["A"] = side_to_json(doc.partition->upper);
        j["partition"]["B"] = side_to_json(doc.partition->lower);
    }
    return j;
}

Family document_family(const FamilyDocument& doc) {
    if (doc.polytopes.empty()) throw usage_error("BadDocument", "document has no polytopes");
    std::vector<std::vector<Vec>> members;
    for (const auto& pe : doc.polytopes) members.push_back(pe.vertices);
    return make_family(doc.dimension, std::move(members));
}

// ---- rendering -------------------------------------------------------------

namespace {

std::string fmt(double x) {
    char buf[64];
    if (x == 0.0) x = 0.0;  // normalize -0
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

struct Box {
    double lo[3], hi[3];
};

Box bounding_box(const FamilyDocument& doc, std::size_t d) {
    Box b;
    bool first = true;
    auto eat = [&](const std::vector<double>& p) {
        for (std::size_t i = 0; i < d; ++i) {
            if (first || p[i] < b.lo[i]) b.lo[i] = p[i];
            if (first || p[i] > b.hi[i]) b.hi[i] = p[i];
        }
        first = false;
    };
    for (const auto& pe : doc.polytopes)
        for (const Vec& v : pe.vertices) {
            std::vector<double> p(d);
            for (std::size_t i = 0; i < d; ++i) p[i] = v[i].get_d();
            eat(p);
        }
    for (const BodySpec& body : doc.bodies) {
        if (body.kind == BodySpec::Kind::Polytope) {
            for (const Vec& v : body.vertices) {
                std::vector<double> p(d);
                for (std::size_t i = 0; i < d; ++i) p[i] = v[i].get_d();
                eat(p);
            }
        } else {
            std::vector<double> c(d), r(d);
            for (std::size_t i = 0; i < d; ++i) {
                c[i] = body.center[i].get_d();
                r[i] = body.kind == BodySpec::Kind::Ball ? body.radius.get_d()
                                                         : body.axes[i].get_d();
            }
            std::vector<double> p(c);
            for (std::size_t i = 0; i < d; ++i) p[i] = c[i] - r[i];
            eat(p);
            for (std::size_t i = 0; i < d; ++i) p[i] = c[i] + r[i];
            eat(p);
        }
    }
    if (first) throw usage_error("BadDocument", "nothing to render");
    for (std::size_t i = 0; i < d; ++i) {
        const double mid = (b.lo[i] + b.hi[i]) / 2;
        double half = (b.hi[i] - b.lo[i]) / 2;
        if (half == 0) half = 1;
        b.lo[i] = mid - 1.25 * half;
        b.hi[i] = mid + 1.25 * half;
    }
    return b;
}

// Convex polygon cycle of 2d points, counterclockwise around the centroid.
std::vector<std::size_t> polygon_cycle(const std::vector<Vec>& pts) {
    double cx = 0, cy = 0;
    for (const Vec& p : pts) {
        cx += p[0].get_d();
        cy += p[1].get_d();
    }
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double aa = std::atan2(pts[a][1].get_d() - cy, pts[a][0].get_d() - cx);
        const double bb = std::atan2(pts[b][1].get_d() - cy, pts[b][0].get_d() - cx);
        if (aa != bb) return aa < bb;
        return a < b;
    });
    return order;
}

}  // namespace

std::string render_svg(const FamilyDocument& doc, const std::vector<OrientedHyperplane>& planes) {
    if (doc.dimension != 2)
        throw usage_error("UnsupportedDimension", "SVG rendering needs dimension 2");
    const Box box = bounding_box(doc, 2);
    const double w = 800.0;
    const double sx = w / (box.hi[0] - box.lo[0]);
    const double sy = w / (box.hi[1] - box.lo[1]);
    const double scale = std::min(sx, sy);
    const double h = std::ceil((box.hi[1] - box.lo[1]) * scale);

    auto px = [&](double x) { return (x - box.lo[0]) * scale; };
    auto py = [&](double y) { return h - (y - box.lo[1]) * scale; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" +
           fmt(h) + "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";

    for (std::size_t m = 0; m < doc.polytopes.size(); ++m) {
        const auto& pts = doc.polytopes[m].vertices;
        const Polytope hull = convex_hull(pts, 2);
        const std::vector<std::size_t> cycle = polygon_cycle(hull.vertices);
        out += "  <polygon fill=\"" + std::string(kPalette[m % 8]) +
               "\" fill-opacity=\"0.35\" stroke=\"" + kPalette[m % 8] + "\" points=\"";
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const Vec& v = hull.vertices[cycle[i]];
            if (i) out += " ";
            out += fmt(px(v[0].get_d())) + "," + fmt(py(v[1].get_d()));
        }
        out += "\"/>\n";
    }

    for (const BodySpec& b : doc.bodies) {
        if (b.kind != BodySpec::Kind::Ball) continue;
        out += "  <circle fill=\"none\" stroke=\"#444444\" cx=\"" + fmt(px(b.center[0].get_d())) +
               "\" cy=\"" + fmt(py(b.center[1].get_d())) + "\" r=\"" +
               fmt(b.radius.get_d() * scale) + "\"/>\n";
    }

    // Clip each tangent line to the bounding box.
    for (const OrientedHyperplane& plane : planes) {
        const double ux = plane.normal[0].get_d();
        const double uy = plane.normal[1].get_d();
        const double al = plane.offset.get_d();
        std::vector<std::pair<double, double>> hits;
        auto push = [&](double x, double y) {
            const double eps = 1e-9 * (std::abs(box.hi[0] - box.lo[0]) + 1);
            if (x < box.lo[0] - eps || x > box.hi[0] + eps || y < box.lo[1] - eps ||
                y > box.hi[1] + eps)
                return;
            for (auto& [hx, hy] : hits)
                if (std::abs(hx - x) < eps && std::abs(hy - y) < eps) return;
            hits.emplace_back(x, y);
        };
        if (std::abs(uy) > 1e-15) {
            push(box.lo[0], (al - ux * box.lo[0]) / uy);
            push(box.hi[0], (al - ux * box.hi[0]) / uy);
        }
        if (std::abs(ux) > 1e-15) {
            push((al - uy * box.lo[1]) / ux, box.lo[1]);
            push((al - uy * box.hi[1]) / ux, box.hi[1]);
        }
        if (hits.size() >= 2) {
            out += "  <line stroke=\"#000000\" stroke-width=\"1.5\" x1=\"" + fmt(px(hits[0].first)) +
                   "\" y1=\"" + fmt(py(hits[0].second)) + "\" x2=\"" + fmt(px(hits[1].first)) +
                   "\" y2=\"" + fmt(py(hits[1].second)) + "\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

std::string render_obj(const FamilyDocument& doc, const std::vector<OrientedHyperplane>& planes) {
    if (doc.dimension != 3)
        throw usage_error("UnsupportedDimension", "OBJ rendering needs dimension 3");
    const Box box = bounding_box(doc, 3);

    std::string out = "# polytangent scene\n";
    std::size_t vbase = 1;

    auto emit_vertex = [&](double x, double y, double z) {
        out += "v " + fmt(x) + " " + fmt(y) + " " + fmt(z) + "\n";
    };

    // Orders the facet's vertex indices around its centroid inside the plane.
    auto facet_cycle = [&](const Polytope& p, const Facet& f) {
        const double nx = f.plane.normal[0].get_d();
        const double ny = f.plane.normal[1].get_d();
        const double nz = f.plane.normal[2].get_d();
        double ax = 1, ay = 0, az = 0;
        if (std::abs(nx) >= std::abs(ny) && std::abs(nx) >= std::abs(nz)) {
            ax = 0;
            ay = 1;
        }
        // In-plane basis (b1, b2).
        double b1x = ay * nz - az * ny, b1y = az * nx - ax * nz, b1z = ax * ny - ay * nx;
        const double l1 = std::sqrt(b1x * b1x + b1y * b1y + b1z * b1z);
        b1x /= l1;
        b1y /= l1;
        b1z /= l1;
        const double b2x = ny * b1z - nz * b1y;
        const double b2y = nz * b1x - nx * b1z;
        const double b2z = nx * b1y - ny * b1x;

        double cx = 0, cy = 0, cz = 0;
        for (std::size_t vi : f.vertices) {
            cx += p.vertices[vi][0].get_d();
            cy += p.vertices[vi][1].get_d();
            cz += p.vertices[vi][2].get_d();
        }
        cx /= static_cast<double>(f.vertices.size());
        cy /= static_cast<double>(f.vertices.size());
        cz /= static_cast<double>(f.vertices.size());

        std::vector<std::size_t> order(f.vertices.begin(), f.vertices.end());
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const double dax = p.vertices[a][0].get_d() - cx;
            const double day = p.vertices[a][1].get_d() - cy;
            const double daz = p.vertices[a][2].get_d() - cz;
            const double dbx = p.vertices[b][0].get_d() - cx;
            const double dby = p.vertices[b][1].get_d() - cy;
            const double dbz = p.vertices[b][2].get_d() - cz;
            const double ta = std::atan2(dax * b2x + day * b2y + daz * b2z,
                                         dax * b1x + day * b1y + daz * b1z);
            const double tb = std::atan2(dbx * b2x + dby * b2y + dbz * b2z,
                                         dbx * b1x + dby * b1y + dbz * b1z);
            if (ta != tb) return ta < tb;
            return a < b;
        });
        return order;
    };

    for (std::size_t m = 0; m < doc.polytopes.size(); ++m) {
        const Polytope hull = convex_hull(doc.polytopes[m].vertices, 3);
        out += "o " + doc.polytopes[m].name + "\n";
        for (const Vec& v : hull.vertices)
            emit_vertex(v[0].get_d(), v[1].get_d(), v[2].get_d());
        for (const Facet& f : hull.facets) {
            out += "f";
            for (std::size_t vi : facet_cycle(hull, f))
                out += " " + std::to_string(vbase + vi);
            out += "\n";
        }
        vbase += hull.vertices.size();
    }

    // Tangent planes clipped to the bounding box.
    std::size_t plane_no = 0;
    for (const OrientedHyperplane& plane : planes) {
        ++plane_no;
        const double ux = plane.normal[0].get_d();
        const double uy = plane.normal[1].get_d();
        const double uz = plane.normal[2].get_d();
        const double al = plane.offset.get_d();

        std::vector<std::array<double, 3>> hits;
        auto value = [&](double x, double y, double z) { return ux * x + uy * y + uz * z - al; };
        auto corner = [&](int i) {
            return std::array<double, 3>{i & 1 ? box.hi[0] : box.lo[0],
                                         i & 2 ? box.hi[1] : box.lo[1],
                                         i & 4 ? box.hi[2] : box.lo[2]};
        };
        for (int a = 0; a < 8; ++a) {
            for (int bit = 0; bit < 3; ++bit) {
                const int b = a | (1 << bit);
                if (b == a || b < a) continue;
                const auto pa = corner(a), pb = corner(b);
                const double va = value(pa[0], pa[1], pa[2]);
                const double vb = value(pb[0], pb[1], pb[2]);
                if ((va > 0) == (vb > 0)) continue;
                const double t = va / (va - vb);
                hits.push_back({pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1]),
                                pa[2] + t * (pb[2] - pa[2])});
            }
        }
        if (hits.size() < 3) continue;
        double cx = 0, cy = 0, cz = 0;
        for (const auto& h : hits) {
            cx += h[0];
            cy += h[1];
            cz += h[2];
        }
        cx /= static_cast<double>(hits.size());
        cy /= static_cast<double>(hits.size());
        cz /= static_cast<double>(hits.size());
        // Order around the centroid within the plane.
        double b1x = 1, b1y = 0, b1z = 0;
        if (std::abs(ux) >= std::abs(uy) && std::abs(ux) >= std::abs(uz)) {
            b1x = 0;
            b1y = 1;
        }
        double t1x = b1y * uz - b1z * uy, t1y = b1z * ux - b1x * uz, t1z = b1x * uy - b1y * ux;
        const double l1 = std::sqrt(t1x * t1x + t1y * t1y + t1z * t1z);
        t1x /= l1;
        t1y /= l1;
        t1z /= l1;
        const double t2x = uy * t1z - uz * t1y;
        const double t2y = uz * t1x - ux * t1z;
        const double t2z = ux * t1y - uy * t1x;
        std::sort(hits.begin(), hits.end(), [&](const auto& a, const auto& b) {
            const double ta = std::atan2((a[0] - cx) * t2x + (a[1] - cy) * t2y + (a[2] - cz) * t2z,
                                         (a[0] - cx) * t1x + (a[1] - cy) * t1y + (a[2] - cz) * t1z);
            const double tb = std::atan2((b[0] - cx) * t2x + (b[1] - cy) * t2y + (b[2] - cz) * t2z,
                                         (b[0] - cx) * t1x + (b[1] - cy) * t1y + (b[2] - cz) * t1z);
            return ta < tb;
        });
        out += "o tangent_" + std::to_string(plane_no) + "\n";
        for (const auto& h : hits) emit_vertex(h[0], h[1], h[2]);
        out += "f";
        for (std::size_t i = 0; i < hits.size(); ++i) out += " " + std::to_string(vbase + i);
        out += "\n";
        vbase += hits.size();
    }
    return out;
}

}  // namespace ptg
