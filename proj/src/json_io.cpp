#include "affinv/json_io.hpp"

#include <fstream>

namespace affinv {

Json to_json(const Vec& v) {
    Json arr = Json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InvalidArgument("json: expected a coordinate array");
    Vec v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = j[i].get<double>();
    return v;
}

Json to_json(const ConvexBody& K) {
    Json j;
    j["dim"] = K.dim();
    Json verts = Json::array();
    for (const auto& v : K.vertices()) verts.push_back(to_json(v));
    j["vertices"] = verts;
    return j;
}

ConvexBody body_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("vertices"))
        throw InvalidArgument("json body: need \"dim\" and \"vertices\"");
    const int dim = j["dim"].get<int>();
    std::vector<Vec> pts;
    for (const auto& row : j["vertices"]) pts.push_back(vec_from_json(row));
    return canonicalize(pts, dim);
}

Json to_json(const AffineMap& g) {
    Json linear = Json::array();
    for (int r = 0; r < g.dim(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < g.dim(); ++c) row.push_back(g.linear()(r, c));
        linear.push_back(row);
    }
    return Json{{"linear", linear}, {"translation", to_json(g.translation())}};
}

AffineMap map_from_json(const Json& j) {
    if (!j.contains("linear") || !j.contains("translation"))
        throw InvalidArgument("json map: need \"linear\" and \"translation\"");
    const auto& rows = j["linear"];
    const int n = static_cast<int>(rows.size());
    Mat linear(n, n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n)
            throw InvalidArgument("json map: linear part must be square");
        for (int c = 0; c < n; ++c) linear(r, c) = rows[r][c].get<double>();
    }
    return AffineMap(linear, vec_from_json(j["translation"]));
}

Json to_json(const Ellipsoid& E) {
    Json shape = Json::array();
    for (int r = 0; r < E.dim(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < E.dim(); ++c) row.push_back(E.shape(r, c));
        shape.push_back(row);
    }
    return Json{{"center", to_json(E.center)}, {"shape", shape}};
}

Ellipsoid ellipsoid_from_json(const Json& j) {
    const Vec center = vec_from_json(j.at("center"));
    const auto& rows = j.at("shape");
    const int n = static_cast<int>(center.size());
    Mat shape(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) shape(r, c) = rows[r][c].get<double>();
    Ellipsoid e{center, shape};
    validate_ellipsoid(e);
    return e;
}

Json to_json(const SymmetryGroup& G) {
    Json elems = Json::array();
    for (const auto& g : G.elements) elems.push_back(to_json(g));
    return Json{{"dim", G.dim}, {"order", G.order()}, {"elements", elems}};
}

Json to_json(const AffineSubspace& S) {
    Json dirs = Json::array();
    for (const auto& d : S.directions) dirs.push_back(to_json(d));
    return Json{{"base", to_json(S.base)}, {"directions", dirs}};
}

Json to_json(const AlignmentResult& r) {
    return Json{{"objective", r.objective},
                {"best_map", to_json(r.best_map)},
                {"converged", r.converged},
                {"restarts_used", r.restarts_used},
                {"disagreeing_restarts", r.disagreeing_restarts}};
}

Json to_json(const InvariantPointDescriptor& desc) {
    return Json{{"base_body", to_json(desc.base_body)},
                {"target", to_json(desc.target)},
                {"bump", Json{{"inner", desc.bump.delta_inner}, {"outer", desc.bump.delta_outer}}},
                {"base_point", to_string(desc.base_point)},
                {"proper", desc.proper_mode},
                {"margin", desc.interior_margin}};
}

InvariantPointDescriptor descriptor_from_json(const Json& j) {
    InvariantPointDescriptor desc{
        body_from_json(j.at("base_body")),
        vec_from_json(j.at("target")),
        BumpParams{j.at("bump").at("inner").get<double>(),
                   j.at("bump").at("outer").get<double>()},
        base_point_from_string(j.at("base_point").get<std::string>()),
        j.at("proper").get<bool>(),
        j.at("margin").get<double>()};
    validate_descriptor(desc);
    return desc;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    try {
        Json j;
        in >> j;
        return j;
    } catch (const std::exception& e) {
        throw IoError("cannot parse JSON in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace affinv
