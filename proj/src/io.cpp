#include "tropfan/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace tropfan {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& what) { throw ParseError("schema: " + what); }

Int read_int(const json& j, const std::string& where) {
    Int out;
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty() || out.set_str(s, 10) != 0) schema(where + ": '" + s + "' is not a decimal integer");
        return out;
    }
    if (j.is_number_integer()) return Int(j.get<long>());
    schema(where + ": expected an integer string");
}

int read_small(const json& j, const std::string& where) {
    Int v = read_int(j, where);
    if (v < 0 || v > 1000000) schema(where + ": out of range");
    return static_cast<int>(v.get_si());
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) schema(std::string("missing field '") + name + "'");
    return j.at(name);
}

Vec read_vec(const json& j, int n, const std::string& where) {
    if (!j.is_array()) schema(where + ": expected an array");
    if (n >= 0 && static_cast<int>(j.size()) != n) schema(where + ": expected " + std::to_string(n) + " entries");
    Vec v;
    for (const auto& x : j) v.push_back(read_int(x, where));
    return v;
}

Mat read_mat(const json& j, int n, const std::string& where) {
    if (!j.is_array()) schema(where + ": expected an array of vectors");
    Mat m;
    for (const auto& row : j) m.push_back(read_vec(row, n, where));
    return m;
}

json write_vec(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

json write_mat(const Mat& m) {
    json a = json::array();
    for (const auto& v : m) a.push_back(write_vec(v));
    return a;
}

StackyCone read_cone(const json& j, int n) {
    Mat rays = read_mat(field(j, "rays"), n, "rays");
    Cone c = Cone::from_rays(n, rays);
    if (j.contains("lattice")) return {c, Sublattice(n, read_mat(j.at("lattice"), n, "lattice"))};
    return with_full_lattice(c);
}

json write_cone(const StackyCone& c) { return {{"rays", write_mat(c.cone.rays())}, {"lattice", write_mat(c.lattice.basis())}}; }

json write_base(const PolarizedBase& b) {
    json q = json::array();
    for (const auto& row : b.q) {
        json r = json::array();
        for (const auto& e : row) r.push_back(write_vec(e));
        q.push_back(r);
    }
    return {{"base_cone", write_cone(b.base)},
            {"m_rank", std::to_string(b.g)},
            {"q_matrix", q},
            {"torus_rank", std::to_string(b.torus_rank)}};
}

PolarizedBase read_base(const json& j) {
    PolarizedBase b;
    const json& bc = field(j, "base_cone");
    b.base = read_cone(bc, read_small(field(bc, "ambient"), "ambient"));
    b.g = read_small(field(j, "m_rank"), "m_rank");
    b.torus_rank = j.contains("torus_rank") ? read_small(j.at("torus_rank"), "torus_rank") : 0;
    const json& q = field(j, "q_matrix");
    if (!q.is_array() || static_cast<int>(q.size()) != b.g) schema("q_matrix must have m_rank rows");
    for (const auto& row : q) {
        if (!row.is_array() || static_cast<int>(row.size()) != b.g) schema("q_matrix must be square");
        std::vector<Vec> r;
        for (const auto& e : row) r.push_back(read_vec(e, b.b(), "q_matrix entry"));
        b.q.push_back(r);
    }
    return b;
}

json write_base_full(const PolarizedBase& b) {
    json j = write_base(b);
    j["base_cone"]["ambient"] = std::to_string(b.b());
    return j;
}

std::string dump(const std::string& kind, const json& payload) {
    json doc = {{"schema_version", kSchemaVersion}, {"kind", kind}, {"payload", payload}};
    return doc.dump(2) + "\n";
}

}  // namespace

Document parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    try {
        const json& version = field(doc, "schema_version");
        if (!version.is_string() || version.get<std::string>() != kSchemaVersion) schema("unsupported schema_version");
        const json& kind_j = field(doc, "kind");
        if (!kind_j.is_string()) schema("kind must be a string");
        const std::string kind = kind_j.get<std::string>();
        const json& p = field(doc, "payload");

        if (kind == "stacky_fan") {
            const int n = read_small(field(p, "ambient"), "ambient");
            std::vector<StackyCone> cones;
            for (const auto& c : field(p, "cones")) cones.push_back(read_cone(c, n));
            return {kind, StackyFan(n, cones)};
        }
        if (kind == "coloring") {
            SublatticeColoring col;
            col.ambient = read_small(field(p, "ambient"), "ambient");
            for (const auto& c : field(p, "colors")) {
                ColorClass cls{Sublattice(col.ambient, read_mat(field(c, "lattice"), col.ambient, "lattice")), {}};
                for (const auto& r : field(c, "cones")) cls.cones.push_back(Cone::from_rays(col.ambient, read_mat(r, col.ambient, "cone")));
                col.colors.push_back(cls);
            }
            return {kind, from_coloring(col)};
        }
        if (kind == "polarized_base") return {kind, read_base(p)};
        if (kind == "av_fan") {
            PolarizedBase b = read_base(field(p, "base"));
            std::vector<StackyCone> cones;
            for (const auto& c : field(p, "cones")) cones.push_back(read_cone(c, b.ambient()));
            return {kind, AVStackyFan(b, cones)};
        }
        if (kind == "graph") {
            MetricGraph g;
            g.vertices = read_small(field(p, "vertices"), "vertices");
            const json& bc = field(p, "base_cone");
            g.base = read_cone(bc, read_small(field(bc, "ambient"), "ambient"));
            for (const auto& e : field(p, "edges"))
                g.edges.push_back({read_small(field(e, "u"), "u"), read_small(field(e, "v"), "v"),
                                   read_vec(field(e, "length"), g.base.cone.ambient(), "length")});
            return {kind, g};
        }
        if (kind == "quotient_complex") {
            PolarizedBase b = read_base(field(p, "base"));
            QuotientComplex q;
            q.base = b;
            for (const auto& c : field(p, "cells")) q.cells.push_back(read_cone(c, b.ambient()));
            for (const auto& f : field(p, "face_maps"))
                q.face_maps.push_back({read_small(field(f, "source"), "source"), read_small(field(f, "target"), "target"),
                                       read_vec(field(f, "m"), b.g, "m")});
            return {kind, q};
        }
        schema("unknown kind '" + kind + "'");
    } catch (const json::exception& e) {
        schema(e.what());
    }
}

Document read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::string serialize(const StackyFan& fan) {
    json cones = json::array();
    for (const auto& c : fan.cones()) cones.push_back(write_cone(c));
    return dump("stacky_fan", {{"ambient", std::to_string(fan.ambient())}, {"cones", cones}});
}

std::string serialize(const MinimalFan& fan) {
    SublatticeColoring col = coloring_of(fan);
    json colors = json::array();
    for (const auto& cls : col.colors) {
        json cones = json::array();
        for (const auto& c : cls.cones) cones.push_back(write_mat(c.rays()));
        colors.push_back({{"lattice", write_mat(cls.lattice.basis())}, {"cones", cones}});
    }
    return dump("coloring", {{"ambient", std::to_string(col.ambient)}, {"colors", colors}});
}

std::string serialize(const PolarizedBase& base) { return dump("polarized_base", write_base_full(base)); }

std::string serialize(const AVStackyFan& fan) {
    json cones = json::array();
    for (const auto& c : fan.cones()) cones.push_back(write_cone(c));
    return dump("av_fan", {{"base", write_base_full(fan.base())}, {"cones", cones}});
}

std::string serialize(const MetricGraph& graph) {
    json edges = json::array();
    for (const auto& e : graph.edges)
        edges.push_back({{"u", std::to_string(e.u)}, {"v", std::to_string(e.v)}, {"length", write_vec(e.length)}});
    json bc = write_cone(graph.base);
    bc["ambient"] = std::to_string(graph.base.cone.ambient());
    return dump("graph", {{"vertices", std::to_string(graph.vertices)}, {"base_cone", bc}, {"edges", edges}});
}

std::string serialize(const QuotientComplex& q) {
    json cells = json::array();
    for (const auto& c : q.cells) cells.push_back(write_cone(c));
    json maps = json::array();
    for (const auto& f : q.face_maps)
        maps.push_back({{"source", std::to_string(f.source)}, {"target", std::to_string(f.target)}, {"m", write_vec(f.m)}});
    json counts = json::array();
    for (int k : q.cells_by_dimension()) counts.push_back(std::to_string(k));
    return dump("quotient_complex",
                {{"base", write_base_full(q.base)}, {"cells", cells}, {"face_maps", maps}, {"cells_by_dimension", counts}});
}

std::string serialize(const Document& doc) {
    return std::visit([](const auto& p) { return serialize(p); }, doc.payload);
}

std::string serialize_points(const std::vector<Vec>& points) {
    return json({{"count", std::to_string(points.size())}, {"points", write_mat(points)}}).dump(2) + "\n";
}

}  // namespace tropfan
