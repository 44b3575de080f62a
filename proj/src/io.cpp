#include "cjac/io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cjac {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

void only_fields(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(where, "expected an object");
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) fail(where + "/" + key, "unknown field");
    }
}

const json& required(const json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

int nonnegative_int(const json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) return 0;
    if (!it->is_number_integer()) fail(where + "/" + key, "expected an integer");
    const auto v = it->get<long long>();
    if (v < 0 || v > 1'000'000) fail(where + "/" + key, "expected a nonnegative integer");
    return static_cast<int>(v);
}

std::string identifier(const json& value, const std::string& where) {
    if (!value.is_string() || value.get<std::string>().empty()) fail(where, "expected a nonempty string id");
    return value.get<std::string>();
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("byte " + std::to_string(e.byte) + ": " + e.what());
    }
    only_fields(doc, "", {"vertices", "edges", "lengths"});

    GraphDocument out;
    std::map<std::string, VertexIndex> vertex_of;
    const json& vertices = required(doc, "", "vertices");
    if (!vertices.is_array()) fail("/vertices", "expected an array");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string where = "/vertices/" + std::to_string(i);
        only_fields(vertices[i], where, {"id", "weight", "legs"});
        const std::string id = identifier(required(vertices[i], where, "id"), where + "/id");
        if (vertex_of.contains(id)) fail(where + "/id", "duplicate vertex id '" + id + "'");
        vertex_of[id] = out.graph.add_vertex(id, nonnegative_int(vertices[i], where, "weight"),
                                             nonnegative_int(vertices[i], where, "legs"));
    }

    std::map<std::string, std::size_t> edge_of;
    if (auto it = doc.find("edges"); it != doc.end()) {
        if (!it->is_array()) fail("/edges", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& e = (*it)[i];
            const std::string where = "/edges/" + std::to_string(i);
            only_fields(e, where, {"id", "ends"});
            const std::string id = identifier(required(e, where, "id"), where + "/id");
            if (edge_of.contains(id)) fail(where + "/id", "duplicate edge id '" + id + "'");
            const json& ends = required(e, where, "ends");
            if (!ends.is_array() || ends.size() != 2) fail(where + "/ends", "expected two vertex ids");
            VertexIndex endpoint[2];
            for (std::size_t k = 0; k < 2; ++k) {
                const std::string vid = identifier(ends[k], where + "/ends/" + std::to_string(k));
                auto v = vertex_of.find(vid);
                if (v == vertex_of.end()) fail(where + "/ends/" + std::to_string(k), "unknown vertex '" + vid + "'");
                endpoint[k] = v->second;
            }
            out.graph.add_edge(endpoint[0], endpoint[1], id);
            edge_of[id] = out.graph.edge_count() - 1;
        }
    }

    if (auto it = doc.find("lengths"); it != doc.end()) {
        if (!it->is_object()) fail("/lengths", "expected an object");
        std::vector<double> lengths(out.graph.edge_count(), 0.0);
        std::vector<bool> seen(out.graph.edge_count(), false);
        for (const auto& [key, value] : it->items()) {
            const std::string where = "/lengths/" + key;
            auto e = edge_of.find(key);
            if (e == edge_of.end()) fail(where, "unknown edge '" + key + "'");
            double l = 0.0;
            if (value.is_string() && value.get<std::string>() == "inf")
                l = std::numeric_limits<double>::infinity();
            else if (value.is_number())
                l = value.get<double>();
            else
                fail(where, "expected a positive number or \"inf\"");
            if (!(l > 0.0)) fail(where, "edge length must be positive");
            lengths[e->second] = l;
            seen[e->second] = true;
        }
        for (std::size_t p = 0; p < seen.size(); ++p)
            if (!seen[p]) fail("/lengths", "no length for edge '" + out.graph.edges()[p].name + "'");
        out.lengths = std::move(lengths);
    }
    return out;
}

GraphDocument read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_graph_document(buf.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string write_graph_document(const WeightedGraph& g, const std::vector<double>* lengths) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const Vertex& v : g.vertices())
        doc["vertices"].push_back({{"id", v.name}, {"weight", v.weight}, {"legs", v.legs}});
    doc["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges())
        doc["edges"].push_back({{"id", e.name}, {"ends", {g.vertex(e.u).name, g.vertex(e.v).name}}});
    if (lengths) {
        nlohmann::ordered_json l = nlohmann::ordered_json::object();
        for (std::size_t p = 0; p < g.edge_count(); ++p) {
            const double x = lengths->at(p);
            if (std::isinf(x))
                l[g.edges()[p].name] = "inf";
            else
                l[g.edges()[p].name] = x;
        }
        doc["lengths"] = l;
    }
    return doc.dump(2) + "\n";
}

}  // namespace cjac
