#include "cjac/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cjac/graph.hpp"
#include "cjac/homology.hpp"
#include "cjac/io.hpp"
#include "cjac/modspace.hpp"
#include "cjac/orientations.hpp"
#include "cjac/strata.hpp"
#include "cjac/suites.hpp"
#include "cjac/tropical.hpp"

namespace cjac::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Precondition violations of a well-formed file (disconnected graph where a
/// connected one is needed and the like) are reported like malformed input.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

struct Input {
    GraphDocument doc;
    std::string digest;
};

Input load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return Input{parse_graph_document(text), fnv1a(text)};
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Json number(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

Json edge_names(const WeightedGraph& g, const EdgeSubset& s) {
    Json out = Json::array();
    for (EdgeId id : s) out.push_back(g.edge(id).name);
    return out;
}

Json degree_record(const WeightedGraph& g, const Multidegree& d) {
    Json out = Json::object();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) out[g.vertex(v).name] = d.values[v];
    return out;
}

Json class_record(const WeightedGraph& g, const OrientationClass& c) {
    return Json{{"S", edge_names(g, c.removed)}, {"degree", degree_record(g, c.degree)}, {"kind", to_string(c.kind)}};
}

Json cover_list(const Poset& p) {
    Json out = Json::array();
    for (auto [a, b] : p.covers()) out.push_back(Json::array({a, b}));
    return out;
}

struct Report {
    std::string command;
    std::string digest;
    Json results = Json::object();
    Json verification = Json::array();
    bool all_passed = true;

    void check(const std::string& name, bool passed, Json witness = nullptr) {
        Json entry{{"check", name}, {"passed", passed}};
        if (!passed && !witness.is_null()) entry["witness"] = std::move(witness);
        verification.push_back(std::move(entry));
        all_passed = all_passed && passed;
    }

    void graded(const std::string& prefix, const GradedReport& r) {
        for (const auto& c : r.checks) {
            Json witness = nullptr;
            if (!c.passed) witness = Json{{"elements", c.witness}, {"detail", c.detail}};
            check(prefix + c.name, c.passed, witness);
        }
    }

    Json to_json() const {
        return Json{{"command", command}, {"input", digest}, {"results", results}, {"verification", verification}};
    }
};

// ---------------------------------------------------------------- text output

bool flat(const Json& v) {
    if (v.is_primitive()) return true;
    if (v.is_array()) return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive() || (x.is_array() && flat(x)); });
    return false;
}

std::string inline_value(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s = "[";
        bool first = true;
        for (const Json& x : v) {
            s += (first ? "" : ", ") + inline_value(x);
            first = false;
        }
        return s + "]";
    }
    if (v.is_object()) {
        std::string s = "{";
        bool first = true;
        for (const auto& [k, x] : v.items()) {
            s += (first ? "" : ", ") + k + ": " + inline_value(x);
            first = false;
        }
        return s + "}";
    }
    return v.dump();
}

/// Objects whose values are all scalars, flat lists or flat objects go on one line.
bool one_line(const Json& v) {
    if (!v.is_object()) return flat(v);
    return std::all_of(v.begin(), v.end(), [](const Json& x) {
        return flat(x) || (x.is_object() && std::all_of(x.begin(), x.end(), [](const Json& y) { return y.is_primitive(); }));
    });
}

void render(const Json& v, int indent, std::ostream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) {
            if (flat(x) || (x.is_array() && x.empty()))
                os << pad << k << ": " << inline_value(x) << "\n";
            else {
                os << pad << k << ":\n";
                render(x, indent + 2, os);
            }
        }
    } else if (v.is_array()) {
        for (const Json& x : v) {
            if (one_line(x)) {
                std::string line;
                if (x.is_object()) {
                    bool first = true;
                    for (const auto& [k, y] : x.items()) {
                        line += (first ? "" : "  ") + k + "=" + inline_value(y);
                        first = false;
                    }
                } else {
                    line = inline_value(x);
                }
                os << pad << "- " << line << "\n";
            } else {
                os << pad << "-\n";
                render(x, indent + 2, os);
            }
        }
    } else {
        os << pad << inline_value(v) << "\n";
    }
}

void emit(const Report& r, bool json, std::ostream& out) {
    if (json) {
        out << r.to_json().dump(2) << "\n";
        return;
    }
    out << "command: " << r.command << "\n";
    out << "input: " << r.digest << "\n";
    out << "results:\n";
    render(r.results, 2, out);
    out << "verification:\n";
    for (const Json& c : r.verification) {
        out << "  " << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["check"].get<std::string>();
        if (c.contains("witness")) out << "  witness: " << inline_value(c["witness"]);
        out << "\n";
    }
    out << "status: " << (r.all_passed ? "ok" : "check failed") << "\n";
}

void emit_dot(const Report& r, const Json& elements, const Json& covers, std::ostream& out) {
    out << "digraph strata {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const Json& e = elements[i];
        std::string label = "S=" + inline_value(e["S"]);
        if (e.contains("degree")) label += "\\nd=" + inline_value(e["degree"]);
        label += "\\ndim " + inline_value(e["dim"]);
        out << "  n" << i << " [label=\"" << label << "\"];\n";
    }
    for (const Json& c : covers) out << "  n" << c[0].get<std::size_t>() << " -> n" << c[1].get<std::size_t>() << ";\n";
    out << "}\n";
    out << "// " << r.command << " " << r.digest << (r.all_passed ? " ok" : " check failed") << "\n";
}

void require_connected(const WeightedGraph& g, const char* what) {
    if (!is_connected(g)) throw UsageError(std::string(what) + " needs a connected graph");
}

// ---------------------------------------------------------------- commands

void info(const WeightedGraph& g, Report& r) {
    r.results["vertices"] = g.vertex_count();
    r.results["edges"] = g.edge_count();
    r.results["components"] = component_count(g);
    r.results["first_betti"] = first_betti(g);
    r.results["genus"] = genus(g);
    r.results["legs"] = g.total_legs();
    r.results["bridges"] = edge_names(g, bridges(g));
    r.results["stable"] = is_stable(g);
    r.check("genus = first betti + weights", genus(g) == first_betti(g) + g.total_weight());
}

constexpr std::size_t kOracleEdges = 24;

void phi(const WeightedGraph& g, Report& r) {
    require_connected(g, "phi");
    const ComponentGroup group = component_group(g);
    Json factors = Json::array();
    for (const BigInt& d : group.invariant_factors) factors.push_back(number(d));
    r.results["invariant_factors"] = factors;
    r.results["order"] = number(group.order());
    const BigInt trees = spanning_tree_count(g);
    r.check("order equals spanning-tree count", group.order() == trees,
            Json{{"order", number(group.order())}, {"trees", number(trees)}});
}

void trees(const WeightedGraph& g, Report& r) {
    require_connected(g, "trees");
    const BigInt det = spanning_tree_count(g);
    r.results["spanning_trees"] = number(det);
    if (g.edge_count() <= kOracleEdges) {
        const BigInt dc = spanning_tree_count_oracle(g);
        r.results["deletion_contraction"] = number(dc);
        r.check("determinant equals deletion-contraction", det == dc);
    }
}

void orient(const WeightedGraph& g, const std::string& kind, Report& r) {
    const bool rooted = kind == "rooted";
    const auto classes = rooted ? rooted_one_orientation_classes(g) : totally_cyclic_classes(g);
    Json records = Json::array();
    for (const auto& c : classes) records.push_back(class_record(g, c));
    r.results["kind"] = rooted ? "rooted_one" : "totally_cyclic";
    r.results["S"] = Json::array();
    r.results["count"] = classes.size();
    r.results["empty"] = classes.empty();
    r.results["classes"] = records;

    const bool connected = is_connected(g);
    const BigInt order = connected ? component_group(g).order() : BigInt(0);
    if (rooted) {
        r.check(connected ? "class count equals |Phi|" : "no classes on a disconnected graph",
                BigInt(classes.size()) == order, Json{{"classes", classes.size()}, {"expected", number(order)}});
    } else {
        const auto br = bridges(g);
        r.check("no classes exactly when a bridge exists", classes.empty() == !br.empty(),
                Json{{"classes", classes.size()}, {"bridges", edge_names(g, br)}});
        if (connected) {
            const BigInt k(classes.size());
            r.check("class count at most |Phi|, equal only for one vertex",
                    k <= order && (k == order) == (g.vertex_count() == 1),
                    Json{{"classes", classes.size()}, {"phi", number(order)}});
        }
    }
    const int shift = rooted ? 1 : 0;
    const int c = component_count(g);
    bool totals = true;
    for (const auto& k : classes) totals = totals && k.degree.total() == genus(g) - c + shift;
    r.check(rooted ? "degree totals equal g" : "degree totals equal g - 1", totals);
}

template <class Label, class Describe>
Json strata_records(const GradedStratification<Label>& s, Describe describe) {
    Json out = Json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        Json rec = describe(s.strata[i].label);
        rec["dim"] = s.strata[i].dim;
        rec["pieces"] = number(s.strata[i].pieces);
        out.push_back(std::move(rec));
    }
    return out;
}

void poset(const WeightedGraph& g, const std::string& kind, Report& r) {
    Json elements = Json::array();
    Poset order;
    std::vector<int> rank;
    if (kind == "c") {
        require_connected(g, "poset --kind c");
        const auto p = connected_spanning_subgraph_poset(g);
        for (std::size_t i = 0; i < p.size(); ++i)
            elements.push_back(Json{{"S", edge_names(g, p.elements[i])}, {"rank", p.rank[i]}});
        order = p.order;
        rank = p.rank;
        const BigInt trees = spanning_tree_count(g);
        r.check("minimal elements equal spanning trees", BigInt(p.order.minimal_elements().size()) == trees);
    } else {
        const bool rooted = kind == "op1";
        if (rooted) require_connected(g, "poset --kind op1");
        const auto p = orientation_class_poset(g, rooted ? ClassKind::rooted_one : ClassKind::totally_cyclic);
        for (std::size_t i = 0; i < p.size(); ++i) {
            Json rec = class_record(g, p.elements[i]);
            rec["rank"] = p.rank[i];
            elements.push_back(std::move(rec));
        }
        order = p.order;
        rank = p.rank;
    }
    r.results["kind"] = kind;
    r.results["size"] = elements.size();
    r.results["elements"] = elements;
    r.results["covers"] = cover_list(order);
    r.graded("", verify_graded(order, rank));
}

struct StrataOutput {
    Json elements;
    Json covers;
};

StrataOutput strata(const Input& in, const std::string& model, Report& r) {
    const WeightedGraph& g = in.doc.graph;
    require_connected(g, "strata");
    StrataOutput out;
    auto by_class = [&](const OrientationClass& c) { return class_record(g, c); };
    if (model == "neron") {
        const auto s = neron_stratification(g);
        out.elements = strata_records(s, [&](const EdgeSubset& e) { return Json{{"S", edge_names(g, e)}}; });
        out.covers = cover_list(s.order);
        r.graded("", verify_graded(s));
        r.check("minimal strata equal spanning trees",
                BigInt(s.order.minimal_elements().size()) == spanning_tree_count(g));
    } else if (model == "picg1") {
        const auto s = pic_gminus1_stratification(g);
        out.elements = strata_records(s, by_class);
        out.covers = cover_list(s.order);
        r.graded("", verify_graded(s));
    } else if (model == "picg") {
        const auto s = pic_g_stratification(g);
        const auto neron = neron_stratification(g);
        out.elements = strata_records(s, by_class);
        out.covers = cover_list(s.order);
        r.graded("", verify_graded(s));
        const NeronProjection proj = project_to_neron(s, neron);
        r.check("projection to neron strata is onto", proj.surjective);
        r.check("projection to neron strata preserves order", proj.order_preserving);
        r.check("fibers over S number |Phi(G - S)|", proj.fibers_match_pieces);
    } else {
        const MetricGraph gamma = in.doc.lengths ? MetricGraph(g, *in.doc.lengths) : MetricGraph(g);
        const CellComplex c = pic_g_cell_complex(gamma);
        out.elements = Json::array();
        for (const Cell& cell : c.cells) {
            Json rec = class_record(g, cell.label);
            rec["dim"] = cell.dim;
            out.elements.push_back(std::move(rec));
        }
        out.covers = cover_list(c.face_order);
        r.graded("", verify_graded(c));
    }
    r.results["model"] = model;
    r.results["size"] = out.elements.size();
    r.results["strata"] = out.elements;
    r.results["covers"] = out.covers;
    return out;
}

void tropical(const Input& in, Report& r) {
    const WeightedGraph& g = in.doc.graph;
    require_connected(g, "tropical");
    const MetricGraph gamma = in.doc.lengths ? MetricGraph(g, *in.doc.lengths) : MetricGraph(g);
    if (!gamma.is_compact()) throw UsageError("tropical needs finite edge lengths");
    const CellComplex c = pic_g_cell_complex(gamma);
    const auto f = f_vector(c);
    const long long chi = euler_characteristic(c);
    const int b1 = jacobian_dimension(gamma);
    r.results["jacobian_dimension"] = b1;
    r.results["f_vector"] = f;
    r.results["euler_characteristic"] = chi;
    Json cells = Json::array();
    for (const Cell& cell : c.cells) {
        Json rec = class_record(g, cell.label);
        rec["dim"] = cell.dim;
        cells.push_back(std::move(rec));
    }
    r.results["cells"] = cells;
    r.results["face_covers"] = cover_list(c.face_order);
    r.graded("", verify_graded(c));
    r.check(b1 >= 1 ? "euler characteristic 0" : "euler characteristic 1", chi == (b1 >= 1 ? 0 : 1));
    const BigInt top = f.size() == static_cast<std::size_t>(b1) + 1 ? BigInt(f.back()) : BigInt(0);
    r.check("top cells number |Phi|", top == component_group(g).order());
}

void modspace(int genus_value, int legs, Report& r) {
    const StableGraphPoset p = stable_graph_poset(genus_value, legs);
    Json elements = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const WeightedGraph& g = p.elements[i];
        Json vertices = Json::array();
        for (const Vertex& v : g.vertices()) vertices.push_back(Json{{"weight", v.weight}, {"legs", v.legs}});
        Json edges = Json::array();
        for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
        elements.push_back(Json{{"vertices", vertices}, {"edges", edges}, {"dim", p.dim[i]}});
    }
    r.results["genus"] = genus_value;
    r.results["legs"] = legs;
    r.results["size"] = p.size();
    r.results["elements"] = elements;
    r.results["covers"] = cover_list(p.order);
    r.graded("", verify_graded(p.order, p.dim));
    const auto top = p.order.maximal_elements();
    r.check("unique maximum is the smooth graph of dim 3g-3+n",
            top.size() == 1 && p.elements[top[0]].edge_count() == 0 && p.dim[top[0]] == 3 * genus_value - 3 + legs);
    bool covers_ok = true;
    for (auto [a, b] : p.order.covers())
        covers_ok = covers_ok && p.elements[a].edge_count() == p.elements[b].edge_count() + 1 && p.dim[b] == p.dim[a] + 1;
    r.check("covers change |E| and dim by one", covers_ok);
}

void verify_all(const suites::Options& opt, Report& r) {
    r.results["max_vertices"] = opt.max_vertices;
    r.results["max_edges"] = opt.max_edges;
    r.results["max_weight"] = opt.max_weight;
    Json suites_json = Json::array();
    for (const auto& s : suites::all_suites()) {
        const suites::Outcome o = s.run(opt);
        suites_json.push_back(Json{{"suite", o.name}, {"cases", o.cases}, {"passed", o.passed}});
        r.check(o.name + ": " + o.description, o.passed, o.passed ? Json(nullptr) : Json(o.witness));
    }
    r.results["suites"] = suites_json;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compactified Jacobian combinatorics: component groups, orientation posets, strata."};
    app.name("cjac");
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Structured output");

    std::string file, kind, model, format = "text";
    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Graph file")->required(); };

    auto* info_cmd = app.add_subcommand("info", "First Betti number, genus, bridges and stability");
    add_file(info_cmd);
    auto* phi_cmd = app.add_subcommand("phi", "Component group from the reduced Laplacian");
    add_file(phi_cmd);
    auto* trees_cmd = app.add_subcommand("trees", "Spanning-tree count, two ways");
    add_file(trees_cmd);
    auto* orient_cmd = app.add_subcommand("orient", "Classes of totally cyclic or rooted 1-orientations");
    add_file(orient_cmd);
    orient_cmd->add_option("--kind", kind, "tc or rooted")->required()->check(CLI::IsMember({"tc", "rooted"}));
    auto* poset_cmd = app.add_subcommand("poset", "Spanning-subgraph or orientation-class poset");
    add_file(poset_cmd);
    poset_cmd->add_option("--kind", kind, "c, op0 or op1")->required()->check(CLI::IsMember({"c", "op0", "op1"}));
    auto* strata_cmd = app.add_subcommand("strata", "Graded stratifications");
    add_file(strata_cmd);
    strata_cmd->add_option("--model", model, "neron, picg1, picg or tropical")
        ->required()
        ->check(CLI::IsMember({"neron", "picg1", "picg", "tropical"}));
    strata_cmd->add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    auto* tropical_cmd = app.add_subcommand("tropical", "Break-divisor cell complex of Pic^g");
    add_file(tropical_cmd);
    int genus_value = 0, legs = 0;
    auto* modspace_cmd = app.add_subcommand("modspace", "Poset of stable graphs of genus g with n legs");
    modspace_cmd->add_option("--genus", genus_value)->required()->check(CLI::NonNegativeNumber);
    modspace_cmd->add_option("--legs", legs)->required()->check(CLI::NonNegativeNumber);
    suites::Options opt;
    bool all = false;
    auto* verify_cmd = app.add_subcommand("verify", "Identity suites over generated graphs");
    verify_cmd->add_flag("--all", all, "Run every suite")->required();
    verify_cmd->add_option("--max-edges", opt.max_edges, "Largest edge count")->check(CLI::Range(0, 12));
    verify_cmd->add_option("--max-vertices", opt.max_vertices, "Largest vertex count")->check(CLI::Range(1, 6));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    Report r;
    try {
        if (format == "json") json = true;
        if (*modspace_cmd) {
            r.command = "modspace";
            r.digest = fnv1a("genus=" + std::to_string(genus_value) + ";legs=" + std::to_string(legs));
            if (2 * genus_value - 2 + legs <= 0) throw UsageError("modspace needs 2g - 2 + n > 0");
            modspace(genus_value, legs, r);
        } else if (*verify_cmd) {
            r.command = "verify";
            r.digest = fnv1a("max_vertices=" + std::to_string(opt.max_vertices) +
                             ";max_edges=" + std::to_string(opt.max_edges));
            verify_all(opt, r);
        } else {
            const Input in = load(file);
            const WeightedGraph& g = in.doc.graph;
            r.digest = in.digest;
            StrataOutput dot;
            if (*info_cmd) {
                r.command = "info";
                info(g, r);
            } else if (*phi_cmd) {
                r.command = "phi";
                phi(g, r);
            } else if (*trees_cmd) {
                r.command = "trees";
                trees(g, r);
            } else if (*orient_cmd) {
                r.command = "orient";
                orient(g, kind, r);
            } else if (*poset_cmd) {
                r.command = "poset";
                poset(g, kind, r);
            } else if (*strata_cmd) {
                r.command = "strata";
                dot = strata(in, model, r);
            } else if (*tropical_cmd) {
                r.command = "tropical";
                tropical(in, r);
            }
            if (*strata_cmd && format == "dot") {
                emit_dot(r, dot.elements, dot.covers, out);
                return r.all_passed ? kOk : kCheckFailed;
            }
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const UsageError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::length_error& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }
    emit(r, json, out);
    return r.all_passed ? kOk : kCheckFailed;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace cjac::cli
