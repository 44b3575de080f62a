// Acceptance criteria 1-9. One PASS/FAIL line per criterion; timings go to a
// separate block at the end. Every check is exact.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cjac/cli.hpp"
#include "cjac/homology.hpp"
#include "cjac/modspace.hpp"
#include "cjac/orientations.hpp"
#include "cjac/strata.hpp"
#include "cjac/suites.hpp"
#include "cjac/tropical.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace cjac;

namespace {

constexpr double kSuiteBudgetSeconds = 60.0;

struct Verdict {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && passed) detail = what;
        passed = passed && ok;
    }
    void absorb(const suites::Outcome& o) {
        require(o.passed, o.name + ": " + o.witness);
        cases += o.cases;
    }
    std::size_t cases = 0;
};

suites::Options full_scale() {
    suites::Options opt;
    opt.max_vertices = 5;
    opt.max_edges = 8;
    opt.max_weight = 2;
    opt.length_trials = 10;
    return opt;
}

Verdict kirchhoff() {
    Verdict v;
    v.absorb(suites::kirchhoff(full_scale()));
    return v;
}

Verdict rooted_count() {
    Verdict v;
    v.absorb(suites::rooted_classes_count(full_scale()));
    v.require(rooted_one_orientation_classes(test::cycle(4)).size() == 4, "4-cycle does not have 4 rooted classes");
    return v;
}

Verdict totally_cyclic_count() {
    Verdict v;
    v.absorb(suites::totally_cyclic_classes_count(full_scale()));
    const auto c2 = test::banana(2);
    v.require(totally_cyclic_classes(c2).size() == 1, "2-cycle does not have exactly 1 totally cyclic class");
    v.require(component_group(c2).order() == 2, "2-cycle component group is not of order 2");
    return v;
}

Verdict degrees() {
    Verdict v;
    v.absorb(suites::degree_identities(full_scale()));
    return v;
}

Verdict well_defined() {
    Verdict v;
    v.absorb(suites::class_well_definedness(full_scale()));
    return v;
}

Verdict graded() {
    Verdict v;
    v.absorb(suites::graded_stratifications(full_scale()));
    return v;
}

Verdict tropical() {
    Verdict v;
    v.absorb(suites::tropical_complexes(full_scale()));
    const auto th = pic_g_cell_complex(MetricGraph(test::theta()));
    v.require(f_vector(th) == std::vector<std::size_t>{3, 6, 3}, "theta f-vector is not (3,6,3)");
    v.require(euler_characteristic(th) == 0, "theta complex has nonzero Euler characteristic");
    return v;
}

Verdict moduli() {
    Verdict v;
    v.absorb(suites::moduli_posets(full_scale()));
    v.require(stable_graph_poset(0, 3).size() == 1, "|S_{0,3}| != 1");
    const auto p11 = stable_graph_poset(1, 1);
    std::vector<int> d11 = p11.dim;
    std::sort(d11.begin(), d11.end());
    v.require(p11.size() == 2 && d11 == std::vector<int>{0, 1}, "S_{1,1} is not two strata of dims 1 and 0");
    const auto p20 = stable_graph_poset(2, 0);
    v.require(p20.size() == 7, "|S_{2,0}| != 7");
    v.require(*std::max_element(p20.dim.begin(), p20.dim.end()) == 3, "S_{2,0} top dimension is not 3");
    v.require(verify_graded(p20.order, p20.dim).passed(), "S_{2,0} fails the graded axioms");
    for (auto [a, b] : p20.order.covers())
        v.require(p20.elements[a].edge_count() == p20.elements[b].edge_count() + 1 && p20.dim[b] == p20.dim[a] + 1,
                  "a cover of S_{2,0} does not change |E| and dim by one");
    return v;
}

Verdict negative_controls() {
    Verdict v;
    v.absorb(suites::corrupted_poset_control(full_scale()));

    // bridged graph through the command line
    const auto path = std::filesystem::temp_directory_path() / "cjac_acceptance_bridged.json";
    std::ofstream(path) << R"({"vertices": [{"id": "a"}, {"id": "b"}, {"id": "c"}],
        "edges": [{"id": "x", "ends": ["a", "b"]}, {"id": "y", "ends": ["a", "b"]}, {"id": "z", "ends": ["b", "c"]}]})";
    std::ostringstream out, err;
    const int code = cli::run({"--json", "orient", "--kind", "tc", path.string()}, out, err);
    std::filesystem::remove(path);
    v.require(code == cli::kOk, "orient on a bridged graph exited with " + std::to_string(code));
    if (code == cli::kOk) {
        const auto j = nlohmann::json::parse(out.str());
        const auto& r = j["results"];
        v.require(r["classes"].is_array() && r["classes"].empty(), "bridged graph did not give an empty class list");
        v.require(r["empty"] == true && r["count"] == 0, "bridged graph record is not marked empty");
    }
    v.cases += 1;
    return v;
}

struct Criterion {
    int number;
    const char* title;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "Kirchhoff consistency", kirchhoff},
        {2, "rooted 1-orientation classes count |Phi|", rooted_count},
        {3, "totally cyclic classes and bridges", totally_cyclic_count},
        {4, "degree identities", degrees},
        {5, "class well-definedness", well_defined},
        {6, "graded-stratification axioms", graded},
        {7, "tropical torus checks", tropical},
        {8, "moduli posets", moduli},
        {9, "negative controls", negative_controls},
    };
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));

    bool all = true;
    std::vector<std::pair<int, double>> timings;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        v.require(secs < kSuiteBudgetSeconds, "exceeded the " + std::to_string(int(kSuiteBudgetSeconds)) + " s budget");
        timings.emplace_back(c.number, secs);
        std::printf("criterion %d %-44s %s  (%zu cases)%s%s\n", c.number, c.title, v.passed ? "PASS" : "FAIL", v.cases,
                    v.passed ? "" : "  ", v.detail.c_str());
        std::fflush(stdout);
        all = all && v.passed;
    }
    std::printf("\ntimings\n");
    for (auto [n, s] : timings) std::printf("  criterion %d  %.2f s\n", n, s);
    return all ? 0 : 1;
}
