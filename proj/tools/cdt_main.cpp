// Command-line front door: generators, colorers, exact search, bounds and
// the small-graph survey, wired into reproducible JSON pipelines.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdt/bounds.hpp"
#include "cdt/colorers.hpp"
#include "cdt/coloring.hpp"
#include "cdt/errors.hpp"
#include "cdt/families.hpp"
#include "cdt/graph.hpp"
#include "cdt/io.hpp"
#include "cdt/solver.hpp"

using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "cdt 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitClaim = 4;

json make_manifest(const std::string& subcommand, const json& parameters,
                   const std::vector<std::string>& inputs,
                   const std::vector<std::string>& outputs) {
    return json{{"subcommand", subcommand},
                {"parameters", parameters},
                {"inputs", inputs},
                {"outputs", outputs},
                {"tool_version", kToolVersion}};
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw cdt::invalid_input("cannot write '" + out_path + "'");
        out << text;
    }
}

void emit_json(const json& j, const std::string& out_path, bool pretty) {
    emit_text(j.dump(pretty ? 2 : -1) + "\n", out_path);
}

// ------------------------------------------------------------------- gen

struct GenArgs {
    std::string family;
    int a = 1, b = 1, c = 1;
    int p = 2, q = 2;
    int n = 0, m = 0;
    std::string r_list;
    std::string in_path;
    std::string out_path;
    std::string labels_path;
};

cdt::Graph build_family(const GenArgs& args, json& params) {
    const std::string& f = args.family;
    if (f == "s-graph") {
        params = {{"a", args.a}, {"b", args.b}, {"c", args.c}};
        return cdt::gen_S(args.a, args.b, args.c);
    }
    if (f == "m-graph") {
        params = {{"a", args.a}, {"b", args.b}, {"c", args.c}};
        return cdt::gen_M(args.a, args.b, args.c);
    }
    if (f == "hertz") {
        params = {{"p", args.p}, {"q", args.q}};
        return cdt::gen_hertz(args.p, args.q);
    }
    if (f == "subdivide" || f == "hat" || f == "tilde") {
        if (args.in_path.empty()) throw cdt::invalid_input("transform families need --in");
        params = {{"in", args.in_path}};
        cdt::Graph base = cdt::read_graph_file(args.in_path);
        if (f == "subdivide") return cdt::subdivide(base);
        if (f == "hat") return cdt::hat(base);
        return cdt::tilde(base);
    }
    if (f == "erd") {
        std::vector<int> r;
        std::stringstream ss(args.r_list);
        std::string tok;
        while (std::getline(ss, tok, ',')) r.push_back(std::stoi(tok));
        params = {{"n", args.n}, {"r", r}};
        return cdt::gen_erd(args.n, r);
    }
    if (f == "complete") {
        params = {{"n", args.n}};
        return cdt::gen_complete(args.n);
    }
    if (f == "complete-bipartite") {
        params = {{"m", args.m}, {"n", args.n}};
        return cdt::gen_complete_bipartite(args.m, args.n);
    }
    if (f == "cycle") {
        params = {{"n", args.n}};
        return cdt::gen_cycle(args.n);
    }
    if (f == "path") {
        params = {{"n", args.n}};
        return cdt::gen_path(args.n);
    }
    if (f == "hypercube") {
        params = {{"n", args.n}};
        return cdt::gen_hypercube(args.n);
    }
    throw cdt::invalid_input("unknown family '" + f + "'");
}

int run_gen(const GenArgs& args) {
    json params;
    cdt::Graph g = build_family(args, params);
    json manifest = make_manifest("gen", params, args.in_path.empty()
                                                     ? std::vector<std::string>{}
                                                     : std::vector<std::string>{args.in_path},
                                  {args.out_path, args.labels_path});
    std::ostringstream body;
    cdt::write_graph(body, g, {"manifest " + manifest.dump()});
    emit_text(body.str(), args.out_path);

    json labels = json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.labels().empty()) labels[std::to_string(v)] = g.labels()[static_cast<size_t>(v)];
    emit_json(json{{"labels", labels}, {"manifest", manifest}},
              args.labels_path.empty() && !args.out_path.empty() ? args.out_path + ".labels.json"
                                                                 : args.labels_path,
              true);
    return kExitOk;
}

// ----------------------------------------------------------------- color

// Family recognition is positional: the file must carry the generator's
// canonical vertex numbering.
std::optional<std::tuple<int, int, int>> recognize_S(const cdt::Graph& g) {
    if (g.vertex_count() < 10 || g.edge_count() < 12) return std::nullopt;
    int a = g.degree(1) - 2, b = g.degree(2) - 2, c = g.degree(3) - 2;
    if (a < 1 || b < 1 || c < 1 || g.vertex_count() != 7 + a + b + c) return std::nullopt;
    cdt::Graph want = cdt::gen_S(a, b, c);
    if (want.edges() != g.edges()) return std::nullopt;
    return std::make_tuple(a, b, c);
}

std::optional<std::tuple<int, int, int>> recognize_M(const cdt::Graph& g) {
    if (g.vertex_count() < 7 || g.edge_count() < 9) return std::nullopt;
    int d1 = g.degree(1), d2 = g.degree(2), d3 = g.degree(3);
    int twice_a = d1 + d2 - d3, twice_b = d2 + d3 - d1, twice_c = d1 + d3 - d2;
    if (twice_a <= 0 || twice_b <= 0 || twice_c <= 0) return std::nullopt;
    if (twice_a % 2 || twice_b % 2 || twice_c % 2) return std::nullopt;
    int a = twice_a / 2, b = twice_b / 2, c = twice_c / 2;
    if (g.vertex_count() != 4 + a + b + c) return std::nullopt;
    cdt::Graph want = cdt::gen_M(a, b, c);
    if (want.edges() != g.edges()) return std::nullopt;
    return std::make_tuple(a, b, c);
}

struct Colored {
    cdt::EdgeColoring coloring;
    std::string method;
    json certified_bound; // null when the method certifies nothing
};

Colored run_method(const cdt::Graph& g, const std::string& method) {
    if (method == "s-formula") {
        auto abc = recognize_S(g);
        if (!abc) throw cdt::invalid_input("input is not a canonical s-graph");
        auto [a, b, c] = *abc;
        return {cdt::color_S(a, b, c), "s-formula", 0};
    }
    if (method == "m-formula") {
        auto abc = recognize_M(g);
        if (!abc) throw cdt::invalid_input("input is not a canonical m-graph");
        auto [a, b, c] = *abc;
        return {cdt::color_M(a, b, c), "m-formula", 0};
    }
    if (method == "bipartite") {
        Colored out{cdt::bipartite_bound_coloring(g), "bipartite", nullptr};
        out.certified_bound = g.max_degree() >= 5 ? json(cdt::ub_bipartite(g)) : json(0);
        return out;
    }
    if (method == "smalldiff")
        return {cdt::smalldiff_coloring(g), "smalldiff", g.vertex_count()};
    if (method == "maxdeg5")
        return {cdt::maxdeg5_coloring(g), "maxdeg5", g.vertex_count()};
    if (method == "vizing")
        return {cdt::vizing_coloring(g), "vizing", nullptr};
    throw cdt::invalid_input("unknown method '" + method + "'");
}

Colored run_auto(const cdt::Graph& g) {
    if (recognize_S(g)) return run_method(g, "s-formula");
    if (recognize_M(g)) return run_method(g, "m-formula");
    if (cdt::bipartition(g).has_value() && g.max_degree() >= 2) return run_method(g, "bipartite");
    if (g.max_degree() - g.min_degree() <= 2) return run_method(g, "smalldiff");
    if (g.max_degree() <= 5) return run_method(g, "maxdeg5");
    return run_method(g, "vizing");
}

int run_color(const std::string& in_path, const std::string& method, const std::string& out_path,
              bool pretty) {
    cdt::Graph g = cdt::read_graph_file(in_path);
    Colored res = method == "auto" ? run_auto(g) : run_method(g, method);
    cdt::DeficiencyReport rep = cdt::cyclic_deficiency_report(g, res.coloring);
    json j = cdt::coloring_to_json(g, res.coloring, rep);
    j["method"] = res.method;
    j["certified_bound"] = res.certified_bound;
    j["manifest"] = make_manifest("color", {{"in", in_path}, {"method", method}}, {in_path},
                                  {out_path});
    emit_json(j, out_path, pretty);
    return kExitOk;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& graph_path, const std::string& coloring_path,
               const std::string& out_path, bool pretty) {
    cdt::Graph g = cdt::read_graph_file(graph_path);
    std::ifstream in(coloring_path);
    if (!in) throw cdt::invalid_input("cannot open '" + coloring_path + "'");
    json j = json::parse(in);
    cdt::EdgeColoring c = cdt::coloring_from_json(g, j);
    bool proper = cdt::verify_proper(g, c);
    json out{{"proper", proper},
             {"manifest", make_manifest("verify", {{"graph", graph_path}, {"coloring", coloring_path}},
                                        {graph_path, coloring_path}, {out_path})}};
    if (proper) {
        cdt::DeficiencyReport rep = cdt::cyclic_deficiency_report(g, c);
        out["report"] = cdt::coloring_to_json(g, c, rep)["report"];
        if (j.contains("report") && j["report"]["total"].get<long long>() != rep.total)
            throw cdt::invalid_input("embedded report total disagrees with recomputation");
    }
    emit_json(out, out_path, pretty);
    return proper ? kExitOk : kExitInvalid;
}

// ----------------------------------------------------------------- exact

int run_exact(const std::string& in_path, int t_min, int t_max, long long budget, int wc_cap,
              int decide_t, bool surjective, const std::string& out_path, bool pretty) {
    cdt::Graph g = cdt::read_graph_file(in_path);
    json params{{"in", in_path}, {"budget", budget}};
    json out;
    int code = kExitOk;
    if (wc_cap > 0) {
        params["wc-cap"] = wc_cap;
        out["wc_max"] = cdt::wc_max(g, wc_cap, budget);
    } else if (decide_t > 0) {
        params["decide-t"] = decide_t;
        params["surjective"] = surjective;
        cdt::SearchStats st;
        auto w = cdt::decide_cyclic_t(g, decide_t, surjective, budget, &st);
        out["found"] = w.has_value();
        out["nodes_explored"] = st.nodes;
        if (st.exhausted) {
            out["status"] = "exhausted-budget";
            code = kExitBudget;
        }
        if (w) {
            auto rep = cdt::cyclic_deficiency_report(g, *w);
            out["witness"] = cdt::coloring_to_json(g, *w, rep);
        }
    } else {
        if (t_min <= 0) t_min = std::max(1, g.max_degree());
        if (t_max <= 0) t_max = std::max(t_min, g.edge_count());
        params["t-min"] = t_min;
        params["t-max"] = t_max;
        cdt::SolverResult res = cdt::min_cyclic_deficiency(g, t_min, t_max, budget);
        out["status"] = res.status == cdt::SolverStatus::colorable ? "colorable"
                        : res.status == cdt::SolverStatus::optimum_found ? "optimum-found"
                                                                         : "exhausted-budget";
        out["best_total"] = res.best_total;
        out["t_used"] = res.t_used;
        out["nodes_explored"] = res.nodes_explored;
        if (res.witness) {
            auto rep = cdt::cyclic_deficiency_report(g, *res.witness);
            out["witness"] = cdt::coloring_to_json(g, *res.witness, rep);
        }
        if (res.status == cdt::SolverStatus::exhausted_budget) code = kExitBudget;
    }
    out["manifest"] = make_manifest("exact", params, {in_path}, {out_path});
    emit_json(out, out_path, pretty);
    return code;
}

// ---------------------------------------------------------------- bounds

int run_bounds(const std::string& in_path, const std::string& coloring_path,
               const std::string& out_path, bool pretty) {
    cdt::Graph g = cdt::read_graph_file(in_path);
    std::optional<cdt::DeficiencyReport> rep;
    if (!coloring_path.empty()) {
        std::ifstream in(coloring_path);
        if (!in) throw cdt::invalid_input("cannot open '" + coloring_path + "'");
        cdt::EdgeColoring c = cdt::coloring_from_json(g, json::parse(in));
        rep = cdt::cyclic_deficiency_report(g, c);
    }
    json entries = json::array();
    for (const auto& e : cdt::bound_report(g, rep ? &*rep : nullptr)) {
        entries.push_back({{"name", e.name},
                           {"applicable", e.applicable},
                           {"value", e.value},
                           {"comment", e.comment}});
    }
    json params{{"in", in_path}};
    if (!coloring_path.empty()) params["coloring"] = coloring_path;
    json out{{"bounds", entries}, {"manifest", make_manifest("bounds", params, {in_path}, {out_path})}};
    emit_json(out, out_path, pretty);
    return kExitOk;
}

// ---------------------------------------------------------------- survey

int run_survey(int max_n, long long budget, const std::string& out_path, bool pretty) {
    if (max_n < 1 || max_n > 6) throw cdt::invalid_input("survey supports max-n in 1..6");
    json per_n = json::array();
    bool any_exhausted = false;
    for (int n = 1; n <= max_n; ++n) {
        auto graphs = cdt::gen_all_connected(n);
        json nonzero = json::array();
        long long instances = 0, exhausted = 0;
        for (size_t gi = 0; gi < graphs.size(); ++gi) {
            const cdt::Graph& g = graphs[gi];
            int t_min = std::max(1, g.max_degree());
            int t_max = std::max(t_min, g.edge_count());
            cdt::SolverResult res = cdt::min_cyclic_deficiency(g, t_min, t_max, budget);
            ++instances;
            if (res.status == cdt::SolverStatus::exhausted_budget) {
                ++exhausted;
                any_exhausted = true;
                nonzero.push_back({{"n", n}, {"index", gi}, {"status", "exhausted-budget"}});
            } else if (res.best_total != 0) {
                nonzero.push_back({{"n", n}, {"index", gi}, {"best_total", res.best_total}});
            }
        }
        per_n.push_back({{"n", n},
                         {"instances", instances},
                         {"exhausted", exhausted},
                         {"nonzero", nonzero}});
    }
    json out{{"per_n", per_n},
             {"all_zero", !any_exhausted && [&] {
                  for (const auto& row : per_n)
                      if (!row["nonzero"].empty()) return false;
                  return true;
              }()},
             {"manifest", make_manifest("survey", {{"max-n", max_n}, {"budget", budget}}, {},
                                        {out_path})}};
    emit_json(out, out_path, pretty);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic interval edge colorings, deficiencies and bounds"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    GenArgs gen;
    auto* sgen = app.add_subcommand("gen", "generate a named graph family");
    sgen->add_option("family", gen.family,
                     "s-graph|m-graph|hertz|subdivide|hat|tilde|erd|complete|"
                     "complete-bipartite|cycle|path|hypercube")
        ->required();
    sgen->add_option("--a", gen.a);
    sgen->add_option("--b", gen.b);
    sgen->add_option("--c", gen.c);
    sgen->add_option("--p", gen.p);
    sgen->add_option("--q", gen.q);
    sgen->add_option("--n", gen.n);
    sgen->add_option("--m", gen.m);
    sgen->add_option("--r", gen.r_list, "comma-separated copy counts");
    sgen->add_option("--in", gen.in_path, "input graph for transforms");
    sgen->add_option("--out", gen.out_path, "edge-list output path (default stdout)");
    sgen->add_option("--labels-out", gen.labels_path, "role-label sidecar path");

    std::string in_path, out_path, method = "auto", graph_path, coloring_path;
    auto* scolor = app.add_subcommand("color", "color a graph with a constructive method");
    scolor->add_option("--in", in_path)->required();
    scolor->add_option("--method", method, "auto|s-formula|m-formula|bipartite|maxdeg5|smalldiff|vizing");
    scolor->add_option("--out", out_path);

    auto* sverify = app.add_subcommand("verify", "check a coloring file against a graph");
    sverify->add_option("--graph", graph_path)->required();
    sverify->add_option("--coloring", coloring_path)->required();
    sverify->add_option("--out", out_path);

    int t_min = 0, t_max = 0, wc_cap = 0, decide_t = 0, max_n = 6;
    long long budget = cdt::kDefaultNodeBudget;
    bool surjective = false;
    auto* sexact = app.add_subcommand("exact", "exact search for minimum cyclic deficiency");
    sexact->add_option("--in", in_path)->required();
    sexact->add_option("--t-min", t_min);
    sexact->add_option("--t-max", t_max);
    sexact->add_option("--budget", budget);
    sexact->add_option("--wc", wc_cap, "report the largest feasible palette up to this cap");
    sexact->add_option("--decide-t", decide_t, "decide a single palette size");
    sexact->add_flag("--surjective", surjective, "require all colors to appear");
    sexact->add_option("--out", out_path);

    auto* sbounds = app.add_subcommand("bounds", "evaluate every applicable closed-form bound");
    sbounds->add_option("--in", in_path)->required();
    sbounds->add_option("--coloring", coloring_path, "optional coloring for the conjecture verdict");
    sbounds->add_option("--out", out_path);

    auto* ssurvey = app.add_subcommand("survey", "exact minima over all small connected graphs");
    ssurvey->add_option("--max-n", max_n);
    ssurvey->add_option("--budget", budget);
    ssurvey->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
        if (sgen->parsed()) return run_gen(gen);
        if (scolor->parsed()) return run_color(in_path, method, out_path, pretty);
        if (sverify->parsed()) return run_verify(graph_path, coloring_path, out_path, pretty);
        if (sexact->parsed())
            return run_exact(in_path, t_min, t_max, budget, wc_cap, decide_t, surjective, out_path,
                             pretty);
        if (sbounds->parsed()) return run_bounds(in_path, coloring_path, out_path, pretty);
        if (ssurvey->parsed()) return run_survey(max_n, budget, out_path, pretty);
        return kExitInvalid;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalid;
    } catch (const cdt::claim_violation& e) {
        std::cerr << "claim violation: " << e.what() << "\n";
        return kExitClaim;
    } catch (const cdt::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
