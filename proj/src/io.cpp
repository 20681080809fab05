#include "cdt/io.hpp"

#include <fstream>
#include <sstream>

#include "cdt/errors.hpp"

namespace cdt {

namespace {

struct ParsedEdgeList {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
};

int parse_int(const std::string& tok) {
    if (tok.empty()) throw invalid_input("malformed edge-list line");
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw invalid_input("malformed edge-list line");
    }
    if (pos != tok.size()) throw invalid_input("malformed edge-list line");
    return value;
}

ParsedEdgeList parse_edge_list(std::istream& in) {
    ParsedEdgeList out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "n") {
            if (out.n >= 0) throw invalid_input("duplicate header line");
            std::string a;
            if (!(ls >> a)) throw invalid_input("malformed header line");
            out.n = parse_int(a);
            std::string extra;
            if (ls >> extra) throw invalid_input("trailing tokens on header line");
        } else if (tag == "e") {
            if (out.n < 0) throw invalid_input("edge before header line");
            std::string a, b;
            if (!(ls >> a >> b)) throw invalid_input("malformed edge line");
            std::string extra;
            if (ls >> extra) throw invalid_input("trailing tokens on edge line");
            out.edges.emplace_back(parse_int(a), parse_int(b));
        } else {
            throw invalid_input("unknown line tag '" + tag + "'");
        }
    }
    if (out.n < 0) throw invalid_input("missing header line");
    return out;
}

} // namespace

Graph read_graph(std::istream& in) {
    auto p = parse_edge_list(in);
    return Graph(p.n, std::move(p.edges));
}

Multigraph read_multigraph(std::istream& in) {
    auto p = parse_edge_list(in);
    return Multigraph(p.n, std::move(p.edges));
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

void write_multigraph(std::ostream& out, const Multigraph& g,
                      const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open '" + path + "'");
    return read_graph(in);
}

Multigraph read_multigraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open '" + path + "'");
    return read_multigraph(in);
}

nlohmann::json coloring_to_json(const Graph& g, const EdgeColoring& c,
                                const DeficiencyReport& report) {
    nlohmann::json edges = nlohmann::json::array();
    for (int id = 0; id < g.edge_count(); ++id) {
        auto [u, v] = g.edge(id);
        edges.push_back({{"u", u}, {"v", v}, {"color", c.color[static_cast<size_t>(id)]}});
    }
    nlohmann::json per = nlohmann::json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        per[std::to_string(v)] = report.per_vertex[static_cast<size_t>(v)];
    return nlohmann::json{{"t", c.t},
                          {"edges", edges},
                          {"report", {{"per_vertex", per}, {"total", report.total}}}};
}

EdgeColoring coloring_from_json(const Graph& g, const nlohmann::json& j) {
    EdgeColoring c;
    c.t = j.at("t").get<int>();
    const auto& edges = j.at("edges");
    if (static_cast<int>(edges.size()) != g.edge_count())
        throw invalid_input("coloring edge count mismatch");
    c.color.assign(static_cast<size_t>(g.edge_count()), 0);
    for (int id = 0; id < g.edge_count(); ++id) {
        const auto& e = edges[static_cast<size_t>(id)];
        int u = e.at("u").get<int>(), v = e.at("v").get<int>();
        auto [gu, gv] = g.edge(id);
        if (std::min(u, v) != gu || std::max(u, v) != gv)
            throw invalid_input("coloring edge order mismatch");
        c.color[static_cast<size_t>(id)] = e.at("color").get<int>();
    }
    return c;
}

} // namespace cdt
