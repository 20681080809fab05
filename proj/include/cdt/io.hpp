#ifndef CDT_IO_HPP
#define CDT_IO_HPP

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdt/coloring.hpp"
#include "cdt/graph.hpp"

namespace cdt {

// Edge-list text format: '#' comment lines, one "n <vertex_count>" line,
// then one "e <u> <v>" per edge (0-based).  Written with LF endings and
// single spaces; multigraph files may repeat pairs and carry "e v v" loops.

Graph read_graph(std::istream& in);
Multigraph read_multigraph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
void write_multigraph(std::ostream& out, const Multigraph& g,
                      const std::vector<std::string>& comments = {});

Graph read_graph_file(const std::string& path);
Multigraph read_multigraph_file(const std::string& path);

// {"t":..., "edges":[{"u","v","color"}...] in edge order, "report":{...}}
nlohmann::json coloring_to_json(const Graph& g, const EdgeColoring& c,
                                const DeficiencyReport& report);

// Reads back a coloring produced by coloring_to_json for this graph.
EdgeColoring coloring_from_json(const Graph& g, const nlohmann::json& j);

} // namespace cdt

#endif
