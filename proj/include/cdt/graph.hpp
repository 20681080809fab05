#ifndef CDT_GRAPH_HPP
#define CDT_GRAPH_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cdt {

// Simple undirected graph.  Vertices are dense 0-based indices; edges are
// stored normalized (u < v), without loops or parallels, and the position of
// an edge in `edges` is its stable identity.  Labels are cosmetic.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int id) const { return edges_[static_cast<size_t>(id)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Edge ids incident to v, ascending.
    const std::vector<int>& incident(int v) const { return inc_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(inc_[static_cast<size_t>(v)].size()); }
    int max_degree() const;
    int min_degree() const;
    int other_end(int edge_id, int v) const;
    bool has_edge(int u, int v) const;

    std::vector<int> degree_sequence() const;
    // Vertices of degree exactly k, ascending.
    std::vector<int> vertices_of_degree(int k) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> inc_;
    std::vector<std::string> labels_;
};

// Multigraph: loops (u,u) and repeated pairs allowed.  A loop contributes 2
// to the degree of its vertex.  Edge identity is the index in `edges`.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int id) const { return edges_[static_cast<size_t>(id)]; }
    bool is_loop(int id) const {
        return edges_[static_cast<size_t>(id)].first == edges_[static_cast<size_t>(id)].second;
    }

    // Incident edge ids, ascending; a loop appears twice.
    const std::vector<int>& incident(int v) const { return inc_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(inc_[static_cast<size_t>(v)].size()); }
    int other_end(int edge_id, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> inc_;
};

// Subset of edge identities of a host graph; members are pairwise
// non-adjacent and never loops.
struct Matching {
    std::vector<int> edge_ids;

    bool covers(const Graph& g, int v) const;
    std::vector<bool> covered_vertices(const Graph& g) const;
};

// ---- operations ----

// Max over vertex pairs of the shortest-path length (all-pairs BFS).
// Throws invalid_input("disconnected") on disconnected input.
int diameter(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// 2-coloring of the vertices with every edge crossing, or nullopt if some
// component has an odd cycle.  The lowest-index vertex of each component goes
// to X; both sides are returned ascending.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

// Inclusion-maximal matching of the subgraph induced by `restrict_to`,
// built greedily over edges in ascending identity order.
Matching maximal_matching(const Graph& g, const std::vector<int>& restrict_to);

// Closed walk per component traversing each edge exactly once (Hierholzer).
// Components without edges are skipped.  Requires every degree even;
// otherwise throws invalid_input("non-eulerian").
std::vector<std::vector<int>> euler_circuit(const Multigraph& mg);

// Disjoint union of two copies of g plus an edge between the two copies of
// every vertex satisfying the predicate.  Vertex i of copy 2 is i + n; edge
// ids: copy-1 edges, then copy-2 edges, then join edges ascending by vertex.
Graph two_copy_join(const Graph& g, const std::function<bool(int)>& join_predicate);

// ---- small structural helpers ----

// Graph with the given edge ids removed (vertex set unchanged).  `id_map`
// gets, per surviving edge id in the result, the original edge id.
Graph remove_edges(const Graph& g, const std::vector<bool>& drop, std::vector<int>* id_map = nullptr);

// Graph with vertex v removed; vertices above v shift down by one.
Graph remove_vertex(const Graph& g, int v);

} // namespace cdt

#endif
