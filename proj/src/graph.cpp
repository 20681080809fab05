#include "cdt/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "cdt/errors.hpp"

namespace cdt {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list,
             std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edge_list)), labels_(std::move(labels)) {
    if (n_ < 0) throw invalid_input("negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw invalid_input("label list size mismatch");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw invalid_input("edge endpoint out of range");
        if (u == v) throw invalid_input("loop not allowed in simple graph");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw invalid_input("duplicate edge");
    }
    inc_.assign(static_cast<size_t>(n_), {});
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        inc_[static_cast<size_t>(edges_[static_cast<size_t>(id)].first)].push_back(id);
        inc_[static_cast<size_t>(edges_[static_cast<size_t>(id)].second)].push_back(id);
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::other_end(int edge_id, int v) const {
    auto [a, b] = edges_[static_cast<size_t>(edge_id)];
    return a == v ? b : a;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    for (int id : incident(u))
        if (other_end(id, u) == v) return true;
    return false;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<size_t>(v)] = degree(v);
    return d;
}

std::vector<int> Graph::vertices_of_degree(int k) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == k) out.push_back(v);
    return out;
}

Multigraph::Multigraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : n_(vertex_count), edges_(std::move(edge_list)) {
    if (n_ < 0) throw invalid_input("negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw invalid_input("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    inc_.assign(static_cast<size_t>(n_), {});
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        auto [u, v] = edges_[static_cast<size_t>(id)];
        inc_[static_cast<size_t>(u)].push_back(id);
        inc_[static_cast<size_t>(v)].push_back(id); // loops land twice on purpose
    }
}

int Multigraph::other_end(int edge_id, int v) const {
    auto [a, b] = edges_[static_cast<size_t>(edge_id)];
    return a == v ? b : a;
}

bool Matching::covers(const Graph& g, int v) const {
    for (int id : edge_ids) {
        auto [a, b] = g.edge(id);
        if (a == v || b == v) return true;
    }
    return false;
}

std::vector<bool> Matching::covered_vertices(const Graph& g) const {
    std::vector<bool> cov(static_cast<size_t>(g.vertex_count()), false);
    for (int id : edge_ids) {
        auto [a, b] = g.edge(id);
        cov[static_cast<size_t>(a)] = cov[static_cast<size_t>(b)] = true;
    }
    return cov;
}

namespace {

std::vector<int> bfs_dist(const Graph& g, int src) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int id : g.incident(v)) {
            int w = g.other_end(id, v);
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_dist(g, 0);
    for (int d : dist)
        if (d < 0) return false;
    return true;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

int diameter(const Graph& g) {
    if (g.vertex_count() < 1) throw invalid_input("disconnected");
    int diam = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_dist(g, v);
        for (int d : dist) {
            if (d < 0) throw invalid_input("disconnected");
            diam = std::max(diam, d);
        }
    }
    return diam;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (side[static_cast<size_t>(root)] >= 0) continue;
        side[static_cast<size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : g.incident(v)) {
                int w = g.other_end(id, v);
                if (side[static_cast<size_t>(w)] < 0) {
                    side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(v)];
                    q.push(w);
                } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> x, y;
    for (int v = 0; v < n; ++v) (side[static_cast<size_t>(v)] == 0 ? x : y).push_back(v);
    return std::make_pair(std::move(x), std::move(y));
}

Matching maximal_matching(const Graph& g, const std::vector<int>& restrict_to) {
    std::vector<bool> in(static_cast<size_t>(g.vertex_count()), false);
    for (int v : restrict_to) {
        if (v < 0 || v >= g.vertex_count()) throw invalid_input("restrict vertex out of range");
        in[static_cast<size_t>(v)] = true;
    }
    std::vector<bool> used(static_cast<size_t>(g.vertex_count()), false);
    Matching m;
    for (int id = 0; id < g.edge_count(); ++id) {
        auto [u, v] = g.edge(id);
        if (in[static_cast<size_t>(u)] && in[static_cast<size_t>(v)] &&
            !used[static_cast<size_t>(u)] && !used[static_cast<size_t>(v)]) {
            m.edge_ids.push_back(id);
            used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = true;
        }
    }
    return m;
}

std::vector<std::vector<int>> euler_circuit(const Multigraph& mg) {
    const int n = mg.vertex_count();
    for (int v = 0; v < n; ++v)
        if (mg.degree(v) % 2 != 0) throw invalid_input("non-eulerian");

    std::vector<bool> used(static_cast<size_t>(mg.edge_count()), false);
    std::vector<size_t> ptr(static_cast<size_t>(n), 0);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<std::vector<int>> circuits;

    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)] || mg.degree(start) == 0) continue;
        // Hierholzer with an explicit stack; incident lists are ascending, so
        // the walk is deterministic.
        std::vector<int> vstack = {start};
        std::vector<int> estack; // edge taken to reach vstack[i+1]
        std::vector<int> circuit;
        while (!vstack.empty()) {
            int v = vstack.back();
            seen[static_cast<size_t>(v)] = true;
            auto& p = ptr[static_cast<size_t>(v)];
            const auto& inc = mg.incident(v);
            while (p < inc.size() && used[static_cast<size_t>(inc[p])]) ++p;
            if (p == inc.size()) {
                vstack.pop_back();
                if (!estack.empty()) {
                    circuit.push_back(estack.back());
                    estack.pop_back();
                }
            } else {
                int id = inc[p];
                used[static_cast<size_t>(id)] = true;
                vstack.push_back(mg.other_end(id, v));
                estack.push_back(id);
            }
        }
        std::reverse(circuit.begin(), circuit.end());
        circuits.push_back(std::move(circuit));
    }

    size_t total = 0;
    for (const auto& c : circuits) total += c.size();
    if (total != static_cast<size_t>(mg.edge_count()))
        throw claim_violation("euler circuit missed edges");
    return circuits;
}

Graph two_copy_join(const Graph& g, const std::function<bool(int)>& join_predicate) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(2 * g.edge_count()) + static_cast<size_t>(n));
    for (auto [u, v] : g.edges()) edges.emplace_back(u, v);
    for (auto [u, v] : g.edges()) edges.emplace_back(u + n, v + n);
    for (int v = 0; v < n; ++v)
        if (join_predicate(v)) edges.emplace_back(v, v + n);
    return Graph(2 * n, std::move(edges));
}

Graph remove_edges(const Graph& g, const std::vector<bool>& drop, std::vector<int>* id_map) {
    std::vector<std::pair<int, int>> edges;
    if (id_map) id_map->clear();
    for (int id = 0; id < g.edge_count(); ++id) {
        if (static_cast<size_t>(id) < drop.size() && drop[static_cast<size_t>(id)]) continue;
        edges.push_back(g.edge(id));
        if (id_map) id_map->push_back(id);
    }
    return Graph(g.vertex_count(), std::move(edges), g.labels());
}

Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw invalid_input("vertex out of range");
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    std::vector<std::string> labels;
    if (!g.labels().empty()) {
        for (int w = 0; w < g.vertex_count(); ++w)
            if (w != v) labels.push_back(g.labels()[static_cast<size_t>(w)]);
    }
    return Graph(g.vertex_count() - 1, std::move(edges), std::move(labels));
}

} // namespace cdt
