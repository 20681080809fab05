#ifndef CDT_FAMILIES_HPP
#define CDT_FAMILIES_HPP

#include <utility>
#include <vector>

#include "cdt/graph.hpp"

namespace cdt {

// Leaf set, best path score and the pair attaining it, for a tree.
struct TreeMetrics {
    std::vector<int> leaves;
    int m_value = 0;
    std::pair<int, int> best_pair{-1, -1};
};

// Incidence structure of a finite projective plane of order n:
// n^2+n+1 points (named 1..n^2+n+1) and as many lines.
struct ProjectivePlane {
    int order = 0;
    int point_count = 0;
    std::vector<std::vector<int>> lines; // each ascending, size order+1
};

// Double-fan gadget on hub u0 with side classes x, y, z and a 6-cycle
// u1 v1 u2 v2 u3 v3.  Vertex order: u0,u1,u2,u3,v1,v2,v3, x_1..x_a,
// y_1..y_b, z_1..z_c.  Edge order: the 6-cycle, then (u0 x_i, u1 x_i) per i,
// (u0 y_j, u2 y_j) per j, (u0 z_k, u3 z_k) per k.
Graph gen_S(int a, int b, int c);

// Triple-cover gadget: vertex order u0,u1,u2,u3, x_1..x_a, y_1..y_b,
// z_1..z_c; edge order (u0 x_i, u1 x_i, u2 x_i) per i, (u0 y_j, u2 y_j,
// u3 y_j) per j, (u0 z_k, u3 z_k, u1 z_k) per k.
Graph gen_M(int a, int b, int c);

// Three-layer gadget: a, b_1..b_p, c_(1,1)..c_(p,q) (row-major by i), d.
// Edge order: a-b_i, then b_i-c_(i,j), then c_(i,j)-d.
Graph gen_hertz(int p, int q);

// Every edge replaced by a path of length two.  Inserted vertex for edge id e
// is n + e; per original edge (u,v): edges (u,w_e), (v,w_e).
Graph subdivide(const Graph& g);

// subdivide(g) plus an apex (index n + |E|) joined to every inserted vertex.
Graph hat(const Graph& g);

// Tree plus an apex (index n) joined to every leaf.  Input must be a tree
// with at least 2 vertices.
Graph tilde(const Graph& tree);

// Path score LP over all vertex pairs: path edge count plus edges leaving
// the path; m_value is the maximum.
TreeMetrics tree_metrics(const Graph& tree);

// Homogeneous-coordinate plane over integers mod n; n must be prime
// (throws invalid_input("unsupported order") otherwise).
ProjectivePlane projective_plane(int n);

// Hub u (index 0), plane points 1..n^2+n+1, then r_i copies per line l_i.
// Edge order: all hub edges (i asc, j asc), then per line copy its point
// edges ascending.
Graph gen_erd(int n, const std::vector<int>& r);

Graph gen_complete(int n);
Graph gen_complete_bipartite(int m, int n);
Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_hypercube(int n);

} // namespace cdt

#endif
