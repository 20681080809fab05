#ifndef CDT_COLORERS_HPP
#define CDT_COLORERS_HPP

#include <vector>

#include "cdt/coloring.hpp"
#include "cdt/graph.hpp"

namespace cdt {

// Edge-disjoint 2-regular spanning subgraphs partitioning the edge multiset
// of a host multigraph (loops count 2 toward factor degree).
struct FactorDecomposition {
    std::vector<std::vector<int>> factors; // edge ids per factor
};

// Zero-deficiency coloring of gen_S(a,b,c) with t = max(a+b+c, 4).
// S_{1,1,1} gets a plain interval 4-coloring.
EdgeColoring color_S(int a, int b, int c);

// Zero-deficiency coloring of gen_M(a,b,c) with t = a+b+c+1.
EdgeColoring color_M(int a, int b, int c);

// Decomposes a 2r-regular multigraph into r 2-factors: Euler orientation,
// then r perfect matchings extracted from the out/in bipartite auxiliary.
FactorDecomposition petersen_factorize(const Multigraph& mg);

// K-edge-coloring by fan rotation and two-color path inversion.  Requires
// max_degree(g) <= K and the vertices of degree exactly K pairwise
// nonadjacent (vacuous when K > max_degree).  Edges with no degree-K
// endpoint are inserted first, each fan centered so that all its vertices
// keep a free color.
EdgeColoring fan_edge_coloring(const Graph& g, int palette_size);

// Proper coloring with at most Delta+1 colors; t is the number of colors
// actually used.
EdgeColoring vizing_coloring(const Graph& g);

// Proper coloring with exactly Delta colors; requires no two adjacent
// vertices of maximum degree (throws invalid_input otherwise).
EdgeColoring class1_coloring(const Graph& g);

// Deficiency-bounded coloring of a bipartite graph: double the graph, pad
// with loops to even regularity, 2-factorize, give factor i the color pair
// {2i-1, 2i}, restrict.  t = Delta for even Delta, Delta+1 for odd.
EdgeColoring bipartite_bound_coloring(const Graph& g);

// Coloring of a graph with max degree <= 5 and total cyclic deficiency at
// most |V|: lift a matching inside the degree-5 class to color 6, then pick
// the best color permutation subject to the palette-count inequalities.
EdgeColoring maxdeg5_coloring(const Graph& g);

// Coloring of a graph with max-min degree gap <= 2 and total cyclic
// deficiency at most |V|: peel three matchings so the rest is (k-1)-edge-
// colorable and the peeled part is a union of paths and even cycles colored
// k, k+1.
EdgeColoring smalldiff_coloring(const Graph& g);

} // namespace cdt

#endif
