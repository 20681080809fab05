#ifndef CDT_COLORING_HPP
#define CDT_COLORING_HPP

#include <cstdint>
#include <vector>

#include "cdt/graph.hpp"

namespace cdt {

// Edge coloring with palette 1..t.  color[id] is the color of edge id;
// 0 marks an uncolored edge.  Colors need not cover all of 1..t.
struct EdgeColoring {
    int t = 1;
    std::vector<int> color;

    int max_color_used() const;
};

// Per-vertex and total deficiency of one coloring, plus interval flags.
struct DeficiencyReport {
    int t = 1;
    std::vector<int> per_vertex;
    long long total = 0;
    std::vector<bool> is_interval;        // palette is a contiguous run
    std::vector<bool> is_cyclic_interval; // palette or its complement is one
};

// Largest count of consecutive values of {1..t}\s between circularly
// consecutive elements of s.  s must be a nonempty subset of {1..t}
// (throws invalid_input("empty set") otherwise).
int max_circular_gap(const std::vector<int>& s, int t);

// Minimum size of a set B with s union B a cyclic interval modulo t;
// computed as t - |s| - max_circular_gap(s, t).
int deficiency_mod_t(const std::vector<int>& s, int t);

bool is_cyclic_interval(const std::vector<int>& s, int t);
bool is_near_cyclic(const std::vector<int>& s, int t);

// Colors on edges incident to v, ascending and duplicate-free.
std::vector<int> palette(const Graph& g, const EdgeColoring& c, int v);

// True iff no two incident edges share a color.  Every edge must be colored
// with a color in 1..t.
bool verify_proper(const Graph& g, const EdgeColoring& c);

// Per-vertex deficiency modulo c.t of each palette, summed.  Requires a
// proper coloring.  Vertices of degree 0 report deficiency 0.
DeficiencyReport cyclic_deficiency_report(const Graph& g, const EdgeColoring& c);

// Non-cyclic comparison metric: per vertex, (max(S)-min(S)+1) - |S|.
DeficiencyReport interval_deficiency_report(const Graph& g, const EdgeColoring& c);

} // namespace cdt

#endif
