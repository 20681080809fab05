#ifndef CDT_SOLVER_HPP
#define CDT_SOLVER_HPP

#include <optional>
#include <vector>

#include "cdt/coloring.hpp"
#include "cdt/graph.hpp"

namespace cdt {

inline constexpr long long kDefaultNodeBudget = 100000000;

enum class SolverStatus { colorable, optimum_found, exhausted_budget };

// Result of an exact search.  A witness, when present, is a proper coloring
// whose recomputed deficiency total equals best_total.  best_total = -1
// means no proper coloring was found in the range.
struct SolverResult {
    SolverStatus status = SolverStatus::optimum_found;
    long long best_total = -1;
    std::optional<EdgeColoring> witness;
    int t_used = 0;
    long long nodes_explored = 0;
};

struct SearchStats {
    long long nodes = 0;
    bool exhausted = false;
};

// Proper t-coloring where every vertex palette is a cyclic interval mod t,
// or nullopt.  Backtracking over edges in degree-descending vertex order
// with palette-completion pruning; the first edge is pinned to color 1.
// With `surjective`, every color 1..t must appear.  Requires Delta <= t
// and t <= 64.
std::optional<EdgeColoring> decide_cyclic_t(const Graph& g, int t, bool surjective = false,
                                            long long node_budget = kDefaultNodeBudget,
                                            SearchStats* stats = nullptr);

// Minimum total cyclic deficiency over proper t-colorings, t in
// [t_min, t_max].  Requires Delta <= t_min <= t_max <= 64.
SolverResult min_cyclic_deficiency(const Graph& g, int t_min, int t_max,
                                   long long node_budget = kDefaultNodeBudget);

// Largest t <= cap admitting a cyclic interval t-coloring that uses all t
// colors; 0 if none found (or the budget ran out).
int wc_max(const Graph& g, int cap, long long node_budget = kDefaultNodeBudget);

// One representative per isomorphism class of the connected graphs on
// exactly n labeled vertices (canonical form: minimal adjacency bitstring
// over all permutations).  n <= 6.
std::vector<Graph> gen_all_connected(int n);

} // namespace cdt

#endif
