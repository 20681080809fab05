#ifndef CDT_INSTANCES_HPP
#define CDT_INSTANCES_HPP

#include <cstdint>
#include <random>

#include "cdt/graph.hpp"

namespace cdt {

// Deterministic RNG for instance generation.  All draws go through
// rejection sampling on the raw engine output, so results are identical
// across platforms for a fixed seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // uniform in [0, bound)
    uint64_t below(uint64_t bound);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<size_t>(below(i))]);
    }

private:
    std::mt19937_64 eng_;
};

// Random simple graph with max degree <= cap: shuffled vertex pairs added
// greedily while degrees stay below the cap, up to target_edges.
Graph random_graph_max_deg(uint64_t seed, int n, int cap, int target_edges);

// Random bipartite graph on parts of size n1, n2 with max degree <= cap.
Graph random_bipartite_max_deg(uint64_t seed, int n1, int n2, int cap, int target_edges);

// Random multigraph with every degree equal to `degree` (even), loops and
// parallels allowed: a random pairing of half-edge stubs.
Multigraph random_regular_multigraph(uint64_t seed, int n, int degree);

// Random simple graph with all degrees in [d-2, d]: a random d-regular
// simple graph with `deletions` edges removed where both endpoints stay
// above d-2.  Requires n*d even.
Graph random_near_regular(uint64_t seed, int n, int d, int deletions);

// Uniform random labeled tree on n vertices via a random code sequence.
Graph random_tree(uint64_t seed, int n);

} // namespace cdt

#endif
