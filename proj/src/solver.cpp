#include "cdt/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "cdt/errors.hpp"

namespace cdt {

namespace {

// Deficiency mod t of a nonempty palette bitmask (bit c-1 = color c).
int mask_deficiency(uint64_t mask, int t) {
    int size = std::popcount(mask);
    int first = std::countr_zero(mask);
    int last = 63 - std::countl_zero(mask);
    int maxgap = first + t - last - 1;
    int prev = first;
    uint64_t rest = mask & (mask - 1);
    while (rest) {
        int cur = std::countr_zero(rest);
        maxgap = std::max(maxgap, cur - prev - 1);
        prev = cur;
        rest &= rest - 1;
    }
    return t - size - maxgap;
}

struct Search {
    const Graph& g;
    int t;
    bool surjective;
    long long budget;
    long long nodes = 0;
    bool exhausted = false;

    std::vector<int> order;        // edge ids in branching order
    std::vector<uint64_t> pal;     // palette mask per vertex
    std::vector<int> remaining;    // uncolored incident edges per vertex
    std::vector<int> contrib;      // current lower-bound share per vertex
    long long lb = 0;              // sum of contrib
    uint64_t used_colors = 0;
    int unused_count;
    std::vector<int> color;        // per edge

    long long incumbent;           // prune when lb >= incumbent
    long long best = -1;
    std::vector<int> best_color;

    Search(const Graph& graph, int palette, bool surj, long long node_budget, long long cap)
        : g(graph), t(palette), surjective(surj), budget(node_budget),
          unused_count(palette), incumbent(cap) {
        pal.assign(static_cast<size_t>(g.vertex_count()), 0);
        remaining.resize(static_cast<size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v)
            remaining[static_cast<size_t>(v)] = g.degree(v);
        contrib.assign(static_cast<size_t>(g.vertex_count()), 0);
        color.assign(static_cast<size_t>(g.edge_count()), 0);

        // vertices ranked by degree descending, index ascending; edges sorted
        // by their higher-ranked endpoint, then the other, then identity
        std::vector<int> rank(static_cast<size_t>(g.vertex_count()));
        std::vector<int> verts(static_cast<size_t>(g.vertex_count()));
        std::iota(verts.begin(), verts.end(), 0);
        std::stable_sort(verts.begin(), verts.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        for (size_t i = 0; i < verts.size(); ++i) rank[static_cast<size_t>(verts[i])] = static_cast<int>(i);
        order.resize(static_cast<size_t>(g.edge_count()));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            auto [au, av] = g.edge(a);
            auto [bu, bv] = g.edge(b);
            int a1 = std::min(rank[static_cast<size_t>(au)], rank[static_cast<size_t>(av)]);
            int a2 = std::max(rank[static_cast<size_t>(au)], rank[static_cast<size_t>(av)]);
            int b1 = std::min(rank[static_cast<size_t>(bu)], rank[static_cast<size_t>(bv)]);
            int b2 = std::max(rank[static_cast<size_t>(bu)], rank[static_cast<size_t>(bv)]);
            if (a1 != b1) return a1 < b1;
            if (a2 != b2) return a2 < b2;
            return a < b;
        });
    }

    // lower-bound share of one endpoint: deficiency unreachable by the
    // remaining insertions (each added color lowers the deficiency by <= 1)
    int share(int v) const {
        if (pal[static_cast<size_t>(v)] == 0) return 0;
        int d = mask_deficiency(pal[static_cast<size_t>(v)], t);
        return std::max(0, d - remaining[static_cast<size_t>(v)]);
    }

    void place(int v, int c) {
        pal[static_cast<size_t>(v)] |= uint64_t(1) << (c - 1);
        --remaining[static_cast<size_t>(v)];
        lb -= contrib[static_cast<size_t>(v)];
        contrib[static_cast<size_t>(v)] = share(v);
        lb += contrib[static_cast<size_t>(v)];
    }

    void unplace(int v, int c) {
        pal[static_cast<size_t>(v)] &= ~(uint64_t(1) << (c - 1));
        ++remaining[static_cast<size_t>(v)];
        lb -= contrib[static_cast<size_t>(v)];
        contrib[static_cast<size_t>(v)] = share(v);
        lb += contrib[static_cast<size_t>(v)];
    }

    bool color_used_at(int v, int c) const {
        return (pal[static_cast<size_t>(v)] >> (c - 1)) & 1;
    }

    // returns true when the search should stop (incumbent can't improve)
    bool dfs(size_t pos) {
        if (exhausted) return true;
        if (pos == order.size()) {
            if (surjective && unused_count > 0) return false;
            if (lb < incumbent) {
                incumbent = lb;
                best = lb;
                best_color = color;
                if (incumbent == 0) return true;
            }
            return false;
        }
        if (surjective && unused_count > static_cast<int>(order.size() - pos)) return false;
        int e = order[pos];
        auto [u, v] = g.edge(e);
        int cmax = (pos == 0) ? 1 : t; // rotations are quotiented out
        for (int c = 1; c <= cmax; ++c) {
            if (color_used_at(u, c) || color_used_at(v, c)) continue;
            if (++nodes > budget) {
                exhausted = true;
                return true;
            }
            bool fresh = !((used_colors >> (c - 1)) & 1);
            place(u, c);
            place(v, c);
            color[static_cast<size_t>(e)] = c;
            if (fresh) {
                used_colors |= uint64_t(1) << (c - 1);
                --unused_count;
            }
            bool stop = false;
            if (lb < incumbent) stop = dfs(pos + 1);
            if (fresh) {
                used_colors &= ~(uint64_t(1) << (c - 1));
                ++unused_count;
            }
            color[static_cast<size_t>(e)] = 0;
            unplace(u, c);
            unplace(v, c);
            if (stop) return true;
        }
        return false;
    }
};

void validate_t(const Graph& g, int t) {
    if (t < 1 || t < g.max_degree()) throw invalid_input("palette smaller than maximum degree");
    if (t > 64) throw invalid_input("palette sizes above 64 are unsupported");
}

} // namespace

std::optional<EdgeColoring> decide_cyclic_t(const Graph& g, int t, bool surjective,
                                            long long node_budget, SearchStats* stats) {
    validate_t(g, t);
    Search s(g, t, surjective, node_budget, 1); // only totals below 1, i.e. zero
    s.dfs(0);
    if (stats) {
        stats->nodes = s.nodes;
        stats->exhausted = s.exhausted;
    }
    if (s.best == 0) {
        EdgeColoring c;
        c.t = t;
        c.color = s.best_color;
        return c;
    }
    return std::nullopt;
}

SolverResult min_cyclic_deficiency(const Graph& g, int t_min, int t_max, long long node_budget) {
    if (t_min > t_max) throw invalid_input("infeasible range");
    validate_t(g, t_min);
    validate_t(g, t_max);
    SolverResult res;
    long long left = node_budget;

    for (int t = t_min; t <= t_max; ++t) {
        SearchStats st;
        auto w = decide_cyclic_t(g, t, false, left, &st);
        res.nodes_explored += st.nodes;
        left -= st.nodes;
        if (w) {
            res.status = SolverStatus::colorable;
            res.best_total = 0;
            res.witness = std::move(w);
            res.t_used = t;
            return res;
        }
        if (st.exhausted || left <= 0) {
            res.status = SolverStatus::exhausted_budget;
            return res;
        }
    }

    long long incumbent = -1;
    for (int t = t_min; t <= t_max; ++t) {
        Search s(g, t, false, left, incumbent < 0 ? (1LL << 60) : incumbent);
        s.dfs(0);
        res.nodes_explored += s.nodes;
        left -= s.nodes;
        if (s.best >= 0 && (incumbent < 0 || s.best < incumbent)) {
            incumbent = s.best;
            EdgeColoring c;
            c.t = t;
            c.color = s.best_color;
            res.witness = c;
            res.t_used = t;
            res.best_total = incumbent;
        }
        if (s.exhausted || left <= 0) {
            res.status = SolverStatus::exhausted_budget;
            return res;
        }
    }
    res.status = SolverStatus::optimum_found;
    return res;
}

int wc_max(const Graph& g, int cap, long long node_budget) {
    long long left = node_budget;
    for (int t = std::min(cap, 64); t >= std::max(1, g.max_degree()); --t) {
        SearchStats st;
        auto w = decide_cyclic_t(g, t, true, left, &st);
        left -= st.nodes;
        if (w) return t;
        if (st.exhausted || left <= 0) return 0;
    }
    return 0;
}

std::vector<Graph> gen_all_connected(int n) {
    if (n < 1 || n > 6) throw invalid_input("enumeration supports n <= 6 only");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int m = static_cast<int>(pairs.size());

    // pair-index permutation tables for all vertex permutations
    std::vector<int> idx(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (int k = 0; k < m; ++k) {
        idx[static_cast<size_t>(pairs[static_cast<size_t>(k)].first) * static_cast<size_t>(n) +
            static_cast<size_t>(pairs[static_cast<size_t>(k)].second)] = k;
        idx[static_cast<size_t>(pairs[static_cast<size_t>(k)].second) * static_cast<size_t>(n) +
            static_cast<size_t>(pairs[static_cast<size_t>(k)].first)] = k;
    }
    std::vector<std::vector<int>> tables;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> tab(static_cast<size_t>(m));
        for (int k = 0; k < m; ++k)
            tab[static_cast<size_t>(k)] =
                idx[static_cast<size_t>(perm[static_cast<size_t>(pairs[static_cast<size_t>(k)].first)]) *
                        static_cast<size_t>(n) +
                    static_cast<size_t>(perm[static_cast<size_t>(pairs[static_cast<size_t>(k)].second)])];
        tables.push_back(std::move(tab));
    } while (std::next_permutation(perm.begin(), perm.end()));

    // compare adjacency bitstrings with pair (0,1) most significant
    auto key = [&](uint32_t mask) {
        uint32_t k = 0;
        for (int b = 0; b < m; ++b)
            if (mask & (uint32_t(1) << b)) k |= uint32_t(1) << (m - 1 - b);
        return k;
    };

    std::vector<Graph> out;
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
        // connectivity over the n vertices
        std::vector<int> comp(static_cast<size_t>(n), -1);
        std::vector<int> stack = {0};
        comp[0] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int k = 0; k < m; ++k) {
                if (!(mask & (uint32_t(1) << k))) continue;
                auto [a, b] = pairs[static_cast<size_t>(k)];
                int w = -1;
                if (a == v) w = b;
                else if (b == v) w = a;
                if (w >= 0 && comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = 0;
                    stack.push_back(w);
                }
            }
        }
        bool connected = true;
        for (int v = 0; v < n; ++v)
            if (comp[static_cast<size_t>(v)] < 0) connected = false;
        if (!connected) continue;

        bool canonical = true;
        uint32_t self = key(mask);
        for (const auto& tab : tables) {
            uint32_t pm = 0;
            for (int b = 0; b < m; ++b)
                if (mask & (uint32_t(1) << b)) pm |= uint32_t(1) << tab[static_cast<size_t>(b)];
            if (key(pm) < self) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;

        std::vector<std::pair<int, int>> edges;
        for (int k = 0; k < m; ++k)
            if (mask & (uint32_t(1) << k)) edges.push_back(pairs[static_cast<size_t>(k)]);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

} // namespace cdt
