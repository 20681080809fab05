#include "cdt/instances.hpp"

#include <algorithm>
#include <set>

#include "cdt/errors.hpp"

namespace cdt {

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) throw invalid_input("empty range");
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return x % bound;
}

namespace {

Graph greedy_capped(Rng& rng, int n, int cap,
                    std::vector<std::pair<int, int>> pool, int target_edges) {
    rng.shuffle(pool);
    std::vector<int> deg(static_cast<size_t>(n), 0);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : pool) {
        if (static_cast<int>(edges.size()) >= target_edges) break;
        if (deg[static_cast<size_t>(u)] >= cap || deg[static_cast<size_t>(v)] >= cap) continue;
        edges.emplace_back(u, v);
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
    }
    return Graph(n, std::move(edges));
}

} // namespace

Graph random_graph_max_deg(uint64_t seed, int n, int cap, int target_edges) {
    if (n < 1 || cap < 0) throw invalid_input("bad parameters");
    Rng rng(seed);
    std::vector<std::pair<int, int>> pool;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pool.emplace_back(i, j);
    return greedy_capped(rng, n, cap, std::move(pool), target_edges);
}

Graph random_bipartite_max_deg(uint64_t seed, int n1, int n2, int cap, int target_edges) {
    if (n1 < 1 || n2 < 1 || cap < 0) throw invalid_input("bad parameters");
    Rng rng(seed);
    std::vector<std::pair<int, int>> pool;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) pool.emplace_back(i, n1 + j);
    return greedy_capped(rng, n1 + n2, cap, std::move(pool), target_edges);
}

Multigraph random_regular_multigraph(uint64_t seed, int n, int degree) {
    if (n < 1 || degree < 0 || (1LL * n * degree) % 2 != 0)
        throw invalid_input("n * degree must be even");
    Rng rng(seed);
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < degree; ++i) stubs.push_back(v);
    rng.shuffle(stubs);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);
    return Multigraph(n, std::move(edges));
}

namespace {

// Random pairing of half-edge stubs, then loops and parallels are swapped
// away pair by pair.
std::vector<std::pair<int, int>> simple_regular_edges(Rng& rng, int n, int d) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);
    rng.shuffle(stubs);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    auto count_of = [&](std::pair<int, int> e) {
        int c = 0;
        for (const auto& f : edges) c += f == e;
        return c;
    };
    auto defective = [&](size_t i) {
        return edges[i].first == edges[i].second || count_of(edges[i]) > 1;
    };
    for (int rounds = 0; rounds < 20000; ++rounds) {
        size_t bad = edges.size();
        for (size_t i = 0; i < edges.size(); ++i)
            if (defective(i)) {
                bad = i;
                break;
            }
        if (bad == edges.size()) return edges;
        bool fixed = false;
        for (int tries = 0; tries < 200 && !fixed; ++tries) {
            size_t j = static_cast<size_t>(rng.below(edges.size()));
            if (j == bad) continue;
            auto [u, v] = edges[bad];
            auto [x, y] = edges[j];
            std::pair<int, int> e1{std::min(u, x), std::max(u, x)};
            std::pair<int, int> e2{std::min(v, y), std::max(v, y)};
            if (e1.first == e1.second || e2.first == e2.second || e1 == e2) continue;
            if (count_of(e1) > 0 || count_of(e2) > 0) continue;
            edges[bad] = e1;
            edges[j] = e2;
            fixed = true;
        }
        if (!fixed) break;
    }
    throw invalid_input("could not realize a simple regular graph");
}

} // namespace

Graph random_near_regular(uint64_t seed, int n, int d, int deletions) {
    if (n < d + 1 || d < 1 || (1LL * n * d) % 2 != 0)
        throw invalid_input("bad near-regular parameters");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    if (d == n - 1) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    } else if (d == n - 2) {
        // complement of a random perfect matching (n is even here)
        std::vector<int> order(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
        rng.shuffle(order);
        std::vector<int> mate(static_cast<size_t>(n));
        for (int i = 0; i < n; i += 2) {
            mate[static_cast<size_t>(order[static_cast<size_t>(i)])] = order[static_cast<size_t>(i + 1)];
            mate[static_cast<size_t>(order[static_cast<size_t>(i + 1)])] = order[static_cast<size_t>(i)];
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (mate[static_cast<size_t>(i)] != j) edges.emplace_back(i, j);
    } else {
        edges = simple_regular_edges(rng, n, d);
    }

    // remove edges while both endpoints keep degree > d-2
    std::vector<int> deg(static_cast<size_t>(n), d);
    std::vector<int> order(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) order[i] = static_cast<int>(i);
    rng.shuffle(order);
    std::vector<bool> dropped(edges.size(), false);
    int removed = 0;
    for (int id : order) {
        if (removed >= deletions) break;
        auto [u, v] = edges[static_cast<size_t>(id)];
        if (deg[static_cast<size_t>(u)] > d - 2 && deg[static_cast<size_t>(v)] > d - 2) {
            dropped[static_cast<size_t>(id)] = true;
            --deg[static_cast<size_t>(u)];
            --deg[static_cast<size_t>(v)];
            ++removed;
        }
    }
    std::vector<std::pair<int, int>> kept;
    for (size_t i = 0; i < edges.size(); ++i)
        if (!dropped[i]) kept.push_back(edges[i]);
    return Graph(n, std::move(kept));
}

Graph random_tree(uint64_t seed, int n) {
    if (n < 1) throw invalid_input("tree needs n >= 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    Rng rng(seed);
    std::vector<int> code(static_cast<size_t>(n - 2));
    for (auto& c : code) c = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int c : code) ++deg[static_cast<size_t>(c)];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, c);
        if (--deg[static_cast<size_t>(c)] == 1) leaves.insert(c);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

} // namespace cdt
