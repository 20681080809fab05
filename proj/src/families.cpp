#include "cdt/families.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

#include "cdt/errors.hpp"

namespace cdt {

Graph gen_S(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw invalid_input("S family parameters must be positive");
    const int u0 = 0, u1 = 1, u2 = 2, u3 = 3, v1 = 4, v2 = 5, v3 = 6;
    auto x = [&](int i) { return 7 + (i - 1); };
    auto y = [&](int j) { return 7 + a + (j - 1); };
    auto z = [&](int k) { return 7 + a + b + (k - 1); };
    std::vector<std::pair<int, int>> e = {{u1, v1}, {v1, u2}, {u2, v2},
                                          {v2, u3}, {u3, v3}, {v3, u1}};
    for (int i = 1; i <= a; ++i) {
        e.emplace_back(u0, x(i));
        e.emplace_back(u1, x(i));
    }
    for (int j = 1; j <= b; ++j) {
        e.emplace_back(u0, y(j));
        e.emplace_back(u2, y(j));
    }
    for (int k = 1; k <= c; ++k) {
        e.emplace_back(u0, z(k));
        e.emplace_back(u3, z(k));
    }
    std::vector<std::string> labels = {"u0", "u1", "u2", "u3", "v1", "v2", "v3"};
    for (int i = 1; i <= a; ++i) labels.push_back("x" + std::to_string(i));
    for (int j = 1; j <= b; ++j) labels.push_back("y" + std::to_string(j));
    for (int k = 1; k <= c; ++k) labels.push_back("z" + std::to_string(k));
    return Graph(7 + a + b + c, std::move(e), std::move(labels));
}

Graph gen_M(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw invalid_input("M family parameters must be positive");
    const int u0 = 0, u1 = 1, u2 = 2, u3 = 3;
    auto x = [&](int i) { return 4 + (i - 1); };
    auto y = [&](int j) { return 4 + a + (j - 1); };
    auto z = [&](int k) { return 4 + a + b + (k - 1); };
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= a; ++i) {
        e.emplace_back(u0, x(i));
        e.emplace_back(u1, x(i));
        e.emplace_back(u2, x(i));
    }
    for (int j = 1; j <= b; ++j) {
        e.emplace_back(u0, y(j));
        e.emplace_back(u2, y(j));
        e.emplace_back(u3, y(j));
    }
    for (int k = 1; k <= c; ++k) {
        e.emplace_back(u0, z(k));
        e.emplace_back(u3, z(k));
        e.emplace_back(u1, z(k));
    }
    std::vector<std::string> labels = {"u0", "u1", "u2", "u3"};
    for (int i = 1; i <= a; ++i) labels.push_back("x" + std::to_string(i));
    for (int j = 1; j <= b; ++j) labels.push_back("y" + std::to_string(j));
    for (int k = 1; k <= c; ++k) labels.push_back("z" + std::to_string(k));
    return Graph(4 + a + b + c, std::move(e), std::move(labels));
}

Graph gen_hertz(int p, int q) {
    if (p < 2 || q < 2) throw invalid_input("hertz parameters must be at least 2");
    const int a = 0;
    auto b = [&](int i) { return i; };
    auto c = [&](int i, int j) { return p + 1 + (i - 1) * q + (j - 1); };
    const int d = p + p * q + 1;
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= p; ++i) e.emplace_back(a, b(i));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j) e.emplace_back(b(i), c(i, j));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j) e.emplace_back(c(i, j), d);
    std::vector<std::string> labels = {"a"};
    for (int i = 1; i <= p; ++i) labels.push_back("b" + std::to_string(i));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j)
            labels.push_back("c" + std::to_string(i) + "_" + std::to_string(j));
    labels.push_back("d");
    return Graph(p * q + p + 2, std::move(e), std::move(labels));
}

Graph subdivide(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<size_t>(2 * g.edge_count()));
    for (int id = 0; id < g.edge_count(); ++id) {
        auto [u, v] = g.edge(id);
        e.emplace_back(u, n + id);
        e.emplace_back(v, n + id);
    }
    std::vector<std::string> labels;
    if (!g.labels().empty()) {
        labels = g.labels();
        for (int id = 0; id < g.edge_count(); ++id) {
            auto [u, v] = g.edge(id);
            labels.push_back("w" + std::to_string(u) + "_" + std::to_string(v));
        }
    }
    return Graph(n + g.edge_count(), std::move(e), std::move(labels));
}

Graph hat(const Graph& g) {
    if (g.edge_count() < 1) throw invalid_input("hat requires at least one edge");
    Graph s = subdivide(g);
    const int apex = s.vertex_count();
    std::vector<std::pair<int, int>> e(s.edges());
    for (int id = 0; id < g.edge_count(); ++id)
        e.emplace_back(g.vertex_count() + id, apex);
    std::vector<std::string> labels;
    if (!s.labels().empty()) {
        labels = s.labels();
        labels.push_back("u");
    }
    return Graph(apex + 1, std::move(e), std::move(labels));
}

Graph tilde(const Graph& tree) {
    if (tree.vertex_count() < 2 || !is_tree(tree)) throw invalid_input("input is not a tree");
    const int apex = tree.vertex_count();
    std::vector<std::pair<int, int>> e(tree.edges());
    for (int v = 0; v < tree.vertex_count(); ++v)
        if (tree.degree(v) == 1) e.emplace_back(v, apex);
    std::vector<std::string> labels;
    if (!tree.labels().empty()) {
        labels = tree.labels();
        labels.push_back("u");
    }
    return Graph(apex + 1, std::move(e), std::move(labels));
}

TreeMetrics tree_metrics(const Graph& tree) {
    if (!is_tree(tree)) throw invalid_input("input is not a tree");
    const int n = tree.vertex_count();
    TreeMetrics tm;
    for (int v = 0; v < n; ++v)
        if (tree.degree(v) == 1) tm.leaves.push_back(v);

    // LP(u,v) = sum of degrees along the path minus its edge count:
    // path edges are counted twice by the degree sum, side edges once.
    std::vector<int> parent(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) {
        std::fill(parent.begin(), parent.end(), -2);
        std::queue<int> q;
        parent[static_cast<size_t>(u)] = -1;
        q.push(u);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : tree.incident(v)) {
                int w = tree.other_end(id, v);
                if (parent[static_cast<size_t>(w)] == -2) {
                    parent[static_cast<size_t>(w)] = v;
                    q.push(w);
                }
            }
        }
        for (int v = u + 1; v < n; ++v) {
            int deg_sum = 0, len = 0;
            for (int w = v; w != -1; w = parent[static_cast<size_t>(w)]) {
                deg_sum += tree.degree(w);
                ++len;
            }
            int lp = deg_sum - (len - 1);
            if (lp > tm.m_value) {
                tm.m_value = lp;
                tm.best_pair = {u, v};
            }
        }
    }
    return tm;
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

ProjectivePlane projective_plane(int n) {
    if (!is_prime(n)) throw invalid_input("unsupported order");
    // Points and lines are classes of nonzero triples over Z/nZ up to scale;
    // canonical representatives (1,b,c), (0,1,c), (0,0,1) in that order.
    std::vector<std::array<int, 3>> reps;
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) reps.push_back({1, b, c});
    for (int c = 0; c < n; ++c) reps.push_back({0, 1, c});
    reps.push_back({0, 0, 1});

    ProjectivePlane pi;
    pi.order = n;
    pi.point_count = static_cast<int>(reps.size());
    for (const auto& line : reps) {
        std::vector<int> pts;
        for (int p = 0; p < pi.point_count; ++p) {
            const auto& pt = reps[static_cast<size_t>(p)];
            int dot = line[0] * pt[0] + line[1] * pt[1] + line[2] * pt[2];
            if (dot % n == 0) pts.push_back(p + 1);
        }
        if (static_cast<int>(pts.size()) != n + 1)
            throw claim_violation("projective line of wrong size");
        pi.lines.push_back(std::move(pts));
    }
    return pi;
}

Graph gen_erd(int n, const std::vector<int>& r) {
    ProjectivePlane pi = projective_plane(n);
    const int N = pi.point_count;
    if (static_cast<int>(r.size()) != N) throw invalid_input("r must have n^2+n+1 entries");
    for (int ri : r)
        if (ri < 1) throw invalid_input("r entries must be positive");

    std::vector<int> first_copy(static_cast<size_t>(N) + 1);
    first_copy[0] = 1 + N; // hub is 0, points occupy 1..N
    for (int i = 0; i < N; ++i)
        first_copy[static_cast<size_t>(i) + 1] = first_copy[static_cast<size_t>(i)] + r[static_cast<size_t>(i)];

    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < r[static_cast<size_t>(i)]; ++j)
            e.emplace_back(0, first_copy[static_cast<size_t>(i)] + j);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < r[static_cast<size_t>(i)]; ++j)
            for (int pt : pi.lines[static_cast<size_t>(i)])
                e.emplace_back(first_copy[static_cast<size_t>(i)] + j, pt);

    std::vector<std::string> labels = {"u"};
    for (int p = 1; p <= N; ++p) labels.push_back("p" + std::to_string(p));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < r[static_cast<size_t>(i)]; ++j)
            labels.push_back("v" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    return Graph(first_copy[static_cast<size_t>(N)], std::move(e), std::move(labels));
}

Graph gen_complete(int n) {
    if (n < 1) throw invalid_input("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph gen_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw invalid_input("complete bipartite graph needs m,n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
    return Graph(m + n, std::move(e));
}

Graph gen_cycle(int n) {
    if (n < 3) throw invalid_input("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

Graph gen_path(int n) {
    if (n < 1) throw invalid_input("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph gen_hypercube(int n) {
    if (n < 1 || n > 20) throw invalid_input("hypercube dimension out of range");
    const int size = 1 << n;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < size; ++v)
        for (int bit = 0; bit < n; ++bit) {
            int w = v ^ (1 << bit);
            if (v < w) e.emplace_back(v, w);
        }
    return Graph(size, std::move(e));
}

} // namespace cdt
