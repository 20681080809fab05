#include "cdt/coloring.hpp"

#include <algorithm>

#include "cdt/errors.hpp"

namespace cdt {

int EdgeColoring::max_color_used() const {
    int m = 0;
    for (int c : color) m = std::max(m, c);
    return m;
}

namespace {

std::vector<int> checked_sorted(const std::vector<int>& s, int t) {
    if (t < 1) throw invalid_input("palette size must be positive");
    if (s.empty()) throw invalid_input("empty set");
    std::vector<int> v(s);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.front() < 1 || v.back() > t) throw invalid_input("set element outside 1..t");
    return v;
}

} // namespace

int max_circular_gap(const std::vector<int>& s, int t) {
    auto v = checked_sorted(s, t);
    int best = 0;
    for (size_t i = 0; i + 1 < v.size(); ++i)
        best = std::max(best, v[i + 1] - v[i] - 1);
    // wrap-around gap between the largest and the smallest element
    best = std::max(best, v.front() + t - v.back() - 1);
    return best;
}

int deficiency_mod_t(const std::vector<int>& s, int t) {
    auto v = checked_sorted(s, t);
    // A minimal covering circular arc omits exactly the largest gap.
    return t - static_cast<int>(v.size()) - max_circular_gap(v, t);
}

bool is_cyclic_interval(const std::vector<int>& s, int t) { return deficiency_mod_t(s, t) == 0; }

bool is_near_cyclic(const std::vector<int>& s, int t) { return deficiency_mod_t(s, t) <= 1; }

std::vector<int> palette(const Graph& g, const EdgeColoring& c, int v) {
    std::vector<int> s;
    for (int id : g.incident(v)) s.push_back(c.color[static_cast<size_t>(id)]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool verify_proper(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.color.size()) != g.edge_count())
        throw invalid_input("coloring size mismatch");
    for (int col : c.color)
        if (col < 1 || col > c.t) throw invalid_input("uncolored edge or color out of range");
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                if (c.color[static_cast<size_t>(inc[i])] == c.color[static_cast<size_t>(inc[j])])
                    return false;
    }
    return true;
}

DeficiencyReport cyclic_deficiency_report(const Graph& g, const EdgeColoring& c) {
    if (!verify_proper(g, c)) throw invalid_input("coloring is not proper");
    DeficiencyReport r;
    r.t = c.t;
    const int n = g.vertex_count();
    r.per_vertex.assign(static_cast<size_t>(n), 0);
    r.is_interval.assign(static_cast<size_t>(n), true);
    r.is_cyclic_interval.assign(static_cast<size_t>(n), true);
    for (int v = 0; v < n; ++v) {
        auto s = palette(g, c, v);
        if (s.empty()) continue;
        int def = deficiency_mod_t(s, c.t);
        r.per_vertex[static_cast<size_t>(v)] = def;
        r.total += def;
        r.is_cyclic_interval[static_cast<size_t>(v)] = (def == 0);
        r.is_interval[static_cast<size_t>(v)] =
            (s.back() - s.front() + 1 == static_cast<int>(s.size()));
    }
    return r;
}

DeficiencyReport interval_deficiency_report(const Graph& g, const EdgeColoring& c) {
    if (!verify_proper(g, c)) throw invalid_input("coloring is not proper");
    DeficiencyReport r;
    r.t = c.t;
    const int n = g.vertex_count();
    r.per_vertex.assign(static_cast<size_t>(n), 0);
    r.is_interval.assign(static_cast<size_t>(n), true);
    r.is_cyclic_interval.assign(static_cast<size_t>(n), true);
    for (int v = 0; v < n; ++v) {
        auto s = palette(g, c, v);
        if (s.empty()) continue;
        int def = (s.back() - s.front() + 1) - static_cast<int>(s.size());
        r.per_vertex[static_cast<size_t>(v)] = def;
        r.total += def;
        r.is_interval[static_cast<size_t>(v)] = (def == 0);
        r.is_cyclic_interval[static_cast<size_t>(v)] = (deficiency_mod_t(s, c.t) == 0);
    }
    return r;
}

} // namespace cdt
