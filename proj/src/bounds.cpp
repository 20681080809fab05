#include "cdt/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "cdt/errors.hpp"
#include "cdt/families.hpp"

namespace cdt {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw invalid_input("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw invalid_input("division by zero");
    return Rational(num * o.den, den * o.num);
}
bool Rational::operator<(const Rational& o) const { return num * o.den < o.num * den; }

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational lb_hat(const Graph& g) {
    if (g.vertex_count() < 2) throw invalid_input("need at least two vertices");
    int diam = diameter(g); // throws "disconnected" as needed
    return Rational(g.edge_count() - 1, 4LL * (diam + 2)) - Rational(g.max_degree()) + Rational(1);
}

long long lb_tilde(const Graph& tree) {
    TreeMetrics tm = tree_metrics(tree); // throws on non-tree
    return static_cast<long long>(tm.leaves.size()) - tm.m_value - 2;
}

long long hertz_def_value(int p, int q) {
    if (p < 4 || q < 3) throw invalid_input("requires p >= 4 and q >= 3");
    long long value = 1LL * p * q - p - 2LL * q - 2;
    Graph h = gen_hertz(p, q);
    Graph t = remove_vertex(h, h.vertex_count() - 1); // drop the top vertex d
    if (lb_tilde(t) != value) throw claim_violation("tree bound disagrees with closed form");
    return value;
}

Rational lb_erd(int n, const std::vector<int>& r) {
    if (n < 2) throw invalid_input("order must be at least 2");
    long long count = 1LL * n * n + n + 1;
    if (static_cast<long long>(r.size()) != count) throw invalid_input("r must have n^2+n+1 entries");
    long long head = 0, tail = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        if (r[i] < 1) throw invalid_input("r entries must be positive");
        if (i + 1 < r.size() && r[i] < r[i + 1]) throw invalid_input("r must be sorted non-increasing");
        if (static_cast<long long>(i) < n + 1) head += r[i];
        else tail += r[i];
    }
    return Rational(tail - 9 * head + 9, 10);
}

long long ub_trivial(const Graph& g) {
    const int delta = g.max_degree();
    long long sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d >= 2 && d <= delta - 1) sum += delta - d;
    }
    return sum;
}

long long ub_bipartite(const Graph& g) {
    if (!bipartition(g).has_value()) throw invalid_input("input graph is not bipartite");
    const int delta = g.max_degree();
    if (delta < 5) throw invalid_input("requires maximum degree at least 5");
    long long sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (delta % 2 == 0) {
            if (d >= 3 && d <= delta - 3) sum += delta - 2 - d;
        } else {
            if (d >= 3 && d <= delta - 2) sum += delta - 1 - d;
        }
    }
    return sum;
}

long long wc_upper(const Graph& g) {
    if (!bipartition(g).has_value()) throw invalid_input("input graph is not bipartite");
    return 1 + 2LL * diameter(g) * (g.max_degree() - 1);
}

Bipdiff4 bipdiff4_hypothesis(const Graph& g) {
    Bipdiff4 out;
    if (!bipartition(g).has_value() || g.edge_count() == 0) return out;
    const int delta = g.max_degree(), mindeg = g.min_degree();
    // smallest r >= 5 with all degrees inside {2r-4..2r}
    int r = std::max(5, (delta + 1) / 2);
    if (2 * r - 4 > mindeg) return out;
    out.applicable = true;
    out.r = r;
    long long low = static_cast<long long>(g.vertices_of_degree(2 * r - 4).size());
    long long high = static_cast<long long>(g.vertices_of_degree(2 * r - 2).size()) +
                     static_cast<long long>(g.vertices_of_degree(2 * r - 1).size()) +
                     static_cast<long long>(g.vertices_of_degree(2 * r).size());
    out.hypothesis = low * (r - 5) <= (r - 1) * high;
    return out;
}

bool conjecture_check(const Graph& g, const DeficiencyReport& report) {
    return report.total <= g.vertex_count();
}

std::vector<BoundEntry> bound_report(const Graph& g, const DeficiencyReport* report) {
    std::vector<BoundEntry> entries;

    {
        BoundEntry e{"trivial_upper", true, std::to_string(ub_trivial(g)),
                     "upper bound on the cyclic deficiency of the input"};
        entries.push_back(e);
    }
    bool bip = bipartition(g).has_value();
    {
        BoundEntry e{"bipartite_upper", false, "",
                     "parity-refined upper bound; needs bipartite, max degree >= 5"};
        if (bip && g.max_degree() >= 5) {
            e.applicable = true;
            e.value = std::to_string(ub_bipartite(g));
        }
        entries.push_back(e);
    }
    {
        BoundEntry e{"wc_upper", false, "",
                     "upper bound on the maximum cyclic palette size; needs connected bipartite"};
        if (bip && is_connected(g) && g.vertex_count() >= 1) {
            e.applicable = true;
            e.value = std::to_string(wc_upper(g));
        }
        entries.push_back(e);
    }
    {
        BoundEntry e{"hat_lower", false, "",
                     "lower bound on the cyclic deficiency of the apex-subdivision of the input"};
        if (g.vertex_count() >= 2 && is_connected(g)) {
            e.applicable = true;
            e.value = lb_hat(g).str();
        }
        entries.push_back(e);
    }
    {
        BoundEntry e{"tilde_lower", false, "",
                     "lower bound on the cyclic deficiency of the leaf-apex closure of the input tree"};
        if (is_tree(g) && g.vertex_count() >= 2) {
            e.applicable = true;
            e.value = std::to_string(lb_tilde(g));
        }
        entries.push_back(e);
    }
    {
        Bipdiff4 b = bipdiff4_hypothesis(g);
        BoundEntry e{"narrow_degree_hypothesis", b.applicable, "",
                     "degree-window hypothesis implying the vertex-count bound"};
        if (b.applicable)
            e.value = std::string(b.hypothesis ? "true" : "false") + " (r=" + std::to_string(b.r) + ")";
        entries.push_back(e);
    }
    {
        BoundEntry e{"vertex_count_conjecture", false, "",
                     "verdict: supplied coloring total <= vertex count"};
        if (report) {
            e.applicable = true;
            e.value = conjecture_check(g, *report) ? "pass" : "fail";
        }
        entries.push_back(e);
    }
    return entries;
}

} // namespace cdt
