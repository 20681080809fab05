#ifndef CDT_BOUNDS_HPP
#define CDT_BOUNDS_HPP

#include <string>
#include <vector>

#include "cdt/coloring.hpp"
#include "cdt/graph.hpp"

namespace cdt {

// Exact rational with normalized sign and gcd; enough range for every
// closed-form bound evaluated here.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {} // NOLINT: implicit by design
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }

    std::string str() const;
};

// Lower bound on the cyclic deficiency of hat(g):
// (|E(g)|-1) / (4 (diam(g)+2)) - Delta(g) + 1.  g connected, >= 2 vertices.
Rational lb_hat(const Graph& g);

// Lower bound on the cyclic deficiency of tilde(tree): |F| - M - 2.
long long lb_tilde(const Graph& tree);

// pq - p - 2q - 2 for p >= 4, q >= 3; cross-checked against
// lb_tilde(gen_hertz(p,q) minus its last vertex).
long long hertz_def_value(int p, int q);

// Lower bound for the plane-based family, r sorted non-increasing:
// (sum_{i=n+2}^{n^2+n+1} r_i - 9 sum_{i=1}^{n+1} r_i + 9) / 10.
Rational lb_erd(int n, const std::vector<int>& r);

// sum over vertices with 2 <= d <= Delta-1 of (Delta - d).
long long ub_trivial(const Graph& g);

// Bipartite refinement, Delta >= 5 required:
// even Delta: sum over 3 <= d <= Delta-3 of (Delta-2-d);
// odd Delta:  sum over 3 <= d <= Delta-2 of (Delta-1-d).
long long ub_bipartite(const Graph& g);

// 1 + 2 diam (Delta - 1) for a connected bipartite graph.
long long wc_upper(const Graph& g);

struct Bipdiff4 {
    bool applicable = false;
    int r = 0;
    bool hypothesis = false; // |V_{2r-4}| (r-5) <= (r-1) (|V_{2r-2}|+|V_{2r-1}|+|V_{2r}|)
};

// Degrees must lie in {2r-4..2r} for some r >= 5 with the graph bipartite;
// the smallest such r is used.
Bipdiff4 bipdiff4_hypothesis(const Graph& g);

// Verdict of total <= |V(g)|.
bool conjecture_check(const Graph& g, const DeficiencyReport& report);

// One evaluated entry per bound that applies to g (plus the conjecture
// verdict when a report is supplied).
struct BoundEntry {
    std::string name;
    bool applicable = false;
    std::string value;   // exact integer or "p/q"; empty when suppressed
    std::string comment;
};

std::vector<BoundEntry> bound_report(const Graph& g, const DeficiencyReport* report = nullptr);

} // namespace cdt

#endif
