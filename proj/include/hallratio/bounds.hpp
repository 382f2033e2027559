#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hallratio/errors.hpp"
#include "hallratio/graph.hpp"
#include "hallratio/rational.hpp"

namespace hallratio {

// Result of a closed-form bound calculator. Optimization-based bounds carry
// their optimizer; bounds with a rational closed form also carry it exactly.
struct BoundResult {
    double value = 0;
    std::optional<Rational> exact;
    std::optional<int> k;
    std::optional<double> lambda;  // nan-free; infinite flag below
    bool lambda_infinite = false;
    std::string source;
};

namespace bounds_detail {

// ((1+lam)^k + lam (1+lam) Delta) / (lam (1 + k lam))
inline double triangle_free_objective(int k, double lam, int delta) {
    double t = std::exp(k * std::log1p(lam));
    return (t + lam * (1.0 + lam) * delta) / (lam * (1.0 + k * lam));
}

// minimize over lam > 0 by a coarse bracket on log lam followed by ternary
// search; the objective is treated as unimodal inside the bracket
inline std::pair<double, double> minimize_lambda(int k, int delta, double tol) {
    const int grid = 64;
    const double lo = std::log(1e-4), hi = std::log(1e4);
    int best_i = 0;
    double best_v = 1e300;
    for (int i = 0; i < grid; ++i) {
        double x = lo + (hi - lo) * i / (grid - 1);
        double v = triangle_free_objective(k, std::exp(x), delta);
        if (v < best_v) {
            best_v = v;
            best_i = i;
        }
    }
    double a = lo + (hi - lo) * std::max(0, best_i - 1) / (grid - 1);
    double b = lo + (hi - lo) * std::min(grid - 1, best_i + 1) / (grid - 1);
    while (b - a > tol) {
        double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
        if (triangle_free_objective(k, std::exp(m1), delta) <=
            triangle_free_objective(k, std::exp(m2), delta))
            b = m2;
        else
            a = m1;
    }
    double lam = std::exp((a + b) / 2);
    return {triangle_free_objective(k, lam, delta), lam};
}

}  // namespace bounds_detail

// Upper bound on the fractional chromatic number of a triangle-free graph of
// maximum degree delta:  1 + min_k inf_lam ((1+lam)^k + lam(1+lam)delta) /
// (lam(1+k lam)). The k = 2 branch attains its infimum in the lam -> inf
// limit with value (delta+1)/2, reproducing the fractional Reed bound.
inline BoundResult triangle_free_chi_f(int delta, double tol = 1e-9) {
    if (delta < 1) throw PreconditionError("delta >= 1 required");
    if (tol <= 0) throw PreconditionError("tol > 0 required");
    BoundResult best;
    best.source = "triangle-free occupancy bound";
    best.k = 2;
    best.lambda_infinite = true;
    best.exact = Rational(delta + 3, 2);
    best.value = static_cast<double>(*best.exact);

    double ln = std::log(static_cast<double>(delta));
    int k_max = static_cast<int>(std::ceil(ln * ln)) + 4;
    for (int k = 3; k <= k_max; ++k) {
        auto [v, lam] = bounds_detail::minimize_lambda(k, delta, tol);
        if (1 + v < best.value) {
            best.value = 1 + v;
            best.exact.reset();
            best.k = k;
            best.lambda = lam;
            best.lambda_infinite = false;
        }
    }
    return best;
}

// Explicit corollary: 1 + (1 + 2/ln d) d / (ln d - 2 ln ln d).
inline double corollary_bound(int delta) {
    if (delta < 2) throw PreconditionError("delta >= 2 required");
    double ln = std::log(static_cast<double>(delta));
    return 1.0 + (1.0 + 2.0 / ln) * delta / (ln - 2.0 * std::log(ln));
}

// f(x) = 1 + min_k (2x + 2^{k-3})/k over k in {1..k_max}, exact rationals,
// ties towards the smaller k.
inline std::pair<Rational, int> girth7_f(long long x, int k_max = 64) {
    if (x < 0) throw PreconditionError("x >= 0 required");
    Rational best;
    int best_k = 0;
    Rational pw(1, 4);  // 2^{k-3} at k = 1
    for (int k = 1; k <= k_max; ++k) {
        Rational v = (Rational(2 * x) + pw) / k;
        if (best_k == 0 || v < best) {
            best = v;
            best_k = k;
        }
        pw *= 2;
    }
    return {1 + best, best_k};
}

// The remark's optimizer: k = round(4 + log2 x - log2 log2 x) for x >= 3.
inline int girth7_formula_k(long long x) {
    if (x < 3) throw PreconditionError("x >= 3 required");
    double l = std::log2(static_cast<double>(x));
    return static_cast<int>(std::llround(4.0 + l - std::log2(l)));
}

enum class ShearerVariant { TriangleFree, NoC3C5 };

// Shearer's independence recurrences. f(0..d_max) with
// f(d) = (1 + (d^2 - d) f(d-1)) / (d^2 + 1); the triangle-free variant
// starts from f(0) = 1 (the recurrence at d = 1 then gives 1/2), the
// C3/C5-free variant from f(0) = 0, f(1) = 4/7.
inline std::vector<Rational> shearer_recurrence(int d_max, ShearerVariant variant) {
    if (d_max < 0) throw PreconditionError("d_max >= 0 required");
    std::vector<Rational> f(d_max + 1);
    f[0] = variant == ShearerVariant::TriangleFree ? 1 : 0;
    for (int d = 1; d <= d_max; ++d) {
        if (d == 1 && variant == ShearerVariant::NoC3C5) {
            f[1] = Rational(4, 7);
            continue;
        }
        f[d] = (1 + Rational(d) * (d - 1) * f[d - 1]) / (Rational(d) * d + 1);
    }
    return f;
}

namespace bounds_detail {

// returns some cycle of length < g, empty when none exists
inline std::vector<Vertex> short_cycle(const Graph& g, int bound) {
    const int n = g.vertex_count();
    for (int src = 0; src < n; ++src) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::vector<Vertex> queue{src};
        dist[src] = 0;
        for (size_t h = 0; h < queue.size(); ++h) {
            Vertex u = queue[h];
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u] && dist[w] >= dist[u]) {
                    if (dist[u] + dist[w] + 1 < bound) {
                        std::vector<Vertex> a, b;
                        for (int p = u; p >= 0; p = parent[p]) a.push_back(p);
                        for (int p = w; p >= 0; p = parent[p]) b.push_back(p);
                        // join at the root; good enough for an error message
                        std::vector<Vertex> cyc(a.rbegin(), a.rend());
                        cyc.insert(cyc.end(), b.begin(), b.end() - 1);
                        return cyc;
                    }
                }
            }
        }
    }
    return {};
}

inline std::string cycle_string(const std::vector<Vertex>& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) s += std::to_string(c[i]) + (i + 1 < c.size() ? " " : "");
    return s + ")";
}

}  // namespace bounds_detail

// Independence lower bound sum f(deg v), minus n11/7 adjacent degree-1 pairs
// for the C3/C5-free variant.
inline Rational shearer_graph_lower_bound(const Graph& g, ShearerVariant variant) {
    if (variant == ShearerVariant::TriangleFree) {
        if (g.girth() < 4) {
            auto c = bounds_detail::short_cycle(g, 4);
            throw PreconditionError("graph contains a triangle " +
                                    bounds_detail::cycle_string(c));
        }
    } else {
        int gi = g.girth();
        if (gi == 3 || gi == 5) {
            auto c = bounds_detail::short_cycle(g, 6);
            throw PreconditionError("graph contains a short odd cycle " +
                                    bounds_detail::cycle_string(c));
        }
        // girth 4 is fine; a 5-cycle may coexist with girth 4, check directly
        if (gi == 4) {
            const int n = g.vertex_count();
            for (int v = 0; v < n; ++v) {
                // count closed walks of length 5 through v avoiding repeats:
                // desk-scale DFS
                std::vector<Vertex> path{v};
                std::function<bool(Vertex, int)> dfs = [&](Vertex u, int len) {
                    if (len == 4) return g.has_edge(u, v);
                    for (Vertex w : g.neighbors(u)) {
                        if (w == v && len + 1 < 5) continue;
                        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
                        path.push_back(w);
                        if (dfs(w, len + 1)) return true;
                        path.pop_back();
                    }
                    return false;
                };
                if (dfs(v, 0))
                    throw PreconditionError("graph contains a 5-cycle " +
                                            bounds_detail::cycle_string(path));
            }
        }
    }
    int d_max = g.max_degree();
    auto f = shearer_recurrence(d_max, variant);
    Rational total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) total += f[g.degree(v)];
    if (variant == ShearerVariant::NoC3C5) {
        int n11 = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            for (Vertex w : g.neighbors(v))
                if (w > v && g.degree(v) == 1 && g.degree(w) == 1) ++n11;
        total -= Rational(n11, 7);
    }
    return total;
}

// Lower bound on rho(d,infinity): 2/alpha* where alpha* is the sign change
// of   alpha(d ln2 - ln alpha) + (2-alpha)(d-1)ln(2-alpha)
//    + (alpha-1) d ln(1-alpha) - 2(d-1) ln2,
// which is positive for small alpha and negative towards 1. The inequality
// of the theorem holds strictly just above alpha*.
inline double bollobas_lower(int d, double tol = 1e-9) {
    if (d < 3) throw PreconditionError("d >= 3 required");
    if (tol <= 0) throw PreconditionError("tol > 0 required");
    auto h = [&](double a) {
        return a * (d * std::log(2.0) - std::log(a)) +
               (2.0 - a) * (d - 1) * std::log(2.0 - a) +
               (a - 1.0) * d * std::log(1.0 - a) - 2.0 * (d - 1) * std::log(2.0);
    };
    double lo = 0.5, hi = 1.0 - 1e-13;
    // walk lo down until h(lo) > 0
    while (h(lo) <= 0) {
        lo /= 2;
        if (lo < 1e-12) throw VerificationError("no sign change found");
    }
    if (h(hi) >= 0) throw VerificationError("no sign change found");
    while (hi - lo > tol) {
        double mid = (lo + hi) / 2;
        (h(mid) > 0 ? lo : hi) = mid;
    }
    return 2.0 / ((lo + hi) / 2);
}

}  // namespace hallratio
