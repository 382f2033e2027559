#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hallratio/errors.hpp"
#include "hallratio/graph.hpp"
#include "hallratio/hardcore.hpp"
#include "hallratio/indsets.hpp"
#include "hallratio/rational.hpp"

namespace hallratio {

// Weighted family of independent sets with per-vertex coverage accounting.
struct FractionalColouring {
    std::map<VertexSet, Rational> classes;
    std::vector<Rational> coverage;  // w[v]
    Rational total = 0;

    void add(const VertexSet& cls, const Rational& w) {
        if (w == 0) return;
        classes[cls] += w;
        total += w;
        for (Vertex v : cls) coverage[v] += w;
    }
};

struct GreedyParams {
    Family family = Family::Maximum;
    Fugacity lam = Fugacity::inf();
    std::vector<Rational> alpha_of;  // per-vertex
    std::vector<Rational> beta_of;
    bool check_hypothesis = true;  // verify a_v P + b_v E >= 1 each round
    int iteration_cap = 0;         // 0: defaults to n+1
};

// Occupancy coefficients behind the triangle-free bound: with these (a, b)
// the greedy hypothesis holds for the hard-core law over all independent
// sets of any triangle-free graph.
inline std::pair<Rational, Rational> coefficients_triangle_free(int k, const Rational& lam) {
    if (k < 1) throw PreconditionError("k >= 1 required");
    if (lam <= 0) throw PreconditionError("fugacity must be positive");
    Rational pow_k = 1;
    for (int i = 0; i < k; ++i) pow_k *= 1 + lam;
    Rational a = 1 + pow_k / (lam * (1 + Rational(k) * lam));
    Rational b = (1 + lam) / (1 + Rational(k) * lam);
    return {a, b};
}

// Coefficients behind the girth-7 bound (maximal sets at fugacity 4):
// ((2^{k-3} + k)/k, 2/k), valid for k >= 4.
inline std::pair<Rational, Rational> coefficients_girth7(int k) {
    if (k < 4) throw PreconditionError("girth-7 coefficients need k >= 4");
    Rational pw = 1;
    for (int i = 0; i < k - 3; ++i) pw *= 2;
    return {(pw + k) / Rational(k), Rational(2, k)};
}

// Smallest k >= 4 minimizing (2 deg + 2^{k-3})/k; the hypothesis check only
// covers k >= 4, and for every positive degree the unrestricted minimum is
// attained at such a k anyway.
inline int girth7_k_of_degree(int deg, int k_max = 64) {
    int best_k = 4;
    Rational best;
    Rational pw = 2;  // 2^{k-3} at k = 4
    for (int k = 4; k <= k_max; ++k) {
        Rational v = (Rational(2 * deg) + pw) / k;
        if (k == 4 || v < best) {
            best = v;
            best_k = k;
        }
        pw *= 2;
    }
    return best_k;
}

// Worst-case graphs for maximum-set distributions: G_1 = K2, G_2 = C5, and
// G_d hangs two fresh pendant vertices below every vertex of G_{d-2}.
inline Graph build_lembest(int d) {
    if (d < 1) throw PreconditionError("build_lembest needs d >= 1");
    if (d == 1) return Graph::complete(2);
    if (d == 2) return Graph::cycle(5);
    Graph prev = build_lembest(d - 2);
    int n = prev.vertex_count();
    Graph g(n + 2 * n);
    for (int v = 0; v < n; ++v)
        for (Vertex w : prev.neighbors(v))
            if (w > v) g.add_edge(v, w);
    for (int v = 0; v < n; ++v) {
        g.add_edge(v, n + 2 * v);
        g.add_edge(v, n + 2 * v + 1);
    }
    return g;
}

// The greedy fractional colouring algorithm. Each round draws the hard-core
// distribution over the chosen family of independent sets of the live
// subgraph H, pours weight
//     iota = min( min_v (1 - w[v]) / P(v in I_H),
//                 min_v (alpha_v + beta_v deg_G(v)) - total )
// proportionally onto the family, and removes saturated vertices. Vertices
// with P(v in I_H) = 0 simply wait for a later round.
inline FractionalColouring greedy_fractional(const Graph& g, const GreedyParams& params,
                                             int limit = kDefaultExhaustiveLimit) {
    const int n = g.vertex_count();
    if (static_cast<int>(params.alpha_of.size()) != n ||
        static_cast<int>(params.beta_of.size()) != n)
        throw PreconditionError("per-vertex alpha/beta required");

    FractionalColouring fc;
    fc.coverage.assign(n, Rational(0));
    std::vector<Vertex> live(n);
    for (int v = 0; v < n; ++v) live[v] = v;

    int rounds = 0;
    const int cap = params.iteration_cap > 0 ? params.iteration_cap : n + 1;
    while (!live.empty()) {
        if (++rounds > cap)
            throw VerificationError("greedy fractional colouring exceeded its iteration cap");
        Graph h = g.induced(live);
        OccupancyReport rep = occupancy(h, params.family, params.lam, limit);

        if (params.check_hypothesis) {
            for (size_t i = 0; i < live.size(); ++i) {
                Rational lhs = params.alpha_of[live[i]] * rep.p_in[i] +
                               params.beta_of[live[i]] * rep.exp_nbr[i];
                if (lhs < 1)
                    throw VerificationError(
                        "occupancy hypothesis fails at vertex " + std::to_string(live[i]) +
                        ": lhs = " + to_string(lhs));
            }
        }

        bool have_iota = false;
        Rational iota;
        for (size_t i = 0; i < live.size(); ++i) {
            if (rep.p_in[i] == 0) continue;  // waits for a later round
            Rational t = (1 - fc.coverage[live[i]]) / rep.p_in[i];
            if (!have_iota || t < iota) {
                iota = t;
                have_iota = true;
            }
        }
        for (size_t i = 0; i < live.size(); ++i) {
            Rational budget = params.alpha_of[live[i]] +
                              params.beta_of[live[i]] * g.degree(live[i]) - fc.total;
            if (!have_iota || budget < iota) {
                iota = budget;
                have_iota = true;
            }
        }
        if (!have_iota || iota <= 0)
            throw VerificationError("greedy fractional colouring cannot make progress");

        // distribute iota over the family, translated back to G's labels
        Rational z = rep.partition;
        auto pour = [&](std::uint64_t mask, int size) {
            Rational w;
            if (params.lam.infinite) {
                w = Rational(1) / z;
            } else {
                Rational p = 1;
                for (int i = 0; i < size; ++i) p *= params.lam.value;
                w = p / z;
            }
            VertexSet cls;
            std::uint64_t m = mask;
            while (m) {
                int i = std::countr_zero(m);
                m &= m - 1;
                cls.push_back(live[i]);
            }
            fc.add(cls, w * iota);
        };
        switch (params.family) {
            case Family::All:
                for_each_independent_set(h, pour, limit);
                break;
            case Family::Maximal:
                for_each_maximal_independent_set(h, pour, limit);
                break;
            default:
                for_each_maximum_independent_set(
                    h, [&](std::uint64_t m) { pour(m, std::popcount(m)); }, limit);
        }

        std::vector<Vertex> still;
        for (Vertex v : live)
            if (fc.coverage[v] < 1) still.push_back(v);
        if (still.size() == live.size())
            throw VerificationError("greedy round saturated no vertex");
        live = std::move(still);
    }
    return fc;
}

// Validation of a fractional colouring against a weight budget.
struct ColouringReport {
    bool valid = true;
    Rational total = 0;
    std::vector<std::string> violations;

    void flag(const std::string& v) {
        valid = false;
        violations.push_back(v);
    }
};

inline ColouringReport verify_fractional_colouring(const Graph& g,
                                                   const FractionalColouring& fc,
                                                   const Rational& budget) {
    ColouringReport rep;
    rep.total = fc.total;
    Rational sum = 0;
    for (const auto& [cls, w] : fc.classes) {
        if (w < 0) rep.flag("negative weight");
        if (w > 0 && !g.is_independent(cls)) rep.flag("class is not independent");
        sum += w;
    }
    if (sum != fc.total) rep.flag("total does not match class weights");
    for (int v = 0; v < g.vertex_count(); ++v) {
        Rational cov = 0;
        for (const auto& [cls, w] : fc.classes)
            if (std::binary_search(cls.begin(), cls.end(), v)) cov += w;
        if (cov < 1) rep.flag("vertex " + std::to_string(v) + " covered only " + to_string(cov));
        if (static_cast<size_t>(v) < fc.coverage.size() && cov != fc.coverage[v])
            rep.flag("coverage bookkeeping mismatch at vertex " + std::to_string(v));
    }
    if (fc.total > budget)
        rep.flag("total " + to_string(fc.total) + " exceeds budget " + to_string(budget));
    return rep;
}

// Local form: the classes meeting an induced subgraph H may weigh at most
// max over v in H of budget_of[v].
inline ColouringReport verify_fractional_colouring_local(
    const Graph& g, const FractionalColouring& fc, const std::vector<Rational>& budget_of,
    const std::vector<VertexSet>& subgraphs) {
    Rational global = 0;
    for (const auto& b : budget_of) global = std::max(global, b);
    ColouringReport rep = verify_fractional_colouring(g, fc, global);
    for (const auto& h : subgraphs) {
        Rational bound = 0;
        for (Vertex v : h) bound = std::max(bound, budget_of[v]);
        Rational meeting = 0;
        for (const auto& [cls, w] : fc.classes) {
            bool hits = false;
            for (Vertex v : h)
                if (std::binary_search(cls.begin(), cls.end(), v)) {
                    hits = true;
                    break;
                }
            if (hits) meeting += w;
        }
        if (meeting > bound)
            rep.flag("restriction to a subgraph weighs " + to_string(meeting) +
                     " > bound " + to_string(bound));
    }
    return rep;
}

}  // namespace hallratio
