#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hallratio/errors.hpp"
#include "hallratio/graph.hpp"
#include "hallratio/indsets.hpp"
#include "hallratio/rational.hpp"

namespace hallratio {

enum class Family { All, Maximal, Maximum };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::All: return "all";
        case Family::Maximal: return "maximal";
        default: return "maximum";
    }
}

inline Family family_from_string(const std::string& s) {
    if (s == "all") return Family::All;
    if (s == "maximal") return Family::Maximal;
    if (s == "maximum") return Family::Maximum;
    throw ParseError("unknown independent-set family '" + s + "'");
}

// Positive rational fugacity, or infinity (uniform over maximum sets).
struct Fugacity {
    bool infinite = false;
    Rational value = 1;

    static Fugacity inf() { return {true, 0}; }
    static Fugacity of(const Rational& v) {
        if (v <= 0) throw PreconditionError("fugacity must be positive");
        return {false, v};
    }
};

inline std::string to_string(const Fugacity& f) {
    return f.infinite ? "inf" : to_string(f.value);
}

// Per-vertex occupancy data of the hard-core distribution over a family of
// independent sets.
struct OccupancyReport {
    Family family = Family::All;
    Fugacity fugacity;
    std::vector<Rational> p_in;     // P(v in I)
    std::vector<Rational> exp_nbr;  // E|N(v) cap I|
    Rational partition = 0;         // sum of lambda^|I|; set count when uniform
};

namespace hardcore_detail {

// per-size counts: total[s] and per-vertex member counts cnt[v][s]
struct SizeCounts {
    std::vector<unsigned long long> total;
    std::vector<std::vector<unsigned long long>> per_vertex;
    int max_size = -1;

    explicit SizeCounts(int n) : total(n + 1, 0), per_vertex(n, std::vector<unsigned long long>(n + 1, 0)) {}

    void record(std::uint64_t mask, int size) {
        ++total[size];
        max_size = std::max(max_size, size);
        while (mask) {
            int v = std::countr_zero(mask);
            mask &= mask - 1;
            ++per_vertex[v][size];
        }
    }
};

template <class Enumerate>
OccupancyReport report_from_counts(const Graph& g, Family family, const Fugacity& lam,
                                   Enumerate&& enumerate) {
    const int n = g.vertex_count();
    SizeCounts counts(n);
    enumerate(counts);

    OccupancyReport rep;
    rep.family = family;
    rep.fugacity = lam;
    rep.p_in.assign(n, Rational(0));
    rep.exp_nbr.assign(n, Rational(0));

    Rational z = 0;
    std::vector<Rational> lam_pow(counts.total.size());
    if (lam.infinite) {
        // uniform over the family (all member sets have the same size here)
        for (size_t s = 0; s < counts.total.size(); ++s) lam_pow[s] = 1;
    } else {
        Rational p = 1;
        for (size_t s = 0; s < counts.total.size(); ++s) {
            lam_pow[s] = p;
            p *= lam.value;
        }
    }
    for (size_t s = 0; s < counts.total.size(); ++s)
        if (counts.total[s]) z += Rational(counts.total[s]) * lam_pow[s];
    if (z == 0) throw PreconditionError("empty independent-set family");
    rep.partition = z;

    for (int v = 0; v < n; ++v) {
        Rational num = 0;
        for (size_t s = 0; s < counts.total.size(); ++s)
            if (counts.per_vertex[v][s]) num += Rational(counts.per_vertex[v][s]) * lam_pow[s];
        rep.p_in[v] = num / z;
    }
    for (int v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) rep.exp_nbr[v] += rep.p_in[u];
    return rep;
}

}  // namespace hardcore_detail

// Exact occupancy probabilities by enumeration of the chosen family.
inline OccupancyReport occupancy(const Graph& g, Family family, const Fugacity& lam,
                                 int limit = kDefaultExhaustiveLimit) {
    if (lam.infinite && family != Family::Maximum)
        throw PreconditionError("infinite fugacity only defined for the maximum family");
    using hardcore_detail::report_from_counts;
    switch (family) {
        case Family::All:
            return report_from_counts(g, family, lam, [&](auto& counts) {
                for_each_independent_set(
                    g, [&](std::uint64_t m, int s) { counts.record(m, s); }, limit);
            });
        case Family::Maximal:
            return report_from_counts(g, family, lam, [&](auto& counts) {
                for_each_maximal_independent_set(
                    g, [&](std::uint64_t m, int s) { counts.record(m, s); }, limit);
            });
        default:
            return report_from_counts(g, family, lam, [&](auto& counts) {
                for_each_maximum_independent_set(
                    g, [&](std::uint64_t m) { counts.record(m, std::popcount(m)); }, limit);
            });
    }
}

// Closed forms for the star K_{1,d} under the hard-core distribution over all
// independent sets: P(root in I) and E|N(root) cap I|.
inline std::pair<Rational, Rational> star_occupancy_closed_form(int d, const Rational& lam) {
    if (d < 0) throw PreconditionError("negative star degree");
    if (lam <= 0) throw PreconditionError("fugacity must be positive");
    Rational one_plus = 1 + lam;
    Rational pow_d = 1, pow_d1 = 1;  // (1+lam)^d and (1+lam)^{d-1}
    for (int i = 0; i < d; ++i) pow_d *= one_plus;
    for (int i = 0; i + 1 < d; ++i) pow_d1 *= one_plus;
    Rational denom = lam + pow_d;
    Rational p_root = lam / denom;
    Rational exp_leaves = d == 0 ? Rational(0) : Rational(d) * lam * pow_d1 / denom;
    return {p_root, exp_leaves};
}

// lhs = a P(v in I) + b E|N(v) cap I|; the greedy hypothesis asks lhs >= 1.
inline std::pair<bool, Rational> verify_local_inequality(const Graph& g, Vertex v,
                                                         const Rational& a, const Rational& b,
                                                         Family family, const Fugacity& lam,
                                                         int limit = kDefaultExhaustiveLimit) {
    OccupancyReport rep = occupancy(g, family, lam, limit);
    Rational lhs = a * rep.p_in[v] + b * rep.exp_nbr[v];
    return {lhs >= 1, lhs};
}

// ---------------------------------------------------------------------------
// Spatial Markov property verification.
// ---------------------------------------------------------------------------

struct MarkovReport {
    Rational max_discrepancy = 0;  // total-variation distance, exact
    int realizations = 0;          // distinct outcomes of I \ X
};

// Conditioned on I \ X = J, the law of I cap X must be the hard-core law on
// an induced subgraph: H[X \ N(J)] for the full family, and the maximal sets
// of H[X \ (N(J) u P2_X(U))] for the maximal family (which needs
// |N(v) cap X| <= 1 for every v outside X).
inline MarkovReport verify_spatial_markov(const Graph& g, const VertexSet& x, Family family,
                                          const Fugacity& lam,
                                          int limit = kDefaultExhaustiveLimit) {
    if (family == Family::Maximum)
        throw PreconditionError("spatial Markov verification covers the all/maximal families");
    if (lam.infinite) throw PreconditionError("finite fugacity required");
    const int n = g.vertex_count();
    std::uint64_t xmask = mask_from_set(x);

    if (family == Family::Maximal) {
        for (int v = 0; v < n; ++v) {
            if (xmask >> v & 1) continue;
            int in_x = 0;
            for (Vertex u : g.neighbors(v)) in_x += (xmask >> u & 1) ? 1 : 0;
            if (in_x > 1)
                throw PreconditionError("vertex " + std::to_string(v) +
                                        " has more than one neighbour in X");
        }
    }

    // bucket the family by the outcome of I \ X
    std::map<std::uint64_t, std::map<std::uint64_t, Rational>> buckets;
    auto weigh = [&](std::uint64_t m, int) {
        std::uint64_t j = m & ~xmask, k = m & xmask;
        Rational w = 1;
        for (int i = 0; i < std::popcount(k); ++i) w *= lam.value;
        buckets[j][k] += w;  // lambda^{|J|} cancels inside a bucket
    };
    if (family == Family::All)
        for_each_independent_set(g, weigh, limit);
    else
        for_each_maximal_independent_set(g, weigh, limit);

    std::vector<std::uint64_t> nbr = g.neighbor_masks();
    MarkovReport out;
    out.realizations = static_cast<int>(buckets.size());
    for (auto& [j, cond] : buckets) {
        // normalize the observed conditional law
        Rational z = 0;
        for (auto& [k, w] : cond) z += w;
        // the predicted support
        std::uint64_t nj = 0;
        std::uint64_t jm = j;
        while (jm) {
            int v = std::countr_zero(jm);
            jm &= jm - 1;
            nj |= nbr[v];
        }
        std::uint64_t wmask = xmask & ~nj;
        if (family == Family::Maximal) {
            // uncovered outside vertices force their unique X-neighbour into
            // I, so the X-vertices two steps away through X are excluded
            std::uint64_t covered = j | nj;
            std::uint64_t p2 = 0;
            for (int u = 0; u < n; ++u) {
                if ((xmask >> u & 1) || (covered >> u & 1)) continue;
                std::uint64_t xn = nbr[u] & xmask;  // unique by precondition
                while (xn) {
                    int xp = std::countr_zero(xn);
                    xn &= xn - 1;
                    p2 |= nbr[xp] & xmask;
                }
            }
            wmask &= ~p2;
        }
        VertexSet keep = set_from_mask(wmask);
        Graph sub = g.induced(keep);

        std::map<std::uint64_t, Rational> predicted;
        Rational zp = 0;
        auto record = [&](std::uint64_t m, int s) {
            std::uint64_t back = 0;
            std::uint64_t mm = m;
            while (mm) {
                int i = std::countr_zero(mm);
                mm &= mm - 1;
                back |= std::uint64_t(1) << keep[i];
            }
            Rational w = 1;
            for (int i = 0; i < s; ++i) w *= lam.value;
            predicted[back] = w;
            zp += w;
        };
        if (family == Family::All)
            for_each_independent_set(sub, record, limit);
        else
            for_each_maximal_independent_set(sub, record, limit);

        // exact total-variation distance between the two conditional laws
        Rational tv = 0;
        for (auto& [k, w] : cond) {
            auto it = predicted.find(k);
            Rational q = it == predicted.end() ? Rational(0) : it->second / zp;
            Rational diff = w / z - q;
            tv += diff < 0 ? -diff : diff;
        }
        for (auto& [k, w] : predicted) {
            if (cond.find(k) == cond.end()) tv += w / zp;
        }
        tv /= 2;
        if (tv > out.max_discrepancy) out.max_discrepancy = tv;
    }
    return out;
}

// Numeric check of the monotonicity fact used by the girth-7 analysis: for
// j >= 2 the map lam -> (1 + lam^{1-j})^{1 + lam^{j-1}} is non-increasing,
// and at lam = 4, j = 2 it equals 3125/1024 exactly.
inline bool fact1_grid_check(int lam_lo = 4, int lam_hi = 100, int j_lo = 2, int j_hi = 6) {
    Rational exact = Rational(3125, 1024);  // (5/4)^5
    {
        Rational v = 1;
        for (int i = 0; i < 5; ++i) v *= Rational(5, 4);
        if (v != exact) return false;
    }
    const double bound = 3125.0 / 1024.0 + 1e-12;
    for (int j = j_lo; j <= j_hi; ++j) {
        double prev = 1e300;
        for (int lam = lam_lo; lam <= lam_hi; ++lam) {
            double t = std::pow(static_cast<double>(lam), j - 1);
            double val = (1.0 + t) * std::log1p(1.0 / t);  // log of the function
            double f = std::exp(val);
            if (f > bound || f > prev + 1e-12) return false;
            prev = f;
        }
    }
    return true;
}

}  // namespace hallratio
