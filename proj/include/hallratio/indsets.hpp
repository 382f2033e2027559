#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hallratio/errors.hpp"
#include "hallratio/graph.hpp"

namespace hallratio {

// Exhaustive independent-set oracles. All of them are meant for desk-scale
// graphs; callers hit SizeLimitError beyond the configured limit.

inline constexpr int kDefaultExhaustiveLimit = 30;

namespace indset_detail {

inline void check_limit(const Graph& g, int limit, const char* op) {
    if (g.vertex_count() > limit)
        throw SizeLimitError(std::string(op) + ": graph has " +
                             std::to_string(g.vertex_count()) + " vertices, limit " +
                             std::to_string(limit));
}

inline std::uint64_t closed_mask(const Graph& g, Vertex v) {
    return g.neighbor_mask(v) | (std::uint64_t(1) << v);
}

// Branch and bound for the independence number over vertices in
// degree-descending order.
struct AlphaSolver {
    std::vector<std::uint64_t> closed;  // closed neighborhoods, permuted order
    int best = 0;

    explicit AlphaSolver(const Graph& g) {
        const int n = g.vertex_count();
        std::vector<Vertex> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        closed.resize(n);
        for (int i = 0; i < n; ++i) {
            std::uint64_t m = std::uint64_t(1) << i;
            for (Vertex w : g.neighbors(order[i])) m |= std::uint64_t(1) << pos[w];
            closed[i] = m;
        }
    }

    void run(std::uint64_t cand, int size) {
        if (size > best) best = size;
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            int v = std::countr_zero(cand);
            run(cand & ~closed[v], size + 1);
            cand &= cand - 1;  // exclude v
        }
    }

    int solve() {
        std::uint64_t all =
            closed.size() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << closed.size()) - 1;
        run(all, 0);
        return best;
    }
};

}  // namespace indset_detail

inline int independence_number(const Graph& g, int limit = kDefaultExhaustiveLimit) {
    indset_detail::check_limit(g, limit, "independence_number");
    if (g.vertex_count() == 0) return 0;
    indset_detail::AlphaSolver s(g);
    return s.solve();
}

// Calls f(mask, size) once for every independent set of g, the empty set
// included. Sets are grown by ascending vertex index, so each is seen once.
template <class F>
void for_each_independent_set(const Graph& g, F&& f, int limit = kDefaultExhaustiveLimit) {
    indset_detail::check_limit(g, limit, "for_each_independent_set");
    const int n = g.vertex_count();
    std::vector<std::uint64_t> closed(n);
    for (int v = 0; v < n; ++v) closed[v] = indset_detail::closed_mask(g, v);

    // explicit stack of (candidates-still-addable, current set, size)
    struct Frame {
        std::uint64_t cand, cur;
        int size;
    };
    std::vector<Frame> stack;
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    stack.push_back({all, 0, 0});
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        f(fr.cur, fr.size);
        std::uint64_t c = fr.cand;
        while (c) {
            int v = std::countr_zero(c);
            c &= c - 1;
            stack.push_back({c & ~closed[v], fr.cur | (std::uint64_t(1) << v), fr.size + 1});
        }
    }
}

// Calls f(mask) for every independent set of maximum cardinality.
template <class F>
void for_each_maximum_independent_set(const Graph& g, F&& f,
                                      int limit = kDefaultExhaustiveLimit) {
    indset_detail::check_limit(g, limit, "for_each_maximum_independent_set");
    const int n = g.vertex_count();
    const int alpha = independence_number(g, limit);
    std::vector<std::uint64_t> closed(n);
    for (int v = 0; v < n; ++v) closed[v] = indset_detail::closed_mask(g, v);

    struct Frame {
        std::uint64_t cand, cur;
        int size;
    };
    std::vector<Frame> stack;
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    stack.push_back({all, 0, 0});
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.size == alpha) {
            f(fr.cur);
            continue;
        }
        if (fr.size + std::popcount(fr.cand) < alpha) continue;
        std::uint64_t c = fr.cand;
        while (c) {
            int v = std::countr_zero(c);
            c &= c - 1;
            stack.push_back({c & ~closed[v], fr.cur | (std::uint64_t(1) << v), fr.size + 1});
        }
    }
}

inline VertexSet set_from_mask(std::uint64_t mask) {
    VertexSet s;
    while (mask) {
        s.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

inline std::uint64_t mask_from_set(const VertexSet& s) {
    std::uint64_t m = 0;
    for (Vertex v : s) m |= std::uint64_t(1) << v;
    return m;
}

// All maximum independent sets in lexicographic order of their vertex lists.
inline std::vector<VertexSet> maximum_independent_sets(const Graph& g,
                                                       int limit = kDefaultExhaustiveLimit) {
    std::vector<VertexSet> out;
    for_each_maximum_independent_set(g, [&](std::uint64_t m) { out.push_back(set_from_mask(m)); },
                                     limit);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_maximal_independent_set(const Graph& g, std::uint64_t mask) {
    std::uint64_t covered = mask;
    std::uint64_t m = mask;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        covered |= g.neighbor_mask(v);
    }
    const int n = g.vertex_count();
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    return covered == all;
}

// Calls f(mask, size) for every inclusion-maximal independent set.
template <class F>
void for_each_maximal_independent_set(const Graph& g, F&& f,
                                      int limit = kDefaultExhaustiveLimit) {
    std::vector<std::uint64_t> nbr = g.neighbor_masks();
    for_each_independent_set(
        g,
        [&](std::uint64_t mask, int size) {
            std::uint64_t covered = mask;
            std::uint64_t m = mask;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                covered |= nbr[v];
            }
            const int n = g.vertex_count();
            std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
            if (covered == all) f(mask, size);
        },
        limit);
}

inline std::vector<VertexSet> maximal_independent_sets(const Graph& g,
                                                       int limit = kDefaultExhaustiveLimit) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, [&](std::uint64_t m, int) { out.push_back(set_from_mask(m)); },
                                     limit);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hallratio
