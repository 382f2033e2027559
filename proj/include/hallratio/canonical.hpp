#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hallratio/pattern.hpp"

namespace hallratio {

// Canonical byte form of a rooted pattern: two patterns map to the same form
// iff there is an isomorphism between them fixing the root vertex (or the
// root edge as an unordered pair) -- layers are distance classes, so any such
// isomorphism preserves them automatically.
//
// Colour refinement plus backtracking over the remaining cells. Vertices with
// identical neighbourhoods are interchangeable, so only one representative
// per neighbourhood is branched on; that keeps the search tiny on the
// pendant-heavy patterns this is used for.

namespace canon_detail {

struct Refiner {
    int n;
    const std::vector<std::uint64_t>& adj;

    // refine colors to a stable partition; colors are 0..k-1
    void refine(std::vector<int>& color) const {
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (;;) {
            for (int v = 0; v < n; ++v) {
                auto& s = sigs[v].first;
                s.clear();
                s.push_back(color[v]);
                std::uint64_t m = adj[v];
                while (m) {
                    int w = std::countr_zero(m);
                    m &= m - 1;
                    s.push_back(color[w]);
                }
                std::sort(s.begin() + 1, s.end());
                sigs[v].second = v;
            }
            std::vector<int> order(n);
            for (int v = 0; v < n; ++v) order[v] = v;
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return sigs[a].first < sigs[b].first;
            });
            std::vector<int> next(n);
            int classes = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && sigs[order[i]].first != sigs[order[i - 1]].first) ++classes;
                next[order[i]] = classes;
            }
            bool changed = false;
            for (int v = 0; v < n && !changed; ++v) changed = next[v] != color[v];
            color = std::move(next);
            if (!changed) return;
        }
    }

    // smallest non-singleton color class, if any
    int branch_cell(const std::vector<int>& color, std::vector<int>& cell) const {
        cell.clear();
        int target = -1;
        std::vector<int> count(n, 0);
        for (int v = 0; v < n; ++v) ++count[color[v]];
        for (int c = 0; c < n; ++c)
            if (count[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) return -1;
        for (int v = 0; v < n; ++v)
            if (color[v] == target) cell.push_back(v);
        return target;
    }

    std::string encode(const std::vector<int>& color) const {
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v) perm[color[v]] = v;  // discrete coloring
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[perm[i]] = i;
        std::string bytes((n * (n - 1) / 2 + 7) / 8, '\0');
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                if (adj[perm[j]] >> perm[i] & 1) bytes[bit >> 3] |= char(1 << (bit & 7));
                ++bit;
            }
        return bytes;
    }

    void search(std::vector<int> color, std::string& best, bool& have) {
        refine(color);
        std::vector<int> cell;
        if (branch_cell(color, cell) < 0) {
            std::string enc = encode(color);
            if (!have || enc < best) {
                best = std::move(enc);
                have = true;
            }
            return;
        }
        // branch on one representative per identical neighbourhood
        std::vector<std::uint64_t> seen;
        for (int v : cell) {
            if (std::find(seen.begin(), seen.end(), adj[v]) != seen.end()) continue;
            seen.push_back(adj[v]);
            std::vector<int> next(color);
            for (int w = 0; w < n; ++w)
                if (next[w] > next[v] || (w != v && next[w] == next[v])) ++next[w];
            // v keeps its color, everyone else shifts up: v is individualized
            search(std::move(next), best, have);
        }
    }
};

}  // namespace canon_detail

inline std::string canonical_pattern_form(const Pattern& p) {
    const int n = p.graph.vertex_count();
    std::vector<std::uint64_t> adj = p.graph.neighbor_masks();
    canon_detail::Refiner ref{n, adj};

    // initial colors: roots first, then by layer
    std::vector<int> color(n);
    auto lo = p.layer_of();
    for (int v = 0; v < n; ++v) color[v] = 1 + lo[v];
    color[p.root_u] = 0;
    if (p.edge_rooted) color[p.root_v] = 0;

    std::string best;
    bool have = false;
    ref.search(std::move(color), best, have);

    // prefix with the shape data so strings from different layer profiles
    // cannot collide
    std::string head;
    head.push_back(static_cast<char>(n));
    head.push_back(p.edge_rooted ? 1 : 0);
    head.push_back(static_cast<char>(p.depth));
    for (const auto& layer : p.layers) head.push_back(static_cast<char>(layer.size()));
    head.push_back('|');
    return head + best;
}

}  // namespace hallratio
