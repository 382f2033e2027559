#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hallratio/canonical.hpp"
#include "hallratio/constraint.hpp"
#include "hallratio/errors.hpp"
#include "hallratio/pattern.hpp"
#include "hallratio/treepatterns.hpp"

namespace hallratio {

// Exhaustive generation of the d-regular patterns of depth r and girth >= g,
// up to root-preserving isomorphism.
//
// Every such pattern contains a spanning skeleton in the corresponding tree
// family (pick one parent edge per vertex of the deepest layer and drop the
// remaining non-tree edges; roots keep their exact degree, all other vertices
// sit in the two deepest layers where only the upper bound d applies). The
// generator therefore walks, per skeleton, the DAG of edge-supersets: level k
// holds the isomorphism classes with k extra edges, children are produced by
// adding one legal edge, and duplicates are collapsed by canonical form.
// Adding an edge between vertices at current distance < g-1 would close a
// short cycle, so the dynamic distance check keeps every intermediate graph
// inside the family; in particular the walk only moves within valid patterns.

struct GirthBudget {
    long long max_patterns = 2'000'000;  // isomorphism classes across all skeletons
    int max_depth = 2;                   // beyond this only the acyclic regime is feasible
};

namespace girth_detail {

inline int masked_distance(const std::vector<std::uint64_t>& adj, int n, int s, int t) {
    if (s == t) return 0;
    std::vector<int> dist(n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        std::uint64_t m = adj[u];
        while (m) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (dist[w] >= 0) continue;
            dist[w] = dist[u] + 1;
            if (w == t) return dist[w];
            queue.push_back(w);
        }
    }
    return 1 << 20;
}

inline Graph graph_from_masks(const std::vector<std::uint64_t>& adj, int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        std::uint64_t m = adj[v];
        while (m) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (w > v) g.add_edge(v, w);
        }
    }
    return g;
}

struct SkeletonCtx {
    Pattern base;
    std::vector<std::uint64_t> adj;
    std::vector<int> deg;
    std::vector<std::pair<int, int>> cand;  // pairs that some pattern may use
    int n = 0, d = 0, g = 0;

    explicit SkeletonCtx(Pattern p, int d_, int g_) : base(std::move(p)), d(d_), g(g_) {
        n = base.graph.vertex_count();
        adj = base.graph.neighbor_masks();
        deg.resize(n);
        for (int v = 0; v < n; ++v) deg[v] = base.graph.degree(v);
        auto lo = base.layer_of();
        for (int x = 0; x < n; ++x) {
            if (lo[x] == 0) continue;  // roots keep their exact degree
            for (int y = x + 1; y < n; ++y) {
                if (lo[y] == 0) continue;
                if (adj[x] >> y & 1) continue;
                if (masked_distance(adj, n, x, y) >= g - 1) cand.emplace_back(x, y);
            }
        }
    }

    Pattern materialize(const std::vector<std::pair<int, int>>& extras) const {
        auto a = adj;
        for (auto [x, y] : extras) {
            a[x] |= std::uint64_t(1) << y;
            a[y] |= std::uint64_t(1) << x;
        }
        Pattern p;
        p.graph = graph_from_masks(a, n);
        p.edge_rooted = base.edge_rooted;
        p.root_u = base.root_u;
        p.root_v = base.root_v;
        p.depth = base.depth;
        p.layers = base.layers;
        return p;
    }
};

}  // namespace girth_detail

// Calls f(pattern) once per isomorphism class of P_r(d,g) / P'_r(d,g).
// Throws BudgetError when the class count exceeds the budget.
template <class PatternFn>
void scan_girth_patterns(int d, int g, int r, bool edge_rooted, PatternFn&& f,
                         const GirthBudget& budget = {}, int threads = 1) {
    using namespace girth_detail;
    if (g < 4) throw PreconditionError("girth patterns require g >= 4");
    if (d < 2) throw PreconditionError("girth patterns require d >= 2");
    if (r < 0) throw PreconditionError("negative depth");

    const bool acyclic = edge_rooted ? g >= 2 * r + 3 : g >= 2 * r + 2;
    if (!acyclic && r > budget.max_depth)
        throw BudgetError("girth pattern enumeration limited to depth <= " +
                          std::to_string(budget.max_depth));

    // skeletons: the full (unnormalized) acyclic family
    TreeBudget tree_budget;
    std::vector<Pattern> skeletons = edge_rooted
                                         ? enumerate_tree_patterns_edge(d, r, tree_budget)
                                         : enumerate_tree_patterns_vertex(d, r, tree_budget);
    if (acyclic) {
        // cycles cannot fit within the root's horizon: the family is the tree family
        for (auto& p : skeletons) f(p);
        return;
    }

    // whether a pattern determines its skeleton (single parent edge per
    // deepest-layer vertex, no optional edges into layer 1). If not, the same
    // class can be reached from different skeletons and needs global dedup.
    const bool skeleton_recoverable = r <= 1 || (edge_rooted ? g >= 6 : g >= 5);

    std::atomic<long long> classes{0};
    std::unordered_set<std::string> global_seen;

    for (const auto& skel : skeletons) {
        SkeletonCtx ctx(skel, d, g);
        using Extras = std::vector<std::pair<int, int>>;
        std::unordered_set<std::string> seen;
        std::vector<Extras> level;

        {
            Pattern p0 = ctx.materialize({});
            std::string form = canonical_pattern_form(p0);
            bool fresh = skeleton_recoverable ? seen.insert(form).second
                                              : global_seen.insert(form).second;
            if (fresh) {
                if (++classes > budget.max_patterns)
                    throw BudgetError("girth pattern budget exceeded", classes.load());
                f(p0);
                level.push_back({});
            }
        }

        while (!level.empty()) {
            // expand one level: add every legal edge to every representative
            struct Child {
                std::string form;
                Extras extras;
            };
            std::vector<std::vector<Child>> produced(std::max(1, threads));
            auto expand = [&](int tid, size_t begin, size_t end) {
                auto adj = ctx.adj;
                auto deg = ctx.deg;
                for (size_t i = begin; i < end; ++i) {
                    const Extras& cur = level[i];
                    for (auto [x, y] : cur) {
                        adj[x] |= std::uint64_t(1) << y;
                        adj[y] |= std::uint64_t(1) << x;
                        ++deg[x];
                        ++deg[y];
                    }
                    for (auto [x, y] : ctx.cand) {
                        if (deg[x] >= d || deg[y] >= d) continue;
                        if (adj[x] >> y & 1) continue;
                        if (masked_distance(adj, ctx.n, x, y) < g - 1) continue;
                        Extras next = cur;
                        next.emplace_back(x, y);
                        Pattern p = ctx.materialize(next);
                        produced[tid].push_back({canonical_pattern_form(p), std::move(next)});
                    }
                    for (auto [x, y] : cur) {
                        adj[x] &= ~(std::uint64_t(1) << y);
                        adj[y] &= ~(std::uint64_t(1) << x);
                        --deg[x];
                        --deg[y];
                    }
                }
            };
            int workers = std::max(1, std::min<int>(threads, static_cast<int>(level.size())));
            if (workers == 1) {
                expand(0, 0, level.size());
            } else {
                std::vector<std::thread> pool;
                size_t chunk = (level.size() + workers - 1) / workers;
                for (int w = 0; w < workers; ++w) {
                    size_t b = w * chunk, e = std::min(level.size(), b + chunk);
                    if (b >= e) break;
                    pool.emplace_back(expand, w, b, e);
                }
                for (auto& t : pool) t.join();
            }

            std::vector<Extras> next_level;
            for (auto& bucket : produced)
                for (auto& ch : bucket) {
                    bool fresh = skeleton_recoverable ? seen.insert(ch.form).second
                                                      : global_seen.insert(ch.form).second;
                    if (!fresh) continue;
                    if (++classes > budget.max_patterns)
                        throw BudgetError("girth pattern budget exceeded", classes.load());
                    next_level.push_back(std::move(ch.extras));
                }

            // report the new classes in deterministic order
            for (const auto& extras : next_level) f(ctx.materialize(extras));
            level = std::move(next_level);
        }
    }
}

// Materialized enumeration (desk-scale parameters only).
inline std::vector<Pattern> enumerate_girth_patterns(int d, int g, int r, bool edge_rooted,
                                                     const GirthBudget& budget = {},
                                                     int threads = 1) {
    std::vector<Pattern> out;
    scan_girth_patterns(
        d, g, r, edge_rooted, [&](const Pattern& p) { out.push_back(p); }, budget, threads);
    return out;
}

// Pattern with three or more pendant leaves below one vertex of the previous
// layer: its constraint is componentwise weaker than the same pattern with
// the surplus leaves removed, which also belongs to the family whenever the
// parent sits in the two deepest layers. Such constraints are redundant.
inline bool has_redundant_pendant_bundle(const Pattern& p) {
    auto lo = p.layer_of();
    for (int v = 0; v < p.graph.vertex_count(); ++v) {
        if (lo[v] < p.depth - 1) continue;  // parent must be degree-relaxed
        int pendants = 0;
        for (Vertex w : p.graph.neighbors(v))
            if (lo[w] == lo[v] + 1 && p.graph.degree(w) == 1) ++pendants;
        if (pendants >= 3) return true;
    }
    return false;
}

// Minimal constraint set of the girth-constrained family.
inline ConstraintFamily girth_pattern_constraints(int d, int g, int r, bool edge_rooted,
                                                  bool normalize = true, int threads = 1,
                                                  const GirthBudget& budget = {},
                                                  int limit = kDefaultExhaustiveLimit) {
    ConstraintFrontier sink(r + 1);
    long long patterns = 0;
    scan_girth_patterns(
        d, g, r, edge_rooted,
        [&](const Pattern& p) {
            ++patterns;
            if (normalize && has_redundant_pendant_bundle(p)) return;
            sink.add(normalize_e(int_constraint_bruteforce(p, limit), r + 1));
        },
        budget, threads);
    ConstraintFamily fam;
    fam.kept = sink.finish();
    fam.pattern_count = patterns;
    return fam;
}

}  // namespace hallratio
