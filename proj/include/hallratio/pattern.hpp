#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hallratio/constraint.hpp"
#include "hallratio/errors.hpp"
#include "hallratio/graph.hpp"
#include "hallratio/indsets.hpp"

namespace hallratio {

// A rooted pattern: a graph all of whose vertices lie within distance `depth`
// of the root, together with its layer decomposition. The declared depth may
// exceed the eccentricity of the root, in which case trailing layers are
// empty.
struct Pattern {
    Graph graph;
    bool edge_rooted = false;
    Vertex root_u = 0;
    Vertex root_v = -1;  // second endpoint for edge-rooted patterns
    int depth = 0;
    std::vector<std::vector<Vertex>> layers;  // indices 0..depth

    std::vector<int> layer_of() const {
        std::vector<int> lo(graph.vertex_count(), -1);
        for (int i = 0; i < static_cast<int>(layers.size()); ++i)
            for (Vertex v : layers[i]) lo[v] = i;
        return lo;
    }
};

inline std::vector<int> root_distances(const Graph& g, Vertex u, Vertex v) {
    std::vector<int> du = g.distances_from(u);
    if (v < 0) return du;
    std::vector<int> dv = g.distances_from(v);
    for (size_t i = 0; i < du.size(); ++i) {
        if (du[i] < 0 || (dv[i] >= 0 && dv[i] < du[i])) du[i] = dv[i];
    }
    return du;
}

inline Pattern make_vertex_pattern(Graph g, Vertex root, int depth) {
    Pattern p;
    p.graph = std::move(g);
    p.edge_rooted = false;
    p.root_u = root;
    p.depth = depth;
    auto dist = root_distances(p.graph, root, -1);
    p.layers.assign(depth + 1, {});
    for (int v = 0; v < p.graph.vertex_count(); ++v) {
        if (dist[v] < 0 || dist[v] > depth)
            throw PreconditionError("vertex " + std::to_string(v) +
                                    " not within pattern depth");
        p.layers[dist[v]].push_back(v);
    }
    return p;
}

inline Pattern make_edge_pattern(Graph g, Vertex u, Vertex v, int depth) {
    if (!g.has_edge(u, v)) throw PreconditionError("root edge not present");
    Pattern p;
    p.graph = std::move(g);
    p.edge_rooted = true;
    p.root_u = u;
    p.root_v = v;
    p.depth = depth;
    auto dist = root_distances(p.graph, u, v);
    p.layers.assign(depth + 1, {});
    for (int w = 0; w < p.graph.vertex_count(); ++w) {
        if (dist[w] < 0 || dist[w] > depth)
            throw PreconditionError("vertex " + std::to_string(w) +
                                    " not within pattern depth");
        p.layers[dist[w]].push_back(w);
    }
    return p;
}

// Def. 4.1(2): degree exactly d outside the two deepest layers (depth indices
// r-1 and r), at most d inside them.
inline bool is_d_regular_pattern(const Pattern& p, int d) {
    auto lo = p.layer_of();
    for (int v = 0; v < p.graph.vertex_count(); ++v) {
        int deg = p.graph.degree(v);
        if (deg > d) return false;
        if (lo[v] < p.depth - 1 && deg != d) return false;
    }
    return true;
}

// Exact constraint of a pattern by enumeration of its maximum independent
// sets.
inline Constraint constraint_bruteforce(const Pattern& p,
                                        int limit = kDefaultExhaustiveLimit) {
    const int width = p.depth + 1;
    std::vector<std::uint64_t> layer_masks(width, 0);
    for (int i = 0; i < width; ++i)
        for (Vertex v : p.layers[i]) layer_masks[i] |= std::uint64_t(1) << v;

    std::vector<unsigned long long> sums(width, 0);
    unsigned long long count = 0;
    for_each_maximum_independent_set(
        p.graph,
        [&](std::uint64_t mask) {
            ++count;
            for (int i = 0; i < width; ++i)
                sums[i] += static_cast<unsigned>(std::popcount(mask & layer_masks[i]));
        },
        limit);

    Constraint c;
    c.n = count;
    c.e.reserve(width);
    for (int i = 0; i < width; ++i) c.e.emplace_back(Int(sums[i]), Int(count));
    return c;
}

// Same data in integer form (used by enumeration pipelines).
inline IntConstraint int_constraint_bruteforce(const Pattern& p,
                                               int limit = kDefaultExhaustiveLimit) {
    const int width = p.depth + 1;
    std::vector<std::uint64_t> layer_masks(width, 0);
    for (int i = 0; i < width; ++i)
        for (Vertex v : p.layers[i]) layer_masks[i] |= std::uint64_t(1) << v;

    std::vector<unsigned long long> sums(width, 0);
    unsigned long long count = 0;
    int total = 0;
    for_each_maximum_independent_set(
        p.graph,
        [&](std::uint64_t mask) {
            ++count;
            total = std::popcount(mask);
            for (int i = 0; i < width; ++i)
                sums[i] += static_cast<unsigned>(std::popcount(mask & layer_masks[i]));
        },
        limit);

    IntConstraint c;
    c.total = total;
    c.count = count;
    c.sums.reserve(width);
    for (int i = 0; i < width; ++i) c.sums.emplace_back(sums[i]);
    return c;
}

}  // namespace hallratio
