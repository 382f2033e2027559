#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "hallratio/errors.hpp"

namespace hallratio {

using Vertex = int;

// A set of vertices kept as a sorted, duplicate-free index list.
using VertexSet = std::vector<Vertex>;

inline VertexSet make_vertex_set(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Sentinel for girth of a forest.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {
        if (n < 0) throw PreconditionError("negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    static Graph cycle(int n) {
        Graph g(n);
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        return g;
    }

    static Graph path(int n) {
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }

    static Graph star(int leaves) {
        Graph g(leaves + 1);
        for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
        return g;
    }

    // Cayley graph over Z_n with the given (symmetrised) generator steps.
    static Graph circulant(int n, const std::vector<int>& steps) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int s : steps) {
                int j = ((i + s) % n + n) % n;
                if (i != j && !g.has_edge(i, j)) g.add_edge(i, j);
            }
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const {
        int m = 0;
        for (const auto& a : adj_) m += static_cast<int>(a.size());
        return m / 2;
    }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v)) throw PreconditionError("duplicate edge");
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
    }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool is_regular(int d) const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != d) return false;
        return true;
    }

    // Adjacency bitmask of v; only valid for n <= 64.
    std::uint64_t neighbor_mask(Vertex v) const {
        check_vertex(v);
        std::uint64_t m = 0;
        for (Vertex u : adj_[v]) m |= std::uint64_t(1) << u;
        return m;
    }

    std::vector<std::uint64_t> neighbor_masks() const {
        std::vector<std::uint64_t> ms(n_);
        for (int v = 0; v < n_; ++v) ms[v] = neighbor_mask(v);
        return ms;
    }

    bool is_independent(const VertexSet& s) const {
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (has_edge(s[i], s[j])) return false;
        return true;
    }

    // BFS distances from src; unreachable vertices get -1.
    std::vector<int> distances_from(Vertex src) const {
        check_vertex(src);
        std::vector<int> dist(n_, -1);
        std::deque<Vertex> q{src};
        dist[src] = 0;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex w : adj_[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
        }
        return dist;
    }

    bool is_connected() const {
        if (n_ == 0) return true;
        auto d = distances_from(0);
        return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
    }

    // Length of a shortest cycle, kInfiniteGirth for forests.
    // BFS from every vertex; a non-tree edge at BFS level l closes a cycle of
    // length dist(u)+dist(w)+1 through the root, and every shortest cycle is
    // seen from one of its vertices.
    int girth() const {
        int best = kInfiniteGirth;
        for (int src = 0; src < n_; ++src) {
            std::vector<int> dist(n_, -1), parent(n_, -1);
            std::deque<Vertex> q{src};
            dist[src] = 0;
            while (!q.empty()) {
                Vertex u = q.front();
                q.pop_front();
                for (Vertex w : adj_[u]) {
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        q.push_back(w);
                    } else if (w != parent[u] && dist[w] >= dist[u]) {
                        best = std::min(best, dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        return best;
    }

    // Order of a largest clique containing v.
    int clique_number_at(Vertex v) const {
        check_vertex(v);
        int best = 1;
        VertexSet cand = neighbors(v);
        extend_clique(cand, 1, best);
        return best;
    }

    Graph induced(const VertexSet& keep) const {
        std::vector<int> idx(n_, -1);
        for (size_t i = 0; i < keep.size(); ++i) {
            check_vertex(keep[i]);
            idx[keep[i]] = static_cast<int>(i);
        }
        Graph g(static_cast<int>(keep.size()));
        for (Vertex u : keep)
            for (Vertex w : adj_[u])
                if (idx[w] > idx[u]) g.add_edge(idx[u], idx[w]);
        return g;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw PreconditionError("vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
    }

    static void insert_sorted(std::vector<Vertex>& a, Vertex v) {
        a.insert(std::upper_bound(a.begin(), a.end(), v), v);
    }

    void extend_clique(const VertexSet& cand, int size, int& best) const {
        if (size + static_cast<int>(cand.size()) <= best) return;
        best = std::max(best, size);
        for (size_t i = 0; i < cand.size(); ++i) {
            Vertex u = cand[i];
            VertexSet next;
            for (size_t j = i + 1; j < cand.size(); ++j)
                if (has_edge(u, cand[j])) next.push_back(cand[j]);
            extend_clique(next, size + 1, best);
        }
    }

    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

}  // namespace hallratio
