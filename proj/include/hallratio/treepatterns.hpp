#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hallratio/constraint.hpp"
#include "hallratio/errors.hpp"
#include "hallratio/pattern.hpp"

namespace hallratio {

// Canonical rooted tree shapes, interned by their recursive code: the code of
// a vertex is the sorted concatenation of its children's codes. Two rooted
// trees are isomorphic iff their codes are equal.
struct TreeShape {
    std::vector<const TreeShape*> children;  // sorted by code
    std::string code;
    int height = 0;  // root eccentricity
    int size = 1;    // vertex count
    // constraints of the tree rooted here, vectors of length height+1
    IntConstraint c0;  // root forbidden
    IntConstraint c1;  // root forced
    IntConstraint c;   // c0 \/ c1
};

using TreeCode = std::string;

class TreeShapeFactory {
public:
    const TreeShape* leaf() { return make({}); }

    const TreeShape* make(std::vector<const TreeShape*> children) {
        std::sort(children.begin(), children.end(),
                  [](const TreeShape* a, const TreeShape* b) { return a->code < b->code; });
        std::string code = "(";
        for (const auto* ch : children) code += ch->code;
        code += ")";
        auto it = registry_.find(code);
        if (it != registry_.end()) return it->second.get();

        auto shape = std::make_unique<TreeShape>();
        shape->children = std::move(children);
        shape->code = std::move(code);
        for (const auto* ch : shape->children) {
            shape->height = std::max(shape->height, ch->height + 1);
            shape->size += ch->size;
        }
        IntConstraint all{0, {}, 1};   // fold of c(T_i)
        IntConstraint avoid{0, {}, 1};  // fold of c0(T_i)
        for (const auto* ch : shape->children) {
            all = oplus(all, ch->c);
            avoid = oplus(avoid, ch->c0);
        }
        pad_to(all.sums, shape->height);
        pad_to(avoid.sums, shape->height);
        shape->c0 = prepend_zero(all);
        shape->c1 = prepend_one(avoid);
        shape->c = join_int(shape->c0, shape->c1);

        const TreeShape* raw = shape.get();
        registry_.emplace(raw->code, std::move(shape));
        return raw;
    }

    const TreeShape* from_code(const std::string& code) {
        size_t pos = 0;
        const TreeShape* s = parse(code, pos);
        if (pos != code.size()) throw ParseError("tree code: trailing characters");
        return s;
    }

private:
    const TreeShape* parse(const std::string& code, size_t& pos) {
        if (pos >= code.size() || code[pos] != '(') throw ParseError("tree code: expected '('");
        ++pos;
        std::vector<const TreeShape*> children;
        while (pos < code.size() && code[pos] == '(') children.push_back(parse(code, pos));
        if (pos >= code.size() || code[pos] != ')') throw ParseError("tree code: expected ')'");
        ++pos;
        return make(std::move(children));
    }

    std::unordered_map<std::string, std::unique_ptr<TreeShape>> registry_;
};

// Constraint of a vertex-rooted tree, by the root-forced / root-forbidden
// recursion.
inline Constraint constraint_dp_vertex(const TreeShape& t) { return t.c.to_constraint(); }

// Constraint of the edge-rooted tree with subtrees tu, tv hanging from the
// root edge: the root edge contributes at most one endpoint to any
// independent set, giving the three-way join below.
inline IntConstraint edge_tree_int_constraint(const TreeShape& tu, const TreeShape& tv) {
    return join_int(join_int(oplus(tu.c0, tv.c0), oplus(tu.c0, tv.c1)),
                    oplus(tu.c1, tv.c0));
}

inline Constraint constraint_dp_edge(const TreeShape& tu, const TreeShape& tv) {
    return edge_tree_int_constraint(tu, tv).to_constraint();
}

inline Constraint padded(Constraint c, size_t width) {
    if (c.e.size() < width) c.e.resize(width, Rational(0));
    return c;
}

// ---------------------------------------------------------------------------
// Enumeration of d-regular tree families.
//
// Vertices outside the two deepest layers (indices r-1 and r) must have
// degree exactly d; inside them the degree is only bounded by d. With the
// normalize flag, vertices of layer r-1 carry at most 2 leaf children;
// the discarded trees have componentwise-weaker constraints, so the linear
// programs are unaffected.
// ---------------------------------------------------------------------------

struct TreeBudget {
    long long max_patterns = 250'000'000;
    int max_degree = 8;
    int max_depth = 6;
};

namespace tree_detail {

template <class F>
void for_each_multiset(int items, int k, F&& f) {
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int depth, int lo) {
        if (depth == k) {
            f(pick);
            return;
        }
        for (int i = lo; i < items; ++i) {
            pick[depth] = i;
            rec(depth + 1, i);
        }
    };
    rec(0, 0);
}

inline Int multiset_count(long long items, int k) {
    // C(items + k - 1, k)
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= items + i - 1;
        r /= i;
    }
    return r;
}

// Shapes admissible for a vertex at layer `level` >= 1 of a depth-r pattern.
inline std::vector<const TreeShape*> level_shapes(TreeShapeFactory& factory, int d, int r,
                                                  int level, bool normalize) {
    if (level >= r) return {factory.leaf()};
    auto deeper = level_shapes(factory, d, r, level + 1, normalize);
    std::vector<const TreeShape*> out;
    if (level < r - 1) {
        // degree exactly d: one parent edge plus d-1 children
        for_each_multiset(static_cast<int>(deeper.size()), d - 1, [&](const std::vector<int>& pick) {
            std::vector<const TreeShape*> ch;
            ch.reserve(pick.size());
            for (int i : pick) ch.push_back(deeper[i]);
            out.push_back(factory.make(std::move(ch)));
        });
    } else {
        // layer r-1: children are leaves, any number up to d-1
        int cap = d - 1;
        if (normalize) cap = std::min(cap, 2);
        std::vector<const TreeShape*> ch;
        out.push_back(factory.make(ch));
        for (int j = 1; j <= cap; ++j) {
            ch.push_back(factory.leaf());
            out.push_back(factory.make(ch));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const TreeShape* a, const TreeShape* b) { return a->code < b->code; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline Int count_level_shapes(int d, int r, int level, bool normalize) {
    if (level >= r) return 1;
    Int deeper = count_level_shapes(d, r, level + 1, normalize);
    if (level < r - 1) return multiset_count(static_cast<long long>(deeper), d - 1);
    int cap = d - 1;
    if (normalize) cap = std::min(cap, 2);
    return cap + 1;
}

inline void check_tree_budget(int d, int r, const TreeBudget& budget, const Int& total) {
    if (d < 2) throw PreconditionError("tree patterns need degree >= 2");
    if (r < 0) throw PreconditionError("negative depth");
    if (d > budget.max_degree || r > budget.max_depth || total > budget.max_patterns)
        throw BudgetError("tree family T(" + std::to_string(d) + "," + std::to_string(r) +
                              ") has " + total.str() + " members, over budget",
                          budget.max_patterns);
}

}  // namespace tree_detail

inline Int count_tree_patterns_vertex(int d, int r, bool normalize = false) {
    using namespace tree_detail;
    if (r == 0) return 1;
    Int s1 = count_level_shapes(d, r, 1, normalize);
    if (r >= 2) return multiset_count(static_cast<long long>(s1), d);
    // relaxed root: any number of children up to d (leaves, possibly capped)
    int cap = normalize ? std::min(d, 2) : d;
    return cap + 1;
}

inline Int count_tree_patterns_edge(int d, int r, bool normalize = false) {
    using namespace tree_detail;
    if (r == 0) return 1;
    Int s1 = count_level_shapes(d, r, 1, normalize);
    Int side;
    if (r >= 2) {
        side = multiset_count(static_cast<long long>(s1), d - 1);
    } else {
        int cap = normalize ? std::min(d - 1, 2) : d - 1;
        side = cap + 1;
    }
    // unordered pairs with repetition
    return side * (side + 1) / 2;
}

// All root subtree shapes for one endpoint of an edge-rooted pattern, or for
// the root of a vertex-rooted pattern (in which case pass children = d).
inline std::vector<const TreeShape*> root_subtree_shapes(TreeShapeFactory& factory, int d,
                                                         int r, int children_exact,
                                                         bool normalize) {
    using namespace tree_detail;
    std::vector<const TreeShape*> out;
    if (r == 0) {
        out.push_back(factory.leaf());
        return out;
    }
    auto s1 = level_shapes(factory, d, r, 1, normalize);
    if (r >= 2) {
        for_each_multiset(static_cast<int>(s1.size()), children_exact,
                          [&](const std::vector<int>& pick) {
                              std::vector<const TreeShape*> ch;
                              for (int i : pick) ch.push_back(s1[i]);
                              out.push_back(factory.make(std::move(ch)));
                          });
    } else {
        int cap = normalize ? std::min(children_exact, 2) : children_exact;
        std::vector<const TreeShape*> ch;
        out.push_back(factory.make(ch));
        for (int j = 1; j <= cap; ++j) {
            ch.push_back(factory.leaf());
            out.push_back(factory.make(ch));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const TreeShape* a, const TreeShape* b) { return a->code < b->code; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Builds the labeled tree: pattern roots first, then subtrees in DFS order.
// The shapes' roots are identified with the pattern roots themselves.
inline Graph materialize_tree(const std::vector<const TreeShape*>& root_subtrees,
                              bool edge_rooted) {
    int total = edge_rooted ? 2 : 1;
    for (const auto* s : root_subtrees) total += s->size - 1;

    Graph g(total);
    int next = edge_rooted ? 2 : 1;
    if (edge_rooted) g.add_edge(0, 1);
    std::function<void(Vertex, const TreeShape*)> build = [&](Vertex parent,
                                                              const TreeShape* s) {
        Vertex me = next++;
        g.add_edge(parent, me);
        for (const auto* ch : s->children) build(me, ch);
    };
    if (edge_rooted) {
        if (root_subtrees.size() != 2) throw PreconditionError("edge pattern needs two subtrees");
        for (const auto* ch : root_subtrees[0]->children) build(0, ch);
        for (const auto* ch : root_subtrees[1]->children) build(1, ch);
    } else {
        if (root_subtrees.size() != 1) throw PreconditionError("vertex pattern needs one subtree");
        for (const auto* ch : root_subtrees[0]->children) build(0, ch);
    }
    return g;
}

inline Pattern materialize_vertex_pattern(const TreeShape* root, int depth) {
    Graph g = materialize_tree({root}, false);
    return make_vertex_pattern(std::move(g), 0, depth);
}

inline Pattern materialize_edge_pattern(const TreeShape* tu, const TreeShape* tv, int depth) {
    Graph g = materialize_tree({tu, tv}, true);
    return make_edge_pattern(std::move(g), 0, 1, depth);
}

// Explicit enumeration of the acyclic d-regular vertex-rooted patterns of
// depth r. Intended for desk-scale parameters; the LP pipelines stream
// constraints instead of materializing.
inline std::vector<Pattern> enumerate_tree_patterns_vertex(int d, int r,
                                                           const TreeBudget& budget = {},
                                                           bool normalize = false) {
    using namespace tree_detail;
    check_tree_budget(d, r, budget, count_tree_patterns_vertex(d, r, normalize));
    TreeShapeFactory factory;
    std::vector<Pattern> out;
    if (r == 0) {
        out.push_back(materialize_vertex_pattern(factory.leaf(), 0));
        return out;
    }
    for (const auto* s : root_subtree_shapes(factory, d, r, d, normalize))
        out.push_back(materialize_vertex_pattern(s, r));
    return out;
}

inline std::vector<Pattern> enumerate_tree_patterns_edge(int d, int r,
                                                         const TreeBudget& budget = {},
                                                         bool normalize = false) {
    using namespace tree_detail;
    check_tree_budget(d, r, budget, count_tree_patterns_edge(d, r, normalize));
    TreeShapeFactory factory;
    auto sides = root_subtree_shapes(factory, d, r, d - 1, normalize);
    std::vector<Pattern> out;
    for (size_t i = 0; i < sides.size(); ++i)
        for (size_t j = i; j < sides.size(); ++j)
            out.push_back(materialize_edge_pattern(sides[i], sides[j], r));
    return out;
}

// ---------------------------------------------------------------------------
// Streaming constraint collection (deduplicated e-vectors at width r+1).
// ---------------------------------------------------------------------------

// Result of a family scan: the componentwise-minimal distinct e-vectors
// (dominated constraints are redundant in the LPs) plus the family size.
struct ConstraintFamily {
    std::vector<EKey> kept;  // Pareto-minimal distinct constraints, sorted
    long long pattern_count = 0;
};

namespace tree_detail {

// DFS over non-decreasing sequences of child shapes, carrying the two oplus
// accumulators. At each complete root we join the root-forbidden and
// root-forced constraints and record the reduced e-vector.
struct VertexRootScan {
    const std::vector<const TreeShape*>& s1;
    int width;

    void scan(int slots, int lo, const IntConstraint& all, const IntConstraint& avoid,
              ConstraintFrontier& sink) const {
        if (slots == 0) {
            IntConstraint c = join_int(prepend_zero(all), prepend_one(avoid));
            sink.add(normalize_e(c, width));
            return;
        }
        for (int i = lo; i < static_cast<int>(s1.size()); ++i) {
            scan(slots - 1, i, oplus(all, s1[i]->c), oplus(avoid, s1[i]->c0), sink);
        }
    }
};

inline ConstraintFamily family_from(ConstraintFrontier& sink) {
    ConstraintFamily fam;
    fam.pattern_count = sink.seen();
    fam.kept = sink.finish();
    return fam;
}

}  // namespace tree_detail

// Minimal constraint set of T_r(d), computed by the c0/c1 recursion without
// materializing trees. Parallel over the first root subtree.
inline ConstraintFamily vertex_tree_constraints(int d, int r, bool normalize = true,
                                                int threads = 1,
                                                const TreeBudget& budget = {}) {
    using namespace tree_detail;
    check_tree_budget(d, r, budget, count_tree_patterns_vertex(d, r, normalize));
    const int width = r + 1;
    TreeShapeFactory factory;
    ConstraintFrontier sink(width);

    if (r == 0) {
        sink.add(normalize_e(factory.leaf()->c, width));
        return family_from(sink);
    }
    if (r == 1) {
        // root with 0..d leaf children
        int cap = normalize ? std::min(d, 2) : d;
        IntConstraint all{0, {}, 1}, avoid{0, {}, 1};
        const TreeShape* leaf = factory.leaf();
        for (int j = 0; j <= cap; ++j) {
            sink.add(normalize_e(join_int(prepend_zero(all), prepend_one(avoid)), width));
            all = oplus(all, leaf->c);
            avoid = oplus(avoid, leaf->c0);
        }
        return family_from(sink);
    }

    auto s1 = level_shapes(factory, d, r, 1, normalize);
    VertexRootScan scan{s1, width};
    const int m = static_cast<int>(s1.size());

    int workers = std::max(1, std::min(threads, m));
    if (workers == 1) {
        IntConstraint unit{0, {}, 1};
        scan.scan(d, 0, unit, unit, sink);
        return family_from(sink);
    }
    std::vector<ConstraintFrontier> sinks(workers, ConstraintFrontier(width));
    std::vector<std::thread> pool;
    std::atomic<int> next_first{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            IntConstraint unit{0, {}, 1};
            for (;;) {
                int i = next_first.fetch_add(1);
                if (i >= m) break;
                scan.scan(d - 1, i, oplus(unit, s1[i]->c), oplus(unit, s1[i]->c0), sinks[w]);
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& s : sinks) sink.absorb(std::move(s));
    return family_from(sink);
}

// Minimal constraint set of T'_r(d) (edge-rooted).
inline ConstraintFamily edge_tree_constraints(int d, int r, bool normalize = true,
                                              int threads = 1, const TreeBudget& budget = {}) {
    using namespace tree_detail;
    check_tree_budget(d, r, budget, count_tree_patterns_edge(d, r, normalize));
    (void)threads;  // pair scans are cheap at paper scale
    const int width = r + 1;
    TreeShapeFactory factory;
    auto sides = root_subtree_shapes(factory, d, r, d - 1, normalize);

    ConstraintFrontier sink(width);
    for (size_t i = 0; i < sides.size(); ++i)
        for (size_t j = i; j < sides.size(); ++j)
            sink.add(normalize_e(edge_tree_int_constraint(*sides[i], *sides[j]), width));
    return family_from(sink);
}

}  // namespace hallratio
