#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hallratio/errors.hpp"
#include "hallratio/graph.hpp"
#include "hallratio/indsets.hpp"
#include "hallratio/rational.hpp"

namespace hallratio {

// Named graphs that realise the known extremal Hall ratios, together with the
// statistics they are expected to reproduce. The constructions are checked
// against the independent-set oracles rather than trusted.

struct CatalogEntry {
    std::string name;
    std::string description;
    int order = 0;
    int regular_degree = 0;
    int girth = 0;
    int independence_number = 0;
    Rational hall_ratio;  // order / independence_number
    Graph (*builder)();
};

namespace catalog_detail {

// Outer 7-cycle, inner 7-cycle with step 2, spokes between them.
inline Graph fajtlowicz() {
    Graph g(14);
    for (int i = 0; i < 7; ++i) {
        g.add_edge(i, (i + 1) % 7);          // outer cycle
        g.add_edge(7 + i, 7 + (i + 2) % 7);  // inner cycle, step 2
        g.add_edge(i, 7 + i);                // spokes
    }
    return g;
}

// 14-cycle plus a perfect matching of chords.
inline Graph locke() {
    Graph g = Graph::cycle(14);
    const std::pair<int, int> chords[] = {{0, 7}, {1, 5},  {2, 12}, {3, 8},
                                          {4, 10}, {6, 11}, {9, 13}};
    for (auto [u, v] : chords) g.add_edge(u, v);
    return g;
}

inline Graph jones13() { return Graph::circulant(13, {1, -1, 5, -5}); }
inline Graph circ20() { return Graph::circulant(20, {1, -1, 6, -6, 10}); }
inline Graph circ29() { return Graph::circulant(29, {1, -1, 5, -5, 13, -13}); }

}  // namespace catalog_detail

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"fajtlowicz", "cubic graph on 14 vertices with Hall ratio 14/5", 14, 3, 5, 5,
         Rational(14, 5), &catalog_detail::fajtlowicz},
        {"locke", "cubic graph on 14 vertices with Hall ratio 14/5", 14, 3, 5, 5,
         Rational(14, 5), &catalog_detail::locke},
        {"jones13", "circulant on Z13, steps {1,5}, Hall ratio 13/4", 13, 4, 4, 4,
         Rational(13, 4), &catalog_detail::jones13},
        {"circ20", "circulant on Z20, steps {1,6,10}, Hall ratio 10/3", 20, 5, 4, 6,
         Rational(10, 3), &catalog_detail::circ20},
        {"circ29", "circulant on Z29, steps {1,5,13}, Hall ratio 29/8", 29, 6, 4, 8,
         Rational(29, 8), &catalog_detail::circ29},
    };
    return entries;
}

inline std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
    // a few aliases for the generalized-Petersen style names
    std::string key = name;
    if (key == "gp72" || key == "petersen72") key = "fajtlowicz";
    for (const auto& e : catalog_entries())
        if (e.name == key) return e;
    return std::nullopt;
}

inline Graph catalog(const std::string& name) {
    auto e = catalog_lookup(name);
    if (!e) throw PreconditionError("unknown catalog graph '" + name + "'");
    return e->builder();
}

// Recomputes every expected statistic of an entry with the oracles.
// Returns an empty string on success, else a description of the mismatch.
inline std::string check_catalog_entry(const CatalogEntry& e,
                                       int limit = kDefaultExhaustiveLimit) {
    Graph g = e.builder();
    if (g.vertex_count() != e.order) return e.name + ": wrong order";
    if (!g.is_regular(e.regular_degree)) return e.name + ": not regular";
    if (g.girth() != e.girth) return e.name + ": wrong girth";
    if (independence_number(g, limit) != e.independence_number)
        return e.name + ": wrong independence number";
    if (Rational(e.order, e.independence_number) != e.hall_ratio)
        return e.name + ": stated Hall ratio inconsistent";
    return {};
}

}  // namespace hallratio
