#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "hallratio/errors.hpp"
#include "hallratio/rational.hpp"

namespace hallratio {

// A constraint (e, n): per-layer expected occupancies of a uniform random
// maximum independent set of a pattern, plus the number of such sets.
struct Constraint {
    std::vector<Rational> e;
    Int n = 1;

    bool operator==(const Constraint& o) const { return e == o.e && n == o.n; }
};

inline void check_same_length(const Constraint& a, const Constraint& b, const char* op) {
    if (a.e.size() != b.e.size())
        throw PreconditionError(std::string(op) + ": constraint lengths " +
                                std::to_string(a.e.size()) + " and " +
                                std::to_string(b.e.size()) + " differ");
}

// The \/ operation: keep the constraint of larger total occupancy, or merge
// with multiplicity weights when the totals agree.
inline Constraint join(const Constraint& a, const Constraint& b) {
    check_same_length(a, b, "join");
    if (a.n == 0) return b;
    if (b.n == 0) return a;
    Rational na = l1_norm(a.e), nb = l1_norm(b.e);
    if (na > nb) return a;
    if (na < nb) return b;
    Constraint r;
    r.n = a.n + b.n;
    r.e.reserve(a.e.size());
    Rational wa(a.n, r.n), wb(b.n, r.n);
    for (size_t i = 0; i < a.e.size(); ++i) r.e.push_back(wa * a.e[i] + wb * b.e[i]);
    return r;
}

// The (+) operation: disjoint-union composition.
inline Constraint plus(const Constraint& a, const Constraint& b) {
    check_same_length(a, b, "plus");
    Constraint r;
    r.n = a.n * b.n;
    r.e.reserve(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e.push_back(a.e[i] + b.e[i]);
    return r;
}

enum class PruneMode { Weaker, Relative };

// e is weaker than e' iff e_i >= e'_i for every i.
inline bool is_weaker(const std::vector<Rational>& e, const std::vector<Rational>& e2) {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < e2[i]) return false;
    return true;
}

// e is relatively weaker than e' iff every prefix sum of e dominates the one
// of e'. Only sound against nonnegative non-increasing coefficient vectors.
inline bool is_relatively_weaker(const std::vector<Rational>& e,
                                 const std::vector<Rational>& e2) {
    Rational s = 0, s2 = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        s += e[i];
        s2 += e2[i];
        if (s < s2) return false;
    }
    return true;
}

// Removes duplicates and dominated constraints. The result is sorted by
// e-vector; multiplicities of collapsed duplicates are not merged (the LP
// only reads e).
inline std::vector<Constraint> prune(std::vector<Constraint> cs,
                                     PruneMode mode = PruneMode::Weaker) {
    if (cs.empty()) return cs;
    for (size_t i = 1; i < cs.size(); ++i)
        check_same_length(cs[0], cs[i], "prune");
    std::sort(cs.begin(), cs.end(),
              [](const Constraint& a, const Constraint& b) { return a.e < b.e; });
    cs.erase(std::unique(cs.begin(), cs.end(),
                         [](const Constraint& a, const Constraint& b) { return a.e == b.e; }),
             cs.end());
    auto dominates = [&](const std::vector<Rational>& kept, const std::vector<Rational>& c) {
        return mode == PruneMode::Weaker ? is_weaker(c, kept) : is_relatively_weaker(c, kept);
    };
    std::vector<Constraint> kept;
    for (const auto& c : cs) {
        bool dominated = false;
        for (const auto& k : kept)
            if (dominates(k.e, c.e)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        // drop previously kept constraints that the newcomer dominates
        std::erase_if(kept, [&](const Constraint& k) { return dominates(c.e, k.e); });
        kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end(),
              [](const Constraint& a, const Constraint& b) { return a.e < b.e; });
    return kept;
}

// Integer form of a constraint over a uniform-cardinality family: all member
// sets have `total` vertices, `sums[i]` adds |I ∩ layer i| over the family,
// and `count` is the family size. The rational constraint is sums/count.
struct IntConstraint {
    int total = 0;
    std::vector<Int> sums;
    Int count = 1;

    Constraint to_constraint() const {
        Constraint c;
        c.n = count;
        c.e.reserve(sums.size());
        for (const auto& s : sums) c.e.emplace_back(s, count);
        return c;
    }
};

inline void pad_to(std::vector<Int>& v, size_t len) {
    if (v.size() < len) v.resize(len, Int(0));
}

inline IntConstraint oplus(const IntConstraint& a, const IntConstraint& b) {
    IntConstraint r;
    r.total = a.total + b.total;
    r.count = a.count * b.count;
    size_t len = std::max(a.sums.size(), b.sums.size());
    r.sums.assign(len, Int(0));
    for (size_t i = 0; i < len; ++i) {
        if (i < a.sums.size()) r.sums[i] += a.sums[i] * b.count;
        if (i < b.sums.size()) r.sums[i] += b.sums[i] * a.count;
    }
    return r;
}

inline IntConstraint join_int(const IntConstraint& a, const IntConstraint& b) {
    if (a.count == 0) return b;
    if (b.count == 0) return a;
    if (a.total > b.total) return a;
    if (b.total > a.total) return b;
    IntConstraint r;
    r.total = a.total;
    r.count = a.count + b.count;
    size_t len = std::max(a.sums.size(), b.sums.size());
    r.sums.assign(len, Int(0));
    for (size_t i = 0; i < len; ++i) {
        if (i < a.sums.size()) r.sums[i] += a.sums[i];
        if (i < b.sums.size()) r.sums[i] += b.sums[i];
    }
    return r;
}

// Root kept out of the set: occupancies shift one layer deeper.
inline IntConstraint prepend_zero(const IntConstraint& c) {
    IntConstraint r;
    r.total = c.total;
    r.count = c.count;
    r.sums.reserve(c.sums.size() + 1);
    r.sums.push_back(0);
    r.sums.insert(r.sums.end(), c.sums.begin(), c.sums.end());
    return r;
}

// Root forced into the set: it contributes count to layer 0.
inline IntConstraint prepend_one(const IntConstraint& c) {
    IntConstraint r;
    r.total = c.total + 1;
    r.count = c.count;
    r.sums.reserve(c.sums.size() + 1);
    r.sums.push_back(c.count);
    r.sums.insert(r.sums.end(), c.sums.begin(), c.sums.end());
    return r;
}

// Canonical projective form of e = sums/count: divide through by the gcd.
// Two integer constraints reduce to the same key iff their e-vectors agree.
struct EKey {
    std::vector<Int> sums;
    Int count;

    bool operator==(const EKey& o) const = default;
    bool operator<(const EKey& o) const {
        if (sums != o.sums) return sums < o.sums;
        return count < o.count;
    }
};

inline EKey normalize_e(const IntConstraint& c, size_t width) {
    EKey k;
    k.count = c.count;
    k.sums = c.sums;
    pad_to(k.sums, width);
    Int g = k.count;
    for (const auto& s : k.sums) {
        if (g == 1) break;
        g = boost::multiprecision::gcd(g, s);
    }
    if (g > 1) {
        k.count /= g;
        for (auto& s : k.sums) s /= g;
    }
    return k;
}

inline std::vector<Rational> ekey_to_evector(const EKey& k) {
    std::vector<Rational> e;
    e.reserve(k.sums.size());
    for (const auto& s : k.sums) e.emplace_back(s, k.count);
    return e;
}

struct EKeyHash {
    size_t operator()(const EKey& k) const {
        size_t h = hash_value(k.count);
        for (const auto& s : k.sums) h = h * 1000003u ^ hash_value(s);
        return h;
    }
};

// exact componentwise dominance on projective keys: e(a) >= e(b)
inline bool ekey_weaker(const EKey& a, const EKey& b) {
    for (size_t i = 0; i < a.sums.size(); ++i)
        if (a.sums[i] * b.count < b.sums[i] * a.count) return false;
    return true;
}

// Accumulates distinct constraint keys and keeps only componentwise-minimal
// ones, compacting whenever the buffer outgrows its cap. Dropping a
// dominated row never changes the linear programs downstream, so interim
// compactions are sound; floating-point is used only to skip exact checks
// that cannot succeed.
class ConstraintFrontier {
public:
    explicit ConstraintFrontier(size_t width, size_t cap = 1'000'000)
        : width_(width), cap_(cap) {}

    void add(EKey k) {
        ++seen_;
        if (buffer_.insert(std::move(k)).second && buffer_.size() >= cap_) {
            compact(false);
            // a frontier larger than the cap would otherwise recompact on
            // every insert
            if (buffer_.size() * 2 >= cap_) cap_ = buffer_.size() * 4;
        }
    }

    long long seen() const { return seen_; }

    // Final Pareto-minimal set, sorted.
    std::vector<EKey> finish() {
        compact(true);
        std::vector<EKey> out(buffer_.begin(), buffer_.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    // Merge another frontier (used to join per-thread sinks).
    void absorb(ConstraintFrontier&& other) {
        seen_ += other.seen_;
        for (auto it = other.buffer_.begin(); it != other.buffer_.end();)
            buffer_.insert(std::move(other.buffer_.extract(it++).value()));
        other.buffer_.clear();
        if (buffer_.size() >= cap_) compact(false);
    }

private:
    struct Approx {
        EKey key;
        std::vector<double> e;
        double sum;
    };

    void compact(bool final_pass) {
        std::vector<Approx> items;
        items.reserve(buffer_.size());
        for (auto it = buffer_.begin(); it != buffer_.end();) {
            Approx a;
            a.key = std::move(buffer_.extract(it++).value());
            double c = static_cast<double>(a.key.count);
            a.sum = 0;
            a.e.reserve(width_);
            for (const auto& s : a.key.sums) {
                double x = static_cast<double>(s) / c;
                a.e.push_back(x);
                a.sum += x;
            }
            items.push_back(std::move(a));
        }
        buffer_.clear();
        std::sort(items.begin(), items.end(),
                  [](const Approx& a, const Approx& b) { return a.sum < b.sum; });

        std::vector<Approx> kept;
        const double eps = 1e-9;
        for (auto& cand : items) {
            bool dominated = false;
            for (const auto& k : kept) {
                if (k.sum > cand.sum + eps) continue;
                bool maybe = true;
                for (size_t i = 0; i < width_; ++i)
                    if (cand.e[i] + eps < k.e[i]) {
                        maybe = false;
                        break;
                    }
                if (maybe && ekey_weaker(cand.key, k.key)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) kept.push_back(std::move(cand));
        }
        if (final_pass) {
            // the ascending double sums may misorder near-ties; one exact
            // backward sweep makes the final set truly minimal
            std::vector<Approx> minimal;
            for (auto& cand : kept) {
                std::erase_if(minimal, [&](const Approx& k) {
                    return ekey_weaker(k.key, cand.key);
                });
                minimal.push_back(std::move(cand));
            }
            kept = std::move(minimal);
        }
        for (auto& k : kept) buffer_.insert(std::move(k.key));
    }

    size_t width_;
    size_t cap_;
    long long seen_ = 0;
    std::unordered_set<EKey, EKeyHash> buffer_;
};

}  // namespace hallratio
