#pragma once

#include <string>

#include "hallratio/errors.hpp"
#include "hallratio/graph.hpp"

namespace hallratio {

// graph6: ASCII encoding of undirected graphs. The vertex count is one byte
// (n+63) for n <= 62 or '~' followed by three bytes for n <= 258047; the
// upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... is packed 6 bits per
// byte, high bit first, each byte offset by 63.

namespace graph6_detail {

inline int byte_at(const std::string& s, size_t i) {
    if (i >= s.size()) throw ParseError("graph6: truncated input at byte " + std::to_string(i));
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: byte " + std::to_string(i) + " value " + std::to_string(c) +
                         " outside 63..126");
    return c - 63;
}

}  // namespace graph6_detail

inline Graph parse_graph6(const std::string& text) {
    using graph6_detail::byte_at;
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ParseError("graph6: empty input");

    size_t pos = 0;
    long long n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw ParseError("graph6: 8-byte vertex counts not supported");
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(s, i);
        pos = 4;
    } else {
        n = byte_at(s, 0);
        pos = 1;
    }

    Graph g(static_cast<int>(n));
    long long bits = n * (n - 1) / 2;
    long long bit = 0;
    int j = 1, i = 0;
    while (bit < bits) {
        int b = byte_at(s, pos);
        ++pos;
        for (int k = 5; k >= 0 && bit < bits; --k, ++bit) {
            if ((b >> k) & 1) g.add_edge(i, j);
            if (++i == j) {
                ++j;
                i = 0;
            }
        }
        // padding bits of the final byte must be zero
        if (bit == bits) {
            int pad = static_cast<int>((6 - bits % 6) % 6);
            if (b & ((1 << pad) - 1))
                throw ParseError("graph6: nonzero padding in byte " + std::to_string(pos - 1));
        }
    }
    if (pos != s.size())
        throw ParseError("graph6: trailing garbage from byte " + std::to_string(pos));
    return g;
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw PreconditionError("graph6: graph too large to encode");
    }
    int acc = 0, k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++k == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                k = 0;
            }
        }
    if (k > 0) out.push_back(static_cast<char>((acc << (6 - k)) + 63));
    return out;
}

}  // namespace hallratio
