#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace wheelsub {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GraphFormat { graph6, edge_list };

namespace detail {

inline std::string_view strip_trailing_ws(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

inline int g6_byte(std::string_view s, size_t i) {
    if (i >= s.size()) throw parse_error("graph6: truncated at byte " + std::to_string(i));
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        throw parse_error("graph6: byte " + std::to_string(i) + " out of range (" +
                          std::to_string(int(c)) + ")");
    return c - 63;
}

}  // namespace detail

// graph6, per McKay's format description: N(n) then the upper triangle of the
// adjacency matrix column by column, packed 6 bits per printable byte (+63).
inline Graph parse_graph6(std::string_view text) {
    std::string_view s = detail::strip_trailing_ws(text);
    if (s.empty()) throw parse_error("graph6: empty input");

    size_t pos = 0;
    long long n;
    if (s[0] != '~') {
        n = detail::g6_byte(s, 0);
        pos = 1;
    } else if (s.size() >= 2 && s[1] != '~') {
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | detail::g6_byte(s, i);
        pos = 4;
    } else {
        n = 0;
        for (size_t i = 2; i <= 7; ++i) n = (n << 6) | detail::g6_byte(s, i);
        pos = 8;
    }
    if (n > 100000) throw parse_error("graph6: vertex count " + std::to_string(n) + " too large");

    const long long bits = n * (n - 1) / 2;
    const size_t need = pos + static_cast<size_t>((bits + 5) / 6);
    if (s.size() != need)
        throw parse_error("graph6: expected " + std::to_string(need) + " bytes, got " +
                          std::to_string(s.size()));

    std::vector<Edge> edges;
    long long bit = 0;
    int cur = 0, left = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (left == 0) {
                cur = detail::g6_byte(s, pos++);
                left = 6;
            }
            --left;
            if ((cur >> left) & 1) edges.push_back(Edge(i, j));
        }
    }
    // remaining padding bits must be zero
    if (left > 0 && (cur & ((1 << left) - 1)) != 0)
        throw parse_error("graph6: nonzero padding bits");
    return Graph(static_cast<int>(n), edges);
}

inline std::string serialize_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int cur = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((cur << (6 - have)) + 63));
    return out;
}

// Plain edge list: first line the vertex count, then one "u v" pair per line.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0)
                throw parse_error("edge list: line 1: expected vertex count");
            std::string rest;
            if (ls >> rest) throw parse_error("edge list: line 1: trailing tokens");
            continue;
        }
        long long u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v))
            throw parse_error("edge list: line " + std::to_string(lineno) + ": expected two vertices");
        std::string rest;
        if (ls >> rest)
            throw parse_error("edge list: line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("edge list: line " + std::to_string(lineno) + ": vertex out of range");
        if (u == v)
            throw parse_error("edge list: line " + std::to_string(lineno) + ": self-loop");
        edges.push_back(Edge(static_cast<int>(u), static_cast<int>(v)));
    }
    if (n < 0) throw parse_error("edge list: empty input");
    return Graph(static_cast<int>(n), edges);
}

inline std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
    return out;
}

inline Graph parse_graph(std::string_view text, GraphFormat fmt) {
    return fmt == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

inline std::string serialize_graph(const Graph& g, GraphFormat fmt) {
    return fmt == GraphFormat::graph6 ? serialize_graph6(g) : serialize_edge_list(g);
}

}  // namespace wheelsub
