#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace secdom {

/// Graph as raw header + edge pairs, not yet validated against the bitset
/// tier. Lets the reader report oversized inputs cleanly before to_graph.
struct EdgeList {
    std::int64_t n = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Text format: one "n m" header line, then m lines "u v".
/// '#' starts a comment; blank lines are skipped.
inline EdgeList read_edge_list(std::istream& in) {
    EdgeList out;
    std::string line;
    std::int64_t m = -1;
    std::int64_t seen = 0;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (m < 0) {
            if (!(ls >> out.n >> m)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) { m = -1; continue; }
                throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                         ": expected header \"n m\"");
            }
            if (out.n < 0 || m < 0)
                throw std::runtime_error("edge list header: negative count");
            continue;
        }
        std::int64_t u, v;
        if (!(ls >> u >> v)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": expected \"u v\"");
        }
        std::int64_t extra;
        if (ls >> extra)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": trailing tokens after edge");
        if (u < 0 || u >= out.n || v < 0 || v >= out.n)
            throw std::runtime_error("edge list line " + std::to_string(lineno) + ": edge (" +
                                     std::to_string(u) + ", " + std::to_string(v) +
                                     ") outside 0.." + std::to_string(out.n - 1));
        out.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (m < 0) throw std::runtime_error("edge list: missing \"n m\" header");
    if (seen != m)
        throw std::runtime_error("edge list: header promises " + std::to_string(m) +
                                 " edges, found " + std::to_string(seen));
    return out;
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

inline Graph to_graph(const EdgeList& el) {
    if (el.n > Graph::kMaxVertices)
        throw std::invalid_argument("graph has " + std::to_string(el.n) +
                                    " vertices; this toolkit computes on at most 64");
    return Graph(static_cast<int>(el.n), el.edges);
}

namespace detail {

constexpr const char* kGraph6Header = ">>graph6<<";

}  // namespace detail

/// Canonical graph6 line (n <= 62 single-byte size), no trailing newline.
inline std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62)
        throw std::invalid_argument("graph6 writer here covers n <= 62, got n = " +
                                    std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    // Upper triangle, column by column: x_{0,1}, x_{0,2}, x_{1,2}, ...
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    std::string_view s = text;
    if (s.substr(0, 10) == detail::kGraph6Header) s.remove_prefix(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw std::runtime_error("graph6: empty input");
    auto byte = [&](std::size_t i) -> int {
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw std::runtime_error("graph6: byte " + std::to_string(i) +
                                     " outside the printable range 63..126");
        return c - 63;
    };
    std::size_t pos = 0;
    std::int64_t n;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else {
        // 126-prefixed long forms encode n > 62; decode only to report size.
        if (s.size() >= 8 && s[1] == 126) {
            n = 0;
            for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
        } else {
            if (s.size() < 4) throw std::runtime_error("graph6: truncated size field");
            n = 0;
            for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | byte(i);
        }
        throw std::invalid_argument("graph6 input has " + std::to_string(n) +
                                    " vertices; graph6 reading here covers n <= 62");
    }
    std::int64_t nbits = n * (n - 1) / 2;
    std::size_t need = pos + static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() < need) throw std::runtime_error("graph6: truncated edge bits");
    if (s.size() > need) throw std::runtime_error("graph6: trailing bytes after edge bits");
    std::vector<std::pair<int, int>> edges;
    std::int64_t k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            int w = byte(pos + static_cast<std::size_t>(k / 6));
            if ((w >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
        }
    return Graph(static_cast<int>(n), edges);
}

/// Reads a whole stream as either graph6 (single line) or edge-list text.
/// A leading digit means edge list: ASCII digits are below 63 and can never
/// start a graph6 line.
inline Graph read_graph_stream(std::istream& in) {
    std::string all(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
    std::size_t i = all.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw std::runtime_error("graph input: empty stream");
    if (std::isdigit(static_cast<unsigned char>(all[i]))) {
        std::istringstream ss(all);
        return to_graph(read_edge_list(ss));
    }
    std::size_t end = all.find('\n', i);
    std::string line = all.substr(i, end == std::string::npos ? std::string::npos : end - i);
    if (end != std::string::npos && all.find_first_not_of(" \t\r\n", end) != std::string::npos)
        throw std::runtime_error("graph input: multiple lines in graph6 mode");
    return from_graph6(line);
}

}  // namespace secdom
