#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace secdom {

/// Subset of a vertex universe {0..n-1}, n <= 64, stored as one bit word.
/// The universal currency of all set operations in this library.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet full(int n) {
        if (n <= 0) return VertexSet{};
        if (n >= 64) return VertexSet{~std::uint64_t{0}};
        return VertexSet{(std::uint64_t{1} << n) - 1};
    }

    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s.add(v);
        return s;
    }

    static VertexSet single(int v) { return VertexSet{}.with(v); }

    constexpr bool contains(int v) const {
        return v >= 0 && v < 64 && ((bits_ >> v) & 1u) != 0;
    }

    void add(int v) { bits_ |= bit(v); }
    void remove(int v) { bits_ &= ~bit(v); }

    constexpr VertexSet with(int v) const { return VertexSet{bits_ | bit(v)}; }
    constexpr VertexSet without(int v) const { return VertexSet{bits_ & ~bit(v)}; }

    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    /// Lowest vertex in the set, -1 when empty.
    constexpr int first() const {
        return bits_ == 0 ? -1 : std::countr_zero(bits_);
    }

    constexpr std::uint64_t raw() const { return bits_; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet{a.bits_ ^ b.bits_}; }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }

    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

    /// Iterates set members in ascending order.
    class iterator {
    public:
        using value_type = int;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& other) const { return rest_ != other.rest_; }

    private:
        std::uint64_t rest_;
    };

    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{0}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v : *this) out.push_back(v);
        return out;
    }

private:
    static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

    std::uint64_t bits_ = 0;
};

/// Compares two equal-cardinality sets as ascending vertex sequences.
/// For |a| == |b| the sequences first differ at min(a ^ b).
inline bool lex_before(VertexSet a, VertexSet b) {
    VertexSet diff = a ^ b;
    if (diff.empty()) return false;
    return a.contains(diff.first());
}

/// Immutable simple undirected graph on vertices 0..n-1 with bitset
/// adjacency rows. Symmetric and loop-free by construction.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;

    Graph(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("graph: vertex count " + std::to_string(n) +
                                        " outside the bitset tier [0, 64]");
        n_ = n;
        adj_.assign(static_cast<std::size_t>(n), VertexSet{});
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("graph: edge (" + std::to_string(u) + ", " +
                                            std::to_string(v) + ") has an endpoint outside 0.." +
                                            std::to_string(n - 1));
            if (u == v)
                throw std::invalid_argument("graph: loop edge (" + std::to_string(u) + ", " +
                                            std::to_string(v) + ") not allowed");
            if (adj_[static_cast<std::size_t>(u)].contains(v)) continue;  // duplicates collapse
            adj_[static_cast<std::size_t>(u)].add(v);
            adj_[static_cast<std::size_t>(v)].add(u);
            ++m_;
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    VertexSet vertices() const { return VertexSet::full(n_); }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    VertexSet closed_neighborhood(int v) const { return neighbors(v).with(v); }

    int degree(int v) const { return neighbors(v).count(); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, adj_[static_cast<std::size_t>(v)].count());
        return d;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].contains(v);
    }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("graph: vertex " + std::to_string(v) + " outside 0.." +
                                    std::to_string(n_ - 1));
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

inline void check_subset(const Graph& g, VertexSet s, const char* what) {
    if (!s.subset_of(g.vertices()))
        throw std::out_of_range(std::string(what) + ": vertex set not contained in 0.." +
                                std::to_string(g.vertex_count() - 1));
}

/// Subgraph induced by s, plus the relabeling map: map[i] = original vertex
/// of the new vertex i. New labels follow ascending original order.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s) {
    check_subset(g, s, "induced_subgraph");
    std::vector<int> map = s.to_vector();
    std::vector<int> inv(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < map.size(); ++i) inv[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : s)
        for (int v : g.neighbors(u) & s)
            if (u < v) edges.emplace_back(inv[static_cast<std::size_t>(u)], inv[static_cast<std::size_t>(v)]);
    return {Graph(static_cast<int>(map.size()), edges), std::move(map)};
}

/// True iff every pair in s is adjacent; vacuously true for |s| <= 1.
inline bool is_complete_on(const Graph& g, VertexSet s) {
    check_subset(g, s, "is_complete_on");
    for (int v : s)
        if (!(s.without(v)).subset_of(g.neighbors(v))) return false;
    return true;
}

/// Maximal connected vertex sets, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> parts;
    VertexSet seen;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen.contains(v)) continue;
        VertexSet comp = VertexSet::single(v);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int u : frontier) next = next | g.neighbors(u);
            frontier = next - comp;
            comp = comp | next;
        }
        parts.push_back(comp);
        seen = seen | comp;
    }
    return parts;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return connected_components(g).size() == 1;
}

/// Two-coloring when one exists; the side containing each component's
/// smallest vertex goes first, so the result is deterministic.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    VertexSet a, b, seen;
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (seen.contains(start)) continue;
        a.add(start);
        seen.add(start);
        VertexSet frontier = VertexSet::single(start);
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) {
                VertexSet& same = a.contains(v) ? a : b;
                VertexSet& other = a.contains(v) ? b : a;
                VertexSet nb = g.neighbors(v);
                if (nb.intersects(same)) return std::nullopt;  // odd cycle
                next = next | (nb - seen);
                other = other | nb;
            }
            seen = seen | next;
            frontier = next;
        }
    }
    return std::make_pair(a, b);
}

/// Copy of g with vertices relabeled: perm[old] = new.
inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw std::invalid_argument("permuted: permutation size mismatch");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const auto& [u, v] : g.edge_list())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(g.vertex_count(), edges);
}

inline Graph with_edge(const Graph& g, int u, int v) {
    auto edges = g.edge_list();
    edges.emplace_back(u, v);
    return Graph(g.vertex_count(), edges);
}

inline Graph without_edge(const Graph& g, int u, int v) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.edge_list())
        if (!((a == u && b == v) || (a == v && b == u))) edges.emplace_back(a, b);
    return Graph(g.vertex_count(), edges);
}

/// Disjoint union; vertices of b are shifted by a.vertex_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    int na = a.vertex_count();
    if (na + b.vertex_count() > Graph::kMaxVertices)
        throw std::invalid_argument("disjoint_union: result exceeds the bitset tier");
    auto edges = a.edge_list();
    for (const auto& [u, v] : b.edge_list()) edges.emplace_back(u + na, v + na);
    return Graph(na + b.vertex_count(), edges);
}

}  // namespace secdom
