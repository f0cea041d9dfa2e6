#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "domination.hpp"
#include "graph.hpp"

namespace secdom {

/// Labeled copy of the tight construction inside a host graph: a hub, k
/// spokes, 2k rim vertices (two per spoke, all adjacent to the hub), and one
/// pendant triangle per spoke. Edges are a subset of the host's; the labels
/// exhaust the host's vertices.
struct ExtremalWitness {
    int k = 0;
    int hub = -1;
    std::vector<int> spokes;
    std::vector<int> rim;
    std::vector<std::pair<int, int>> triangles;
};

/// The tight family: hub 0, spokes 1..k, rim k+1..3k (spoke i owns rim
/// 2i-1, 2i counting inside the rim block), triangle pair (3k+2i-1, 3k+2i)
/// per spoke. n = 5k+1, m = 7k.
inline std::pair<Graph, ExtremalWitness> build_extremal(int k) {
    if (k < 2) throw std::invalid_argument("build_extremal: k must be at least 2");
    if (5 * k + 1 > Graph::kMaxVertices)
        throw std::invalid_argument("build_extremal: 5k+1 exceeds the bitset tier");
    ExtremalWitness w;
    w.k = k;
    w.hub = 0;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) {
        int spoke = i;
        int rim1 = k + 2 * i - 1, rim2 = k + 2 * i;
        int u1 = 3 * k + 2 * i - 1, u2 = 3 * k + 2 * i;
        w.spokes.push_back(spoke);
        w.rim.push_back(rim1);
        w.rim.push_back(rim2);
        w.triangles.emplace_back(u1, u2);
        edges.emplace_back(w.hub, rim1);
        edges.emplace_back(w.hub, rim2);
        edges.emplace_back(spoke, rim1);
        edges.emplace_back(spoke, rim2);
        edges.emplace_back(spoke, u1);
        edges.emplace_back(spoke, u2);
        edges.emplace_back(u1, u2);
    }
    return {Graph(5 * k + 1, edges), std::move(w)};
}

/// Recheck a witness against its defining invariant: labels exhaust V(g)
/// and every edge of the construction is an edge of g.
inline bool validate_extremal_witness(const Graph& g, const ExtremalWitness& w) {
    int k = w.k;
    if (k < 2) return false;
    if (g.vertex_count() != 5 * k + 1) return false;
    if (static_cast<int>(w.spokes.size()) != k || static_cast<int>(w.rim.size()) != 2 * k ||
        static_cast<int>(w.triangles.size()) != k)
        return false;
    VertexSet used;
    auto claim = [&](int v) {
        if (v < 0 || v >= g.vertex_count() || used.contains(v)) return false;
        used.add(v);
        return true;
    };
    if (!claim(w.hub)) return false;
    for (int v : w.spokes)
        if (!claim(v)) return false;
    for (int v : w.rim)
        if (!claim(v)) return false;
    for (auto [a, b] : w.triangles)
        if (!claim(a) || !claim(b)) return false;
    if (used != g.vertices()) return false;
    for (int i = 0; i < k; ++i) {
        int spoke = w.spokes[static_cast<std::size_t>(i)];
        int rim1 = w.rim[static_cast<std::size_t>(2 * i)];
        int rim2 = w.rim[static_cast<std::size_t>(2 * i + 1)];
        auto [u1, u2] = w.triangles[static_cast<std::size_t>(i)];
        if (!g.has_edge(w.hub, rim1) || !g.has_edge(w.hub, rim2)) return false;
        if (!g.has_edge(spoke, rim1) || !g.has_edge(spoke, rim2)) return false;
        if (!g.has_edge(spoke, u1) || !g.has_edge(spoke, u2) || !g.has_edge(u1, u2)) return false;
    }
    return true;
}

/// Bookkeeping for a secure dominating set s: members split by how many
/// external private neighbors they keep (2, 1, 0), the outside vertices
/// with at least two s-neighbors, and the counting identities over them.
struct PartitionProfile {
    VertexSet s2, s1, s0, c_set;
    int x2 = 0, x1 = 0, x0 = 0, c = 0;
    int x = 0, y = 0;
    // c == 2*x2 + 3*x1 + 4*x0 - 4; holds exactly when |s| == (n+4)/5
    bool tight_identity = false;
    int s1_max_defended = 0;          // most outside vertices defended by one s1 member
    int s1_max_defended_in_c = 0;     // ditto restricted to c_set
};

inline PartitionProfile partition_profile(const Graph& g, VertexSet s) {
    if (!is_secure_dominating(g, s))
        throw std::invalid_argument("partition_profile: s is not secure dominating");
    PartitionProfile p;
    for (int v : s) {
        int e = epn(g, v, s).count();
        if (e > 2)
            throw std::invalid_argument(
                "partition_profile: |epn| > 2 at vertex " + std::to_string(v) +
                "; the profile's counting assumes an outerplanar host");
        if (e == 2) p.s2.add(v);
        else if (e == 1) p.s1.add(v);
        else p.s0.add(v);
    }
    for (int u : g.vertices() - s)
        if ((g.neighbors(u) & s).count() >= 2) p.c_set.add(u);
    p.x2 = p.s2.count();
    p.x1 = p.s1.count();
    p.x0 = p.s0.count();
    p.c = p.c_set.count();
    p.x = s.count();
    p.y = g.vertex_count() - p.x;
    p.tight_identity = p.c == 2 * p.x2 + 3 * p.x1 + 4 * p.x0 - 4;
    for (int v : p.s1) {
        int total = 0, in_c = 0;
        for (int u : g.vertices() - s)
            if (defends_by_epn(g, v, u, s)) {
                ++total;
                if (p.c_set.contains(u)) ++in_c;
            }
        p.s1_max_defended = std::max(p.s1_max_defended, total);
        p.s1_max_defended_in_c = std::max(p.s1_max_defended_in_c, in_c);
    }
    return p;
}

namespace detail {

/// Staged depth-first search for the construction as a spanning subgraph:
/// hub, then the whole rim sequence, then spokes, then triangle pairs, each
/// ascending, so the first witness found is the lexicographically smallest
/// by (hub, rim order, spoke order, triangle order).
class ExtremalSearch {
public:
    ExtremalSearch(const Graph& g, int k) : g_(g), k_(k) {
        w_.k = k;
        w_.rim.assign(static_cast<std::size_t>(2 * k), -1);
        w_.spokes.assign(static_cast<std::size_t>(k), -1);
    }

    std::optional<ExtremalWitness> run() {
        for (int hub = 0; hub < g_.vertex_count(); ++hub) {
            if (g_.degree(hub) < 2 * k_) continue;
            w_.hub = hub;
            used_ = VertexSet::single(hub);
            if (rim_stage(0)) return w_;
        }
        return std::nullopt;
    }

private:
    bool rim_stage(int j) {
        if (j == 2 * k_) return spoke_stage(0);
        VertexSet avail = g_.neighbors(w_.hub) - used_;
        if (avail.count() < 2 * k_ - j) return false;
        for (int v : avail) {
            w_.rim[static_cast<std::size_t>(j)] = v;
            used_.add(v);
            if (rim_stage(j + 1)) return true;
            used_.remove(v);
        }
        return false;
    }

    bool spoke_stage(int i) {
        if (i == k_) return triangle_stage(0);
        VertexSet common = g_.neighbors(w_.rim[static_cast<std::size_t>(2 * i)]) &
                           g_.neighbors(w_.rim[static_cast<std::size_t>(2 * i + 1)]);
        for (int v : common - used_) {
            w_.spokes[static_cast<std::size_t>(i)] = v;
            used_.add(v);
            if (spoke_stage(i + 1)) return true;
            used_.remove(v);
        }
        return false;
    }

    bool triangle_stage(int i) {
        if (i == k_) return true;
        int spoke = w_.spokes[static_cast<std::size_t>(i)];
        for (int u1 : g_.neighbors(spoke) - used_) {
            VertexSet partners = (g_.neighbors(spoke) & g_.neighbors(u1)) - used_;
            for (int u2 : partners) {
                if (u2 <= u1) continue;  // the pair is unordered
                w_.triangles.emplace_back(u1, u2);
                used_.add(u1);
                used_.add(u2);
                if (triangle_stage(i + 1)) return true;
                used_.remove(u1);
                used_.remove(u2);
                w_.triangles.pop_back();
            }
        }
        return false;
    }

    const Graph& g_;
    int k_;
    VertexSet used_;
    ExtremalWitness w_;
};

inline int extremal_k_for(const Graph& g, const char* who) {
    int n = g.vertex_count();
    if (n < 11 || n % 5 != 1)
        throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(n) +
                                    " is not of the form 5k+1 with k >= 2");
    return n / 5;
}

}  // namespace detail

/// Search for the construction as a spanning subgraph by its own structure:
/// pick the hub, take its rim from the hub's neighbors two per spoke, match
/// spokes to rim pairs, close one triangle per spoke from the leftovers.
inline std::optional<ExtremalWitness> detect_extremal_structural(const Graph& g) {
    int k = detail::extremal_k_for(g, "detect_extremal_structural");
    return detail::ExtremalSearch(g, k).run();
}

/// Independent cross-check: generic backtracking injection of the
/// construction's vertices onto V(g) carrying every construction edge to an
/// edge of g, with degree pruning. Shares no search logic with the
/// structural detector.
inline std::optional<ExtremalWitness> spanning_subgraph_oracle(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("spanning_subgraph_oracle: k must be at least 2");
    if (g.vertex_count() != 5 * k + 1)
        throw std::invalid_argument("spanning_subgraph_oracle: host has " +
                                    std::to_string(g.vertex_count()) + " vertices, wanted " +
                                    std::to_string(5 * k + 1));
    auto [pattern, labels] = build_extremal(k);
    int n = pattern.vertex_count();
    // map pattern vertices gadget by gadget so every new vertex (except the
    // hub) has a mapped pattern neighbor
    std::vector<int> order{labels.hub};
    for (int i = 0; i < k; ++i) {
        order.push_back(labels.rim[static_cast<std::size_t>(2 * i)]);
        order.push_back(labels.rim[static_cast<std::size_t>(2 * i + 1)]);
        order.push_back(labels.spokes[static_cast<std::size_t>(i)]);
        order.push_back(labels.triangles[static_cast<std::size_t>(i)].first);
        order.push_back(labels.triangles[static_cast<std::size_t>(i)].second);
    }
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    VertexSet used;
    auto backtrack = [&](auto&& self, std::size_t t) -> bool {
        if (t == order.size()) return true;
        int pv = order[static_cast<std::size_t>(t)];
        VertexSet candidates = g.vertices() - used;
        for (int q : pattern.neighbors(pv)) {
            int img = image[static_cast<std::size_t>(q)];
            if (img >= 0) candidates = candidates & g.neighbors(img);
        }
        for (int v : candidates) {
            if (g.degree(v) < pattern.degree(pv)) continue;
            image[static_cast<std::size_t>(pv)] = v;
            used.add(v);
            if (self(self, t + 1)) return true;
            used.remove(v);
            image[static_cast<std::size_t>(pv)] = -1;
        }
        return false;
    };
    if (!backtrack(backtrack, 0)) return std::nullopt;
    ExtremalWitness w;
    w.k = k;
    w.hub = image[static_cast<std::size_t>(labels.hub)];
    for (int v : labels.spokes) w.spokes.push_back(image[static_cast<std::size_t>(v)]);
    for (int v : labels.rim) w.rim.push_back(image[static_cast<std::size_t>(v)]);
    for (auto [a, b] : labels.triangles)
        w.triangles.emplace_back(image[static_cast<std::size_t>(a)],
                                 image[static_cast<std::size_t>(b)]);
    return w;
}

}  // namespace secdom
