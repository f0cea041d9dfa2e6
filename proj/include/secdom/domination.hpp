#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace secdom {

/// Every vertex outside s has a neighbor in s (s itself is covered by
/// closed neighborhoods).
inline bool is_dominating(const Graph& g, VertexSet s) {
    check_subset(g, s, "is_dominating");
    VertexSet covered;
    for (int v : s) covered = covered | g.closed_neighborhood(v);
    return covered == g.vertices();
}

/// External private neighbors of v with respect to s: vertices outside s
/// whose only neighbor inside s is v.
inline VertexSet epn(const Graph& g, int v, VertexSet s) {
    check_subset(g, s, "epn");
    if (!s.contains(v)) throw std::invalid_argument("epn: v must belong to s");
    VertexSet out;
    for (int u : g.neighbors(v) - s)
        if ((g.neighbors(u) & s) == VertexSet::single(v)) out.add(u);
    return out;
}

namespace detail {

inline void check_defense_args(const Graph& g, int v, int u, VertexSet s) {
    check_subset(g, s, "defends");
    if (!s.contains(v)) throw std::invalid_argument("defends: v must belong to s");
    if (u < 0 || u >= g.vertex_count() || s.contains(u))
        throw std::invalid_argument("defends: u must lie outside s");
}

/// epns[v] for every v in s, filled in one pass over the outside vertices.
inline void epn_table(const Graph& g, VertexSet s, VertexSet* epns) {
    for (int v : s) epns[v] = VertexSet{};
    for (int u : g.vertices() - s) {
        VertexSet dom = g.neighbors(u) & s;
        if (dom.count() == 1) epns[dom.first()].add(u);
    }
}

}  // namespace detail

/// v defends u when they are adjacent and swapping u for v leaves a
/// dominating set.
inline bool defends_by_swap(const Graph& g, int v, int u, VertexSet s) {
    detail::check_defense_args(g, v, u, s);
    if (!g.has_edge(u, v)) return false;
    return is_dominating(g, s.without(v).with(u));
}

/// Private-neighbor criterion: v defends u exactly when epn(v, s) together
/// with {u, v} induces a complete graph. Stated only for dominating s, so a
/// non-dominating s is an error rather than a silent false.
inline bool defends_by_epn(const Graph& g, int v, int u, VertexSet s) {
    detail::check_defense_args(g, v, u, s);
    if (!is_dominating(g, s))
        throw std::invalid_argument("defends_by_epn: s must be dominating");
    if (!g.has_edge(u, v)) return false;
    return is_complete_on(g, epn(g, v, s).with(u).with(v));
}

/// A secure dominating set plus one defender per outside vertex, so the
/// claim can be rechecked without searching.
struct SecureCertificate {
    VertexSet set;
    std::vector<int> defender;  // defender[u] for u outside set, -1 inside
};

namespace detail {

/// Smallest defender of u under the private-neighbor criterion, -1 if none.
/// epns must be the table for s.
inline int find_defender(const Graph& g, VertexSet s, int u, const VertexSet* epns) {
    for (int v : g.neighbors(u) & s)
        if (is_complete_on(g, epns[v].with(u).with(v))) return v;
    return -1;
}

/// Allocation-free secure-domination test: domination first, then a
/// defender for every outside vertex. Backs the solver's inner loop.
inline bool secure_dominating_quick(const Graph& g, VertexSet s) {
    if (!is_dominating(g, s)) return false;
    VertexSet epns[Graph::kMaxVertices];
    epn_table(g, s, epns);
    for (int u : g.vertices() - s)
        if (find_defender(g, s, u, epns) < 0) return false;
    return true;
}

}  // namespace detail

/// Certificate with the smallest-index defender per outside vertex when s
/// is secure dominating, nothing otherwise.
inline std::optional<SecureCertificate> is_secure_dominating(const Graph& g, VertexSet s) {
    check_subset(g, s, "is_secure_dominating");
    if (!is_dominating(g, s)) return std::nullopt;
    VertexSet epns[Graph::kMaxVertices];
    detail::epn_table(g, s, epns);
    SecureCertificate cert;
    cert.set = s;
    cert.defender.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int u : g.vertices() - s) {
        int v = detail::find_defender(g, s, u, epns);
        if (v < 0) return std::nullopt;
        cert.defender[static_cast<std::size_t>(u)] = v;
    }
    return cert;
}

/// Full independent recheck of a certificate via the swap definition:
/// domination, defender membership and adjacency, and every swap.
inline bool validate_certificate(const Graph& g, const SecureCertificate& cert) {
    if (static_cast<int>(cert.defender.size()) != g.vertex_count()) return false;
    if (!cert.set.subset_of(g.vertices())) return false;
    if (!is_dominating(g, cert.set)) return false;
    for (int u = 0; u < g.vertex_count(); ++u) {
        int d = cert.defender[static_cast<std::size_t>(u)];
        if (cert.set.contains(u)) {
            if (d != -1) return false;
            continue;
        }
        if (d < 0 || !cert.set.contains(d) || !g.has_edge(u, d)) return false;
        if (!is_dominating(g, cert.set.without(d).with(u))) return false;
    }
    return true;
}

}  // namespace secdom
