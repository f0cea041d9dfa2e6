#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "domination.hpp"
#include "graph.hpp"
#include "outerplanar.hpp"

namespace secdom {

/// Exact optimum with its certificate set. For the secure variant the
/// defender map rides along; nodes_explored counts search-tree nodes.
struct SolveResult {
    int value = 0;
    VertexSet set;
    std::optional<SecureCertificate> certificate;
    std::uint64_t nodes_explored = 0;
};

struct SolveOptions {
    /// Seed the size search at ceil((n+4)/5) on outerplanar inputs with
    /// n >= 4. Verification sweeps turn this off: a sweep that assumes the
    /// bound it is checking could never observe a counterexample.
    bool use_outerplanar_lower_bound = true;
};

namespace detail {

/// Size-increasing lexicographic subset search on one connected graph.
/// Returns the lexicographically smallest qualifying set of minimum size.
/// AcceptFn sees only candidates that already dominate.
template <typename AcceptFn>
class SubsetSearch {
public:
    SubsetSearch(const Graph& g, AcceptFn accept) : g_(g), accept_(accept) {
        n_ = g.vertex_count();
        all_ = g.vertices();
        cover_capacity_ = g.max_degree() + 1;
        reach_from_.assign(static_cast<std::size_t>(n_) + 1, VertexSet{});
        for (int v = n_ - 1; v >= 0; --v)
            reach_from_[static_cast<std::size_t>(v)] =
                reach_from_[static_cast<std::size_t>(v) + 1] | g.closed_neighborhood(v);
    }

    SolveResult run(int lower_bound) {
        SolveResult out;
        for (int k = std::max(lower_bound, 1); k <= n_; ++k) {
            found_ = VertexSet{};
            if (dfs(0, k, VertexSet{}, VertexSet{}, out.nodes_explored)) {
                out.value = k;
                out.set = found_;
                return out;
            }
        }
        throw std::logic_error("subset search: no qualifying set including V itself");
    }

private:
    bool dfs(int start, int r, VertexSet chosen, VertexSet covered, std::uint64_t& nodes) {
        ++nodes;
        if (r == 0) {
            if (covered == all_ && accept_(chosen)) {
                found_ = chosen;
                return true;
            }
            return false;
        }
        VertexSet uncovered = all_ - covered;
        // Vertices no remaining candidate can ever dominate kill the branch.
        if (!uncovered.subset_of(reach_from_[static_cast<std::size_t>(start)])) return false;
        // Each added vertex covers at most Delta+1 new vertices.
        if (uncovered.count() > r * cover_capacity_) return false;
        for (int v = start; v <= n_ - r; ++v)
            if (dfs(v + 1, r - 1, chosen.with(v), covered | g_.closed_neighborhood(v), nodes))
                return true;
        return false;
    }

    const Graph& g_;
    AcceptFn accept_;
    int n_ = 0;
    int cover_capacity_ = 0;
    VertexSet all_, found_;
    std::vector<VertexSet> reach_from_;
};

/// Defense part of the secure-domination test, for sets already known to
/// dominate.
inline bool all_defended(const Graph& g, VertexSet s) {
    VertexSet epns[Graph::kMaxVertices];
    epn_table(g, s, epns);
    for (int u : g.vertices() - s)
        if (find_defender(g, s, u, epns) < 0) return false;
    return true;
}

template <typename AcceptFn, typename BoundFn>
SolveResult solve_per_component(const Graph& g, AcceptFn&& accept, BoundFn&& lower_bound) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("solver: graph must have at least one vertex");
    SolveResult total;
    for (VertexSet comp : connected_components(g)) {
        auto [h, map] = induced_subgraph(g, comp);
        SubsetSearch search(h, [&](VertexSet s) { return accept(h, s); });
        SolveResult part = search.run(lower_bound(h));
        total.value += part.value;
        total.nodes_explored += part.nodes_explored;
        for (int v : part.set) total.set.add(map[static_cast<std::size_t>(v)]);
    }
    return total;
}

}  // namespace detail

/// Minimum dominating set; disconnected inputs are solved per component and
/// summed. The reported set is the lexicographically smallest optimum.
inline SolveResult gamma(const Graph& g) {
    return detail::solve_per_component(
        g, [](const Graph&, VertexSet) { return true; },
        [](const Graph& h) { return (h.vertex_count() + h.max_degree()) / (h.max_degree() + 1); });
}

/// Minimum secure dominating set with certificate. Candidates are filtered
/// by domination first, then by the private-neighbor defense criterion.
inline SolveResult gamma_s(const Graph& g, SolveOptions opts = {}) {
    SolveResult out = detail::solve_per_component(
        g, [](const Graph& h, VertexSet s) { return detail::all_defended(h, s); },
        [&](const Graph& h) {
            int n = h.vertex_count();
            int bound = (n + h.max_degree()) / (h.max_degree() + 1);
            if (opts.use_outerplanar_lower_bound && n >= 4 && is_outerplanar(h))
                bound = std::max(bound, (n + 8) / 5);  // ceil((n+4)/5)
            return bound;
        });
    out.certificate = is_secure_dominating(g, out.set);
    if (!out.certificate)
        throw std::logic_error("gamma_s: optimal set failed its own certificate");
    return out;
}

/// Reference implementation: scan all subsets in increasing popcount and
/// test with the swap definition only. Independent of everything gamma_s
/// relies on beyond is_dominating.
inline SolveResult gamma_s_bruteforce(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("gamma_s_bruteforce: graph must have at least one vertex");
    if (n > 16)
        throw std::invalid_argument("gamma_s_bruteforce: n = " + std::to_string(n) +
                                    " exceeds the 2^n scan tier (16)");
    auto secure_by_swap = [&](VertexSet s) {
        if (!is_dominating(g, s)) return false;
        for (int u : g.vertices() - s) {
            bool defended = false;
            for (int v : g.neighbors(u) & s)
                if (is_dominating(g, s.without(v).with(u))) {
                    defended = true;
                    break;
                }
            if (!defended) return false;
        }
        return true;
    };
    SolveResult out;
    for (int k = 0; k <= n; ++k) {
        std::uint64_t mask = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
        std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            ++out.nodes_explored;
            VertexSet s{mask};
            if (secure_by_swap(s)) {
                out.value = k;
                out.set = s;
                out.certificate = SecureCertificate{s, std::vector<int>(static_cast<std::size_t>(n), -1)};
                for (int u : g.vertices() - s)
                    for (int v : g.neighbors(u) & s)
                        if (is_dominating(g, s.without(v).with(u))) {
                            out.certificate->defender[static_cast<std::size_t>(u)] = v;
                            break;
                        }
                return out;
            }
            if (k == 0) break;
            std::uint64_t c = mask & -mask;
            std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;  // next k-subset (Gosper)
        }
    }
    throw std::logic_error("gamma_s_bruteforce: V itself must qualify");
}

}  // namespace secdom
