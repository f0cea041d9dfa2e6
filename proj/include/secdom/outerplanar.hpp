#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace secdom {
namespace detail {

/// Left-right planarity test on plain adjacency (no bitset cap, so the
/// one-extra-vertex reduction below can exceed 64 vertices). Decision only,
/// no embedding.
class LRPlanarity {
public:
    LRPlanarity(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
        adj_.assign(static_cast<std::size_t>(n), {});
        for (auto [u, v] : edges) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        m_ = static_cast<int>(edges.size());
    }

    bool run() {
        if (n_ <= 4) return true;
        if (m_ > 3 * n_ - 6) return false;
        height_.assign(static_cast<std::size_t>(n_), -1);
        parent_edge_.assign(static_cast<std::size_t>(n_), -1);
        oriented_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
        src_.reserve(static_cast<std::size_t>(m_));
        dst_.reserve(static_cast<std::size_t>(m_));
        lowpt_.reserve(static_cast<std::size_t>(m_));
        lowpt2_.reserve(static_cast<std::size_t>(m_));
        nesting_.reserve(static_cast<std::size_t>(m_));
        for (int v = 0; v < n_; ++v)
            if (height_[static_cast<std::size_t>(v)] == -1) {
                height_[static_cast<std::size_t>(v)] = 0;
                orient(v);
            }
        ref_.assign(src_.size(), -1);
        lowpt_edge_.assign(src_.size(), -1);
        stack_bottom_.assign(src_.size(), 0);
        ordered_out_.assign(static_cast<std::size_t>(n_), {});
        for (int e = 0; e < static_cast<int>(src_.size()); ++e)
            ordered_out_[static_cast<std::size_t>(src_[static_cast<std::size_t>(e)])].push_back(e);
        for (auto& out : ordered_out_)
            std::sort(out.begin(), out.end(), [&](int a, int b) {
                auto na = nesting_[static_cast<std::size_t>(a)], nb = nesting_[static_cast<std::size_t>(b)];
                return na != nb ? na < nb : a < b;
            });
        for (int v = 0; v < n_; ++v)
            if (parent_edge_[static_cast<std::size_t>(v)] == -1) {
                stack_.clear();  // components are independent
                if (!test(v)) return false;
            }
        return true;
    }

private:
    struct Interval {
        int low = -1, high = -1;
        bool empty() const { return low == -1 && high == -1; }
    };
    struct ConflictPair {
        Interval L, R;
        void swap_sides() { std::swap(L, R); }
    };

    std::size_t key(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }

    /// First pass: DFS orientation with lowpoint bookkeeping. The nesting
    /// depth doubles the lowpoint and adds one for chordal edges so the
    /// second pass visits outgoing edges in a planarity-compatible order.
    void orient(int v) {
        int e = parent_edge_[static_cast<std::size_t>(v)];
        for (int w : adj_[static_cast<std::size_t>(v)]) {
            if (oriented_[key(v, w)]) continue;
            oriented_[key(v, w)] = oriented_[key(w, v)] = 1;
            int id = static_cast<int>(src_.size());
            src_.push_back(v);
            dst_.push_back(w);
            lowpt_.push_back(height_[static_cast<std::size_t>(v)]);
            lowpt2_.push_back(height_[static_cast<std::size_t>(v)]);
            nesting_.push_back(0);
            if (height_[static_cast<std::size_t>(w)] == -1) {  // tree edge
                parent_edge_[static_cast<std::size_t>(w)] = id;
                height_[static_cast<std::size_t>(w)] = height_[static_cast<std::size_t>(v)] + 1;
                orient(w);
            } else {  // back edge
                lowpt_[static_cast<std::size_t>(id)] = height_[static_cast<std::size_t>(w)];
            }
            nesting_[static_cast<std::size_t>(id)] = 2 * lowpt_[static_cast<std::size_t>(id)];
            if (lowpt2_[static_cast<std::size_t>(id)] < height_[static_cast<std::size_t>(v)])
                ++nesting_[static_cast<std::size_t>(id)];
            if (e != -1) {
                auto se = static_cast<std::size_t>(e);
                auto si = static_cast<std::size_t>(id);
                if (lowpt_[si] < lowpt_[se]) {
                    lowpt2_[se] = std::min(lowpt_[se], lowpt2_[si]);
                    lowpt_[se] = lowpt_[si];
                } else if (lowpt_[si] > lowpt_[se]) {
                    lowpt2_[se] = std::min(lowpt2_[se], lowpt_[si]);
                } else {
                    lowpt2_[se] = std::min(lowpt2_[se], lowpt2_[si]);
                }
            }
        }
    }

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt_[static_cast<std::size_t>(i.high)] > lowpt_[static_cast<std::size_t>(b)];
    }

    int lowest(const ConflictPair& p) const {
        if (p.L.empty()) return lowpt_[static_cast<std::size_t>(p.R.low)];
        if (p.R.empty()) return lowpt_[static_cast<std::size_t>(p.L.low)];
        return std::min(lowpt_[static_cast<std::size_t>(p.L.low)],
                        lowpt_[static_cast<std::size_t>(p.R.low)]);
    }

    /// Second pass: maintain the conflict-pair stack; a failed merge means a
    /// left-right constraint is unsatisfiable, hence non-planar.
    bool test(int v) {
        int e = parent_edge_[static_cast<std::size_t>(v)];
        const auto& out = ordered_out_[static_cast<std::size_t>(v)];
        for (int ei : out) {
            auto sei = static_cast<std::size_t>(ei);
            stack_bottom_[sei] = stack_.size();
            int w = dst_[sei];
            if (ei == parent_edge_[static_cast<std::size_t>(w)]) {
                if (!test(w)) return false;
            } else {
                lowpt_edge_[sei] = ei;
                stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
            }
            if (lowpt_[sei] < height_[static_cast<std::size_t>(v)]) {  // ei has a return edge
                if (ei == out.front()) {
                    if (e != -1) lowpt_edge_[static_cast<std::size_t>(e)] = lowpt_edge_[sei];
                } else if (!add_constraints(ei, e)) {
                    return false;
                }
            }
        }
        if (e != -1) {  // v is not a root
            int u = src_[static_cast<std::size_t>(e)];
            trim_back_edges(u);
            if (lowpt_[static_cast<std::size_t>(e)] < height_[static_cast<std::size_t>(u)] &&
                !stack_.empty()) {
                int hl = stack_.back().L.high;
                int hr = stack_.back().R.high;
                ref_[static_cast<std::size_t>(e)] =
                    (hl != -1 && (hr == -1 || lowpt_[static_cast<std::size_t>(hl)] >
                                                  lowpt_[static_cast<std::size_t>(hr)]))
                        ? hl
                        : hr;
            }
        }
        return true;
    }

    bool add_constraints(int ei, int e) {
        auto sei = static_cast<std::size_t>(ei);
        ConflictPair p;
        // Merge the return edges of ei into p.R.
        do {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.L.empty()) q.swap_sides();
            if (!q.L.empty()) return false;
            if (lowpt_[static_cast<std::size_t>(q.R.low)] > lowpt_[static_cast<std::size_t>(e)]) {
                if (p.R.empty()) p.R.high = q.R.high;
                else ref_[static_cast<std::size_t>(p.R.low)] = q.R.high;
                p.R.low = q.R.low;
            } else {
                ref_[static_cast<std::size_t>(q.R.low)] = lowpt_edge_[static_cast<std::size_t>(e)];
            }
        } while (stack_.size() > stack_bottom_[sei]);
        // Merge conflicting return edges of the earlier siblings into p.L.
        while (!stack_.empty() &&
               (conflicting(stack_.back().L, ei) || conflicting(stack_.back().R, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.R, ei)) q.swap_sides();
            if (conflicting(q.R, ei)) return false;
            if (p.R.low != -1) ref_[static_cast<std::size_t>(p.R.low)] = q.R.high;
            if (q.R.low != -1) p.R.low = q.R.low;
            if (p.L.empty()) p.L.high = q.L.high;
            else ref_[static_cast<std::size_t>(p.L.low)] = q.L.high;
            p.L.low = q.L.low;
        }
        if (!p.L.empty() || !p.R.empty()) stack_.push_back(p);
        return true;
    }

    void trim_back_edges(int u) {
        int hu = height_[static_cast<std::size_t>(u)];
        while (!stack_.empty() && lowest(stack_.back()) == hu) stack_.pop_back();
        if (stack_.empty()) return;
        ConflictPair p = stack_.back();
        stack_.pop_back();
        while (p.L.high != -1 && dst_[static_cast<std::size_t>(p.L.high)] == u)
            p.L.high = ref_[static_cast<std::size_t>(p.L.high)];
        if (p.L.high == -1 && p.L.low != -1) {  // just emptied
            ref_[static_cast<std::size_t>(p.L.low)] = p.R.low;
            p.L.low = -1;
        }
        while (p.R.high != -1 && dst_[static_cast<std::size_t>(p.R.high)] == u)
            p.R.high = ref_[static_cast<std::size_t>(p.R.high)];
        if (p.R.high == -1 && p.R.low != -1) {
            ref_[static_cast<std::size_t>(p.R.low)] = p.L.low;
            p.R.low = -1;
        }
        stack_.push_back(p);
    }

    int n_;
    int m_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> ordered_out_;
    std::vector<int> height_, parent_edge_;
    std::vector<char> oriented_;
    std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_, ref_, lowpt_edge_;
    std::vector<std::size_t> stack_bottom_;
    std::vector<ConflictPair> stack_;
};

inline bool lr_planar(int n, const std::vector<std::pair<int, int>>& edges) {
    return LRPlanarity(n, edges).run();
}

}  // namespace detail

/// Outerplanar iff adding one vertex adjacent to everything leaves the
/// graph planar; decided per component, with the m <= 2n-3 edge bound as a
/// cheap rejection filter.
inline bool is_outerplanar(const Graph& g) {
    for (VertexSet comp : connected_components(g)) {
        auto [h, map] = induced_subgraph(g, comp);
        int n = h.vertex_count();
        if (n <= 3) continue;
        if (h.edge_count() > 2 * n - 3) return false;
        auto edges = h.edge_list();
        for (int v = 0; v < n; ++v) edges.emplace_back(v, n);
        if (!detail::lr_planar(n + 1, edges)) return false;
    }
    return true;
}

/// A subdivision of K4 or of K_{2,3} located inside the host graph:
/// the branch vertices plus one internally disjoint path per pattern edge.
struct ForbiddenWitness {
    enum class Kind { K4, K23 };
    Kind kind = Kind::K4;
    VertexSet branch_vertices;
    std::vector<std::vector<int>> paths;
};

namespace detail {

/// Small pattern graph to search for as a subdivision. Pattern vertices
/// inside one symmetry class are mapped in ascending host order to skip
/// equivalent assignments.
struct PatternSpec {
    int p = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> classes;
};

inline PatternSpec k4_pattern() {
    return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {{0, 1, 2, 3}}};
}
inline PatternSpec k23_pattern() {
    return {5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, {{0, 1}, {2, 3, 4}}};
}
inline PatternSpec k5_pattern() {
    PatternSpec s;
    s.p = 5;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) s.edges.emplace_back(i, j);
    s.classes = {{0, 1, 2, 3, 4}};
    return s;
}
inline PatternSpec k33_pattern() {
    PatternSpec s;
    s.p = 6;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) s.edges.emplace_back(i, j);
    s.classes = {{0, 1, 2}, {3, 4, 5}};
    return s;
}

class SubdivisionSearch {
public:
    SubdivisionSearch(const Graph& g, const PatternSpec& spec) : g_(g), spec_(spec) {
        deg_.assign(static_cast<std::size_t>(spec.p), 0);
        for (auto [a, b] : spec.edges) {
            ++deg_[static_cast<std::size_t>(a)];
            ++deg_[static_cast<std::size_t>(b)];
        }
        class_of_.assign(static_cast<std::size_t>(spec.p), 0);
        for (std::size_t c = 0; c < spec.classes.size(); ++c)
            for (int pv : spec.classes[c]) class_of_[static_cast<std::size_t>(pv)] = static_cast<int>(c);
        branch_.assign(static_cast<std::size_t>(spec.p), -1);
    }

    std::optional<std::vector<std::vector<int>>> run(std::vector<int>& branch_out) {
        if (map_branch(0)) {
            branch_out = branch_;
            return paths_;
        }
        return std::nullopt;
    }

private:
    bool map_branch(int pv) {
        if (pv == spec_.p) {
            paths_.clear();
            VertexSet branch_set;
            for (int b : branch_) branch_set.add(b);
            return route(0, branch_set);
        }
        auto spv = static_cast<std::size_t>(pv);
        // ascending within a symmetry class; prior class member bounds us
        int lo = 0;
        for (int q = 0; q < pv; ++q)
            if (class_of_[static_cast<std::size_t>(q)] == class_of_[spv])
                lo = std::max(lo, branch_[static_cast<std::size_t>(q)] + 1);
        for (int v = lo; v < g_.vertex_count(); ++v) {
            if (g_.degree(v) < deg_[spv]) continue;
            bool used = false;
            for (int q = 0; q < pv; ++q)
                if (branch_[static_cast<std::size_t>(q)] == v) used = true;
            if (used) continue;
            branch_[spv] = v;
            if (map_branch(pv + 1)) return true;
        }
        branch_[spv] = -1;
        return false;
    }

    /// One internally disjoint path per pattern edge, in pattern-edge order.
    bool route(std::size_t edge_idx, VertexSet blocked) {
        if (edge_idx == spec_.edges.size()) return true;
        auto [pa, pb] = spec_.edges[edge_idx];
        int a = branch_[static_cast<std::size_t>(pa)];
        int b = branch_[static_cast<std::size_t>(pb)];
        std::vector<int> path{a};
        return extend(path, b, blocked, edge_idx, blocked);
    }

    bool extend(std::vector<int>& path, int target, VertexSet blocked, std::size_t edge_idx,
                VertexSet original_blocked) {
        int cur = path.back();
        if (g_.has_edge(cur, target)) {
            path.push_back(target);
            paths_.push_back(path);
            VertexSet next_blocked = original_blocked;
            for (const auto& p : paths_)
                for (std::size_t i = 1; i + 1 < p.size(); ++i) next_blocked.add(p[i]);
            if (route(edge_idx + 1, next_blocked)) return true;
            paths_.pop_back();
            path.pop_back();
        }
        for (int w : g_.neighbors(cur) - blocked) {
            path.push_back(w);
            if (extend(path, target, blocked.with(w), edge_idx, original_blocked)) return true;
            path.pop_back();
        }
        return false;
    }

    const Graph& g_;
    PatternSpec spec_;
    std::vector<int> deg_, class_of_, branch_;
    std::vector<std::vector<int>> paths_;
};

inline std::optional<std::vector<std::vector<int>>> find_pattern_subdivision(
    const Graph& g, const PatternSpec& spec, std::vector<int>& branch_out) {
    return SubdivisionSearch(g, spec).run(branch_out);
}

}  // namespace detail

constexpr int kSubdivisionSearchCap = 12;

/// Exhaustive search for a K4 or K_{2,3} subdivision; a witness exists
/// exactly when the graph is not outerplanar. Slow by design: this is the
/// cross-check for is_outerplanar, capped to keep the search bounded.
inline std::optional<ForbiddenWitness> find_forbidden_subdivision(
    const Graph& g, int cap = kSubdivisionSearchCap) {
    if (g.vertex_count() > cap)
        throw std::invalid_argument("find_forbidden_subdivision: n = " +
                                    std::to_string(g.vertex_count()) +
                                    " exceeds the search cap " + std::to_string(cap));
    std::vector<int> branch;
    if (auto paths = detail::find_pattern_subdivision(g, detail::k4_pattern(), branch)) {
        ForbiddenWitness w;
        w.kind = ForbiddenWitness::Kind::K4;
        for (int b : branch) w.branch_vertices.add(b);
        w.paths = std::move(*paths);
        return w;
    }
    if (auto paths = detail::find_pattern_subdivision(g, detail::k23_pattern(), branch)) {
        ForbiddenWitness w;
        w.kind = ForbiddenWitness::Kind::K23;
        for (int b : branch) w.branch_vertices.add(b);
        w.paths = std::move(*paths);
        return w;
    }
    return std::nullopt;
}

/// Structural recheck of a witness: simple paths in the host graph,
/// internally disjoint, whose endpoint pairs contract to K4 or K_{2,3}.
inline bool validate_witness(const Graph& g, const ForbiddenWitness& w) {
    int want_branches = w.kind == ForbiddenWitness::Kind::K4 ? 4 : 5;
    if (w.branch_vertices.count() != want_branches) return false;
    if (w.paths.size() != 6) return false;
    if (!w.branch_vertices.subset_of(g.vertices())) return false;
    VertexSet interiors;
    std::vector<std::pair<int, int>> contracted;
    for (const auto& path : w.paths) {
        if (path.size() < 2) return false;
        VertexSet on_path;
        for (std::size_t i = 0; i < path.size(); ++i) {
            int v = path[i];
            if (v < 0 || v >= g.vertex_count() || on_path.contains(v)) return false;
            on_path.add(v);
            if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
        }
        int a = path.front(), b = path.back();
        if (!w.branch_vertices.contains(a) || !w.branch_vertices.contains(b)) return false;
        VertexSet inner = on_path.without(a).without(b);
        if (inner.intersects(w.branch_vertices) || inner.intersects(interiors)) return false;
        interiors = interiors | inner;
        contracted.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(contracted.begin(), contracted.end());
    if (std::adjacent_find(contracted.begin(), contracted.end()) != contracted.end()) return false;
    // path-degree of each branch vertex in the contracted multigraph
    std::vector<int> branches = w.branch_vertices.to_vector();
    auto path_degree = [&](int v) {
        int d = 0;
        for (auto [a, b] : contracted) d += (a == v) + (b == v);
        return d;
    };
    if (w.kind == ForbiddenWitness::Kind::K4) {
        for (int b : branches)
            if (path_degree(b) != 3) return false;
        return true;  // 6 distinct pairs on 4 vertices, all of degree 3: K4
    }
    VertexSet xs, ys;
    for (int b : branches) {
        int d = path_degree(b);
        if (d == 3) xs.add(b);
        else if (d == 2) ys.add(b);
        else return false;
    }
    if (xs.count() != 2 || ys.count() != 3) return false;
    for (auto [a, b] : contracted) {
        bool ax = xs.contains(a), bx = xs.contains(b);
        if (ax == bx) return false;  // must go across the bipartition
    }
    return true;
}

struct BipartiteBoundCheck {
    bool hypothesis_met = false;
    bool bound_holds = false;
};

/// For a bipartition (x, y): whether the counting hypothesis holds
/// (outerplanar, |x| >= 2, every y-vertex of degree >= 2) and whether
/// |y| <= 2|x| - 2. The hypothesis provably forces the bound.
inline BipartiteBoundCheck check_bipartite_outerplanar_bound(const Graph& g, VertexSet x,
                                                             VertexSet y) {
    check_subset(g, x, "check_bipartite_outerplanar_bound");
    check_subset(g, y, "check_bipartite_outerplanar_bound");
    if ((x & y) != VertexSet{} || (x | y) != g.vertices())
        throw std::invalid_argument("bipartite bound: x, y must partition the vertices");
    for (auto [u, v] : g.edge_list())
        if (x.contains(u) == x.contains(v))
            throw std::invalid_argument("bipartite bound: edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ") stays inside one side");
    BipartiteBoundCheck out;
    out.hypothesis_met = x.count() >= 2 && is_outerplanar(g);
    for (int u : y)
        if (g.degree(u) < 2) out.hypothesis_met = false;
    out.bound_holds = y.count() <= 2 * x.count() - 2;
    return out;
}

}  // namespace secdom
