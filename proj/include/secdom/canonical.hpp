#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "io.hpp"

namespace secdom {

/// A labeling that realizes the canonical form: labeling[old] = position.
/// `form` is the graph6 line of the relabeled graph, so equal forms mean
/// isomorphic graphs and the form can be decoded back into a graph.
struct CanonicalLabeling {
    std::string form;
    std::vector<int> labeling;
};

namespace detail {

/// graph6 of g relabeled so that order[pos] is placed at pos.
inline std::string graph6_under_order(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        VertexSet row = g.neighbors(order[static_cast<std::size_t>(v)]);
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (row.contains(order[static_cast<std::size_t>(u)]) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

/// Splits every cell by the vector of neighbor counts against all current
/// cells, new sub-cells ordered by that signature, until stable. All
/// splitting decisions depend only on isomorphism-invariant data.
inline void refine_partition(const Graph& g, std::vector<VertexSet>& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<VertexSet> next;
        next.reserve(cells.size());
        for (VertexSet cell : cells) {
            if (cell.count() <= 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, VertexSet>> groups;
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(cells.size());
                for (VertexSet c : cells) sig.push_back((g.neighbors(v) & c).count());
                auto it = std::find_if(groups.begin(), groups.end(),
                                       [&](const auto& p) { return p.first == sig; });
                if (it == groups.end())
                    groups.emplace_back(std::move(sig), VertexSet::single(v));
                else
                    it->second.add(v);
            }
            if (groups.size() > 1) {
                changed = true;
                std::sort(groups.begin(), groups.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
            }
            for (auto& gp : groups) next.push_back(gp.second);
        }
        cells = std::move(next);
    }
}

inline void canonical_search(const Graph& g, std::vector<VertexSet> cells,
                             CanonicalLabeling& best, bool& have) {
    refine_partition(g, cells);
    int split = -1;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].count() > 1) {
            split = static_cast<int>(i);
            break;
        }
    if (split < 0) {
        std::vector<int> order;
        order.reserve(cells.size());
        for (VertexSet c : cells) order.push_back(c.first());
        std::string form = graph6_under_order(g, order);
        if (!have || form < best.form) {
            best.form = std::move(form);
            best.labeling.assign(order.size(), 0);
            for (std::size_t pos = 0; pos < order.size(); ++pos)
                best.labeling[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
            have = true;
        }
        return;
    }
    // Branch on every member of the first non-singleton cell; the min leaf
    // over all branches is the same for isomorphic inputs.
    for (int v : cells[static_cast<std::size_t>(split)]) {
        std::vector<VertexSet> child;
        child.reserve(cells.size() + 1);
        for (int i = 0; i < split; ++i) child.push_back(cells[static_cast<std::size_t>(i)]);
        child.push_back(VertexSet::single(v));
        child.push_back(cells[static_cast<std::size_t>(split)].without(v));
        for (std::size_t i = static_cast<std::size_t>(split) + 1; i < cells.size(); ++i)
            child.push_back(cells[i]);
        canonical_search(g, std::move(child), best, have);
    }
}

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> cells;
    for (int d = 0; d < std::max(n, 1); ++d) {
        VertexSet cell;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == d) cell.add(v);
        if (!cell.empty()) cells.push_back(cell);
    }
    CanonicalLabeling best;
    bool have = false;
    detail::canonical_search(g, std::move(cells), best, have);
    if (!have) {  // n == 0
        best.form = std::string(1, static_cast<char>(63));
        best.labeling.clear();
    }
    return best;
}

/// Isomorphism-invariant key: two graphs get the same string exactly when
/// they are isomorphic. The string is itself a graph6 line.
inline std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace secdom
