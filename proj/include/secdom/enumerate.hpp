#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"
#include "outerplanar.hpp"

namespace secdom {

constexpr int kEnumerationCap = 10;

namespace detail {

/// Connectivity of g with one vertex masked out, without rebuilding.
inline bool connected_without(const Graph& g, int skip) {
    VertexSet keep = g.vertices().without(skip);
    if (keep.empty()) return true;
    VertexSet comp = VertexSet::single(keep.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next;
        for (int u : frontier) next = next | g.neighbors(u);
        next = next & keep;
        frontier = next - comp;
        comp = comp | next;
    }
    return comp == keep;
}

/// Canonical augmentation over any class of connected graphs closed under
/// vertex deletion. Each level-n graph H is accepted from its level-(n-1)
/// parent P = H - t exactly when P's class equals the class of H - d(H),
/// where the deletion vertex d(H) is the vertex of maximum canonical
/// position whose removal keeps H connected -- an isomorphism-invariant
/// choice, so every class is emitted exactly once.
template <typename KeepFn, typename VisitFn>
void enumerate_augmented(int n, KeepFn&& keep, VisitFn&& visit) {
    if (n < 1 || n > kEnumerationCap)
        throw std::invalid_argument("enumeration: n = " + std::to_string(n) +
                                    " outside 1.." + std::to_string(kEnumerationCap));
    Graph k1(1, {});
    if (!keep(k1)) return;
    if (n == 1) {
        visit(k1);
        return;
    }
    struct Entry {
        Graph graph;
        std::string form;
    };
    std::vector<Entry> level{{k1, canonical_form(k1)}};
    for (int size = 2; size <= n; ++size) {
        std::vector<Entry> next;
        for (const Entry& parent : level) {
            int np = parent.graph.vertex_count();
            int t = np;  // the vertex being added
            std::unordered_set<std::string> emitted_here;
            auto parent_edges = parent.graph.edge_list();
            for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << np); ++sub) {
                auto edges = parent_edges;
                for (int v : VertexSet{sub}) edges.emplace_back(v, t);
                Graph h(size, edges);
                if (!keep(h)) continue;
                CanonicalLabeling lab = canonical_labeling(h);
                if (!emitted_here.insert(lab.form).second) continue;
                // invert the labeling: who sits at each canonical position
                int at[Graph::kMaxVertices];
                for (int v = 0; v < size; ++v) at[lab.labeling[static_cast<std::size_t>(v)]] = v;
                int d = -1;
                for (int pos = size - 1; pos >= 0; --pos)
                    if (connected_without(h, at[pos])) {
                        d = at[pos];
                        break;
                    }
                bool accepted = d == t;
                if (!accepted) {
                    Graph hd = induced_subgraph(h, h.vertices().without(d)).first;
                    accepted = canonical_form(hd) == parent.form;
                }
                if (!accepted) continue;
                if (size == n) visit(h);
                else next.push_back({std::move(h), std::move(lab.form)});
            }
        }
        level = std::move(next);
    }
}

}  // namespace detail

/// One representative per isomorphism class of connected n-vertex graphs.
template <typename VisitFn>
void enumerate_connected(int n, VisitFn&& visit) {
    detail::enumerate_augmented(
        n, [](const Graph&) { return true; }, visit);
}

/// One representative per isomorphism class of connected outerplanar
/// n-vertex graphs. Outerplanarity is closed under vertex deletion, so the
/// augmentation can discard non-outerplanar graphs at every level instead
/// of filtering the full connected stream at the end; the emitted classes
/// are identical (checked against the filtered stream in tests).
template <typename VisitFn>
void enumerate_outerplanar(int n, VisitFn&& visit) {
    detail::enumerate_augmented(
        n,
        [](const Graph& h) {
            int nh = h.vertex_count();
            if (nh >= 2 && h.edge_count() > 2 * nh - 3) return false;  // cheap pre-filter
            return is_outerplanar(h);
        },
        visit);
}

}  // namespace secdom
