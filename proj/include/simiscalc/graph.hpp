#ifndef SIMISCALC_GRAPH_HPP
#define SIMISCALC_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "simiscalc/errors.hpp"

namespace simiscalc {

/// Simple undirected graph on vertices 1..n, adjacency kept as per-vertex
/// bitmasks. n is capped at 64, far above the cover-enumeration bound, so a
/// vertex set is a single word everywhere below.
class SimpleGraph {
public:
    explicit SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > 64)
            throw DomainError("graph size out of range (0..64 vertices)");
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw DomainError("loops are not allowed");
        adj_[static_cast<std::size_t>(u - 1)] |= bit(v);
        adj_[static_cast<std::size_t>(v - 1)] |= bit(u);
    }

    bool has_edge(int u, int v) const {
        check(u);
        check(v);
        return adj_[static_cast<std::size_t>(u - 1)] & bit(v);
    }

    int degree(int v) const {
        check(v);
        return __builtin_popcountll(adj_[static_cast<std::size_t>(v - 1)]);
    }

    std::uint64_t neighbor_mask(int v) const {
        check(v);
        return adj_[static_cast<std::size_t>(v - 1)];
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        std::uint64_t m = neighbor_mask(v);
        while (m) {
            int b = __builtin_ctzll(m);
            out.push_back(b + 1);
            m &= m - 1;
        }
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    std::size_t edge_count() const { return edges().size(); }

    static std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

private:
    void check(int v) const {
        if (v < 1 || v > n_) throw DomainError("vertex index out of range");
    }

    int n_;
    std::vector<std::uint64_t> adj_;
};

namespace detail {

inline std::vector<int> mask_to_vertices(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        int b = __builtin_ctzll(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

} // namespace detail

/// BFS 2-coloring.
inline bool is_bipartite(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    for (int s = 1; s <= n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] =
                        1 - color[static_cast<std::size_t>(u)];
                    q.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] ==
                           color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Shortest path length; empty when u and v are disconnected.
inline std::optional<int> distance(const SimpleGraph& g, int u, int v) {
    if (u == v) return 0;
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(n) + 1, -1);
    dist[static_cast<std::size_t>(u)] = 0;
    std::deque<int> q{u};
    while (!q.empty()) {
        int w = q.front();
        q.pop_front();
        for (int x : g.neighbors(w)) {
            if (dist[static_cast<std::size_t>(x)] != -1) continue;
            dist[static_cast<std::size_t>(x)] = dist[static_cast<std::size_t>(w)] + 1;
            if (x == v) return dist[static_cast<std::size_t>(x)];
            q.push_back(x);
        }
    }
    return std::nullopt;
}

/// Length of the shortest cycle, by BFS from every vertex; empty for forests.
inline std::optional<int> girth(const SimpleGraph& g) {
    const int n = g.vertex_count();
    int best = -1;
    for (int s = 1; s <= n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n) + 1, -1);
        std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
        dist[static_cast<std::size_t>(s)] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(v)] == -1) {
                    dist[static_cast<std::size_t>(v)] =
                        dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    q.push_back(v);
                } else if (v != parent[static_cast<std::size_t>(u)]) {
                    int len = dist[static_cast<std::size_t>(u)] +
                              dist[static_cast<std::size_t>(v)] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

inline bool is_triangle_free(const SimpleGraph& g) {
    auto gi = girth(g);
    return !gi || *gi != 3;
}

/// Degree-1 vertices.
inline std::vector<int> leaves(const SimpleGraph& g) {
    std::vector<int> out;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

namespace detail {

/// Enumerate all maximal independent sets by branching on the lowest
/// still-undecided vertex that can extend the current set. Classic
/// include/exclude search; fine for the n <= 20 cover bound.
inline void maximal_independent_sets_rec(const SimpleGraph& g,
                                         std::uint64_t chosen,
                                         std::uint64_t candidates,
                                         std::uint64_t excluded,
                                         std::vector<std::uint64_t>& out) {
    if (candidates == 0) {
        // Maximal iff no excluded vertex could still be added.
        if (excluded == 0) out.push_back(chosen);
        return;
    }
    int v = __builtin_ctzll(candidates) + 1;
    std::uint64_t vb = SimpleGraph::bit(v);
    std::uint64_t nb = g.neighbor_mask(v);
    // Branch 1: take v (its neighbors become excluded from the candidate set).
    maximal_independent_sets_rec(g, chosen | vb, candidates & ~vb & ~nb,
                                 excluded & ~nb, out);
    // Branch 2: skip v; it stays forbidden, so some later neighbor must cover it.
    maximal_independent_sets_rec(g, chosen, candidates & ~vb, excluded | vb, out);
}

inline std::vector<std::uint64_t> maximal_independent_sets(const SimpleGraph& g) {
    std::vector<std::uint64_t> out;
    std::uint64_t all = g.vertex_count() == 64
                            ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << g.vertex_count()) - 1;
    maximal_independent_sets_rec(g, 0, all, 0, out);
    return out;
}

} // namespace detail

/// Default bound for cover enumeration; worst case is 3^{n/3} covers.
inline constexpr int kCoverEnumerationBound = 20;

/// All inclusion-minimal vertex covers, as complements of the maximal
/// independent sets, sorted canonically. A graph without edges has the empty
/// set as its only minimal cover, reported as an empty list entry.
inline std::vector<std::vector<int>> minimal_vertex_covers(
    const SimpleGraph& g, int bound = kCoverEnumerationBound) {
    if (g.vertex_count() > bound)
        throw DomainError("vertex-cover enumeration limited to " +
                          std::to_string(bound) + " vertices");
    std::uint64_t all = g.vertex_count() == 0
                            ? 0
                            : (std::uint64_t{1} << g.vertex_count()) - 1;
    std::vector<std::vector<int>> covers;
    for (std::uint64_t mis : detail::maximal_independent_sets(g))
        covers.push_back(detail::mask_to_vertices(all & ~mis));
    std::sort(covers.begin(), covers.end());
    return covers;
}

/// True iff no minimal vertex cover contains both endpoints; since {i,j} is an
/// edge every cover contains at least one, so "not both" means exactly one.
inline bool cover_separates_edge(const SimpleGraph& g, int i, int j) {
    if (!g.has_edge(i, j)) throw DomainError("cover_separates_edge: not an edge");
    for (const auto& cover : minimal_vertex_covers(g)) {
        bool has_i = std::binary_search(cover.begin(), cover.end(), i);
        bool has_j = std::binary_search(cover.begin(), cover.end(), j);
        if (has_i && has_j) return false;
    }
    return true;
}

/// Is the whole graph one cycle: connected and 2-regular. Returns its length.
inline std::optional<int> recognize_cycle(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) != 2) return std::nullopt;
    for (int v = 2; v <= n; ++v)
        if (!distance(g, 1, v)) return std::nullopt;
    return n;
}

/// Vertices of a recognized cycle in traversal order, starting at vertex 1 and
/// stepping to its smaller-index neighbor first (deterministic).
inline std::optional<std::vector<int>> cycle_order(const SimpleGraph& g) {
    if (!recognize_cycle(g)) return std::nullopt;
    std::vector<int> order{1};
    int prev = 1;
    auto nb = g.neighbors(1);
    int cur = std::min(nb[0], nb[1]);
    while (cur != 1) {
        order.push_back(cur);
        auto cn = g.neighbors(cur);
        int next = cn[0] == prev ? cn[1] : cn[0];
        prev = cur;
        cur = next;
    }
    return order;
}

/// A whiskered graph: a core H plus exactly one pendant edge per core vertex.
/// `core_of` maps each whisker leaf to its core vertex; `to_new` is the
/// 1-based relabeling that sends the cores to 1..m (in ascending original
/// order) and the whisker of new-core i to m+i.
struct WhiskerStructure {
    int m = 0;
    std::map<int, int> core_of;
    std::vector<int> to_new;

    std::vector<int> to_old() const {
        std::vector<int> inv(to_new.size(), 0);
        for (std::size_t v = 1; v < to_new.size(); ++v)
            inv[static_cast<std::size_t>(to_new[v])] = static_cast<int>(v);
        return inv;
    }
};

/// Recognize a whiskered graph. Leaves and non-leaves must split the vertex
/// set into equal halves, every non-leaf carries exactly one leaf, and every
/// leaf hangs off a non-leaf. Pendant-pair (K2) components are accepted with
/// the least-index endpoint designated as core; the ambiguity is inherent to
/// cores that are isolated in H.
inline std::optional<WhiskerStructure> recognize_whisker(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n == 0 || n % 2 != 0) return std::nullopt;
    std::vector<bool> is_core(static_cast<std::size_t>(n) + 1, false);
    for (int v = 1; v <= n; ++v) {
        int d = g.degree(v);
        if (d == 0) return std::nullopt;
        if (d >= 2) is_core[static_cast<std::size_t>(v)] = true;
    }
    // K2 components: both endpoints are leaves; the smaller index is the core.
    for (int v = 1; v <= n; ++v) {
        if (g.degree(v) != 1) continue;
        int u = g.neighbors(v)[0];
        if (g.degree(u) == 1 && u < v) is_core[static_cast<std::size_t>(v)] = false;
        else if (g.degree(u) == 1 && v < u) is_core[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> cores, whisker_leaves;
    for (int v = 1; v <= n; ++v)
        (is_core[static_cast<std::size_t>(v)] ? cores : whisker_leaves).push_back(v);
    if (cores.size() != whisker_leaves.size()) return std::nullopt;

    WhiskerStructure w;
    w.m = static_cast<int>(cores.size());
    std::map<int, int> whisker_of; // core -> its unique leaf
    for (int leaf : whisker_leaves) {
        int c = g.neighbors(leaf)[0];
        if (!is_core[static_cast<std::size_t>(c)]) return std::nullopt;
        if (whisker_of.count(c)) return std::nullopt; // two whiskers on one core
        whisker_of[c] = leaf;
        w.core_of[leaf] = c;
    }
    for (int c : cores)
        if (!whisker_of.count(c)) return std::nullopt; // bare core vertex

    w.to_new.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < w.m; ++i) {
        int c = cores[static_cast<std::size_t>(i)];
        w.to_new[static_cast<std::size_t>(c)] = i + 1;
        w.to_new[static_cast<std::size_t>(whisker_of[c])] = w.m + i + 1;
    }
    return w;
}

} // namespace simiscalc

#endif
