#include "valence/classifier.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace valence {

int StorageGraph::find_vertex(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

StorageGraph StorageGraph::induced(std::uint64_t keep) const {
    StorageGraph out;
    out.adj = adj.induced(keep);
    for (int v = 0; v < size(); ++v)
        if ((keep >> v) & 1) {
            out.names.push_back(names[v]);
            out.looped.push_back(looped[v]);
        }
    return out;
}

DescriptorPtr storage_graph_monoid(const StorageGraph& g) {
    std::vector<DescriptorPtr> factors;
    factors.reserve(g.size());
    for (int v = 0; v < g.size(); ++v)
        factors.push_back(g.looped[v] ? MonoidDescriptor::integers() : MonoidDescriptor::bicyclic());
    return MonoidDescriptor::graph_product(g.adj, std::move(factors), g.names);
}

namespace {

bool neighborhood_is_clique(const Adjacency& g, int v, std::uint64_t alive) {
    std::uint64_t nb = g.neighbors(v) & alive;
    for (int u = 0; u < g.size(); ++u) {
        if (!((nb >> u) & 1)) continue;
        for (int w = u + 1; w < g.size(); ++w)
            if (((nb >> w) & 1) && !g.adjacent(u, w)) return false;
    }
    return true;
}

/// Shortest u..w path avoiding `blocked`, in the subgraph `alive`; empty if
/// none exists.
std::vector<int> shortest_path(const Adjacency& g, int u, int w, std::uint64_t alive,
                               std::uint64_t blocked) {
    std::vector<int> parent(g.size(), -2);
    std::deque<int> queue{u};
    parent[u] = -1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == w) break;
        for (int nxt = 0; nxt < g.size(); ++nxt) {
            if (!g.adjacent(cur, nxt) || parent[nxt] != -2) continue;
            if (!((alive >> nxt) & 1) || ((blocked >> nxt) & 1)) continue;
            parent[nxt] = cur;
            queue.push_back(nxt);
        }
    }
    if (parent[w] == -2) return {};
    std::vector<int> path;
    for (int cur = w; cur != -1; cur = parent[cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

ChordalityResult is_chordal(const Adjacency& g) {
    ChordalityResult result;
    std::uint64_t alive = g.size() == 64 ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << g.size()) - 1;
    int remaining = g.size();
    while (remaining > 0) {
        int simplicial = -1;
        for (int v = 0; v < g.size() && simplicial < 0; ++v)
            if (((alive >> v) & 1) && neighborhood_is_clique(g, v, alive)) simplicial = v;
        if (simplicial >= 0) {
            result.elimination_order.push_back(simplicial);
            alive &= ~(std::uint64_t{1} << simplicial);
            --remaining;
            continue;
        }
        // Stuck: some remaining vertex has two nonadjacent neighbors. Close a
        // chordless cycle through it with a shortest path that avoids the rest
        // of its neighborhood.
        for (int v = 0; v < g.size(); ++v) {
            if (!((alive >> v) & 1)) continue;
            std::uint64_t nb = g.neighbors(v) & alive;
            for (int u = 0; u < g.size(); ++u) {
                if (!((nb >> u) & 1)) continue;
                for (int w = u + 1; w < g.size(); ++w) {
                    if (!((nb >> w) & 1) || g.adjacent(u, w)) continue;
                    std::uint64_t blocked =
                        (nb | (std::uint64_t{1} << v)) & ~(std::uint64_t{1} << u) &
                        ~(std::uint64_t{1} << w);
                    auto path = shortest_path(g, u, w, alive, blocked);
                    if (path.empty()) continue;
                    result.induced_cycle = {v};
                    result.induced_cycle.insert(result.induced_cycle.end(), path.begin(),
                                                path.end());
                    result.chordal = false;
                    return result;
                }
            }
        }
        throw std::logic_error("is_chordal: stuck without witness");
    }
    result.chordal = true;
    return result;
}

bool has_induced(const Adjacency& g, Pattern4 pattern) {
    return find_induced(g, pattern).has_value();
}

std::optional<std::vector<int>> find_induced(const Adjacency& g, Pattern4 pattern) {
    const int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (pattern == Pattern4::C4) {
                        if (a > b || a > c || a > d || b > d) continue;  // cycle symmetry
                        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) &&
                            g.adjacent(d, a) && !g.adjacent(a, c) && !g.adjacent(b, d))
                            return std::vector<int>{a, b, c, d};
                    } else {
                        if (a > d) continue;  // path symmetry
                        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) &&
                            !g.adjacent(a, c) && !g.adjacent(a, d) && !g.adjacent(b, d))
                            return std::vector<int>{a, b, c, d};
                    }
                }
    return std::nullopt;
}

bool is_transitive_forest(const Adjacency& g) {
    return !has_induced(g, Pattern4::C4) && !has_induced(g, Pattern4::P4);
}

SemilinearVerdict classify_semilinear(const StorageGraph& g) {
    // Two adjacent unlooped vertices give a direct product of two counters.
    for (auto [u, v] : g.adj.edges())
        if (!g.looped[u] && !g.looped[v])
            return {false, ClassifierWitness{"adjacent_unlooped_pair", {u, v}}};
    // An unlooped vertex with two nonadjacent looped neighbors gives a
    // counter alongside a free group of rank two.
    for (int v = 0; v < g.size(); ++v) {
        if (g.looped[v]) continue;
        for (int u = 0; u < g.size(); ++u) {
            if (u == v || !g.adj.adjacent(v, u) || !g.looped[u]) continue;
            for (int w = u + 1; w < g.size(); ++w) {
                if (w == v || !g.adj.adjacent(v, w) || !g.looped[w]) continue;
                if (!g.adj.adjacent(u, w))
                    return {false,
                            ClassifierWitness{"unlooped_with_nonadjacent_looped_neighbors",
                                              {v, u, w}}};
            }
        }
    }
    if (auto c4 = find_induced(g.adj, Pattern4::C4))
        return {false, ClassifierWitness{"induced_c4", *c4}};
    if (auto p4 = find_induced(g.adj, Pattern4::P4))
        return {false, ClassifierWitness{"induced_p4", *p4}};
    return {true, std::nullopt};
}

ContextFreeVerdict classify_context_free(const AnnotatedProductGraph& g) {
    // Vertices with a trivial unit J-class never contribute to an accepting
    // product; drop them up front.
    std::uint64_t keep = 0;
    for (int v = 0; v < g.size(); ++v)
        if (!g.annotations[v].j_trivial) keep |= std::uint64_t{1} << v;
    std::vector<int> ids;
    for (int v = 0; v < g.size(); ++v)
        if ((keep >> v) & 1) ids.push_back(v);
    Adjacency adj = g.adj.induced(keep);

    for (std::size_t i = 0; i < ids.size(); ++i)
        if (!g.annotations[ids[i]].context_free)
            return {false, ClassifierWitness{"factor_not_context_free", {ids[i]}}};
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (adj.adjacent(static_cast<int>(i), static_cast<int>(j)) &&
                !g.annotations[ids[i]].fri && !g.annotations[ids[j]].fri)
                return {false, ClassifierWitness{"adjacent_non_fri_pair", {ids[i], ids[j]}}};
    for (std::size_t v = 0; v < ids.size(); ++v) {
        if (g.annotations[ids[v]].fri) continue;
        for (std::size_t u = 0; u < ids.size(); ++u) {
            if (u == v || !adj.adjacent(static_cast<int>(v), static_cast<int>(u))) continue;
            for (std::size_t w = u + 1; w < ids.size(); ++w) {
                if (w == v || !adj.adjacent(static_cast<int>(v), static_cast<int>(w))) continue;
                if (!adj.adjacent(static_cast<int>(u), static_cast<int>(w)))
                    return {false,
                            ClassifierWitness{"non_fri_neighborhood_not_clique",
                                              {ids[v], ids[u], ids[w]}}};
            }
        }
    }
    auto chordality = is_chordal(adj);
    if (!chordality.chordal) {
        std::vector<int> cycle;
        for (int v : chordality.induced_cycle) cycle.push_back(ids[v]);
        return {false, ClassifierWitness{"not_chordal", cycle}};
    }
    return {true, std::nullopt};
}

RegularVerdict classify_regular(const StorageGraph& g) {
    return {g.size() == 0};
}

}  // namespace valence
