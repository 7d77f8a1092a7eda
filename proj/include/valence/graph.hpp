#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace valence {

/// Loop-free undirected graph on vertices 0..n-1 (n <= 64), adjacency kept as
/// bit masks so neighborhood tests are cheap.
class Adjacency {
public:
    explicit Adjacency(int n = 0) : adj_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > 64) throw std::invalid_argument("Adjacency: vertex count out of range");
    }

    int size() const { return static_cast<int>(adj_.size()); }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("Adjacency: no self-edges");
        adj_[u] |= (std::uint64_t{1} << v);
        adj_[v] |= (std::uint64_t{1} << u);
    }

    bool adjacent(int u, int v) const {
        check(u);
        check(v);
        return u != v && (adj_[u] >> v) & 1;
    }

    std::uint64_t neighbors(int v) const {
        check(v);
        return adj_[v];
    }

    int degree(int v) const { return __builtin_popcountll(neighbors(v)); }

    /// Sorted list of {u,v} pairs with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < size(); ++u)
            for (int v = u + 1; v < size(); ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    /// Subgraph induced by the vertex set `keep` (a bit mask); vertices are
    /// renumbered in increasing order.
    Adjacency induced(std::uint64_t keep) const {
        std::vector<int> ids;
        for (int v = 0; v < size(); ++v)
            if ((keep >> v) & 1) ids.push_back(v);
        Adjacency g(static_cast<int>(ids.size()));
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                if (adjacent(ids[i], ids[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    bool operator==(const Adjacency&) const = default;

private:
    void check(int v) const {
        if (v < 0 || v >= size()) throw std::out_of_range("Adjacency: bad vertex");
    }

    std::vector<std::uint64_t> adj_;
};

}  // namespace valence
