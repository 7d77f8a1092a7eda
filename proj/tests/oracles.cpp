#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace oracles {

using valence::MonoidElement;

bool closure_identity(const LoopGraph& g, const Word& w) {
    std::set<Word> seen{w};
    std::deque<Word> queue{w};
    auto push = [&](Word next) {
        if (seen.insert(next).second) queue.push_back(std::move(next));
    };
    while (!queue.empty()) {
        Word cur = queue.front();
        queue.pop_front();
        if (cur.empty()) return true;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            int v1 = cur[i] / 2, v2 = cur[i + 1] / 2;
            if (v1 != v2 && g.adjacent(v1, v2)) {
                Word next = cur;
                std::swap(next[i], next[i + 1]);
                push(std::move(next));
            }
            bool pos_neg = cur[i] == 2 * v1 && cur[i + 1] == 2 * v1 + 1;
            bool neg_pos = cur[i] == 2 * v1 + 1 && cur[i + 1] == 2 * v1;
            if (v1 == v2 && (pos_neg || (neg_pos && g.looped[v1]))) {
                Word next = cur;
                next.erase(next.begin() + i, next.begin() + i + 2);
                push(std::move(next));
            }
        }
    }
    return false;
}

std::set<Word> identity_words_up_to(const LoopGraph& g, std::size_t max_len) {
    std::set<Word> seen{Word{}};
    std::deque<Word> queue{Word{}};
    auto push = [&](Word next) {
        if (seen.insert(next).second) queue.push_back(std::move(next));
    };
    while (!queue.empty()) {
        Word cur = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            int v1 = cur[i] / 2, v2 = cur[i + 1] / 2;
            if (v1 != v2 && g.adjacent(v1, v2)) {
                Word next = cur;
                std::swap(next[i], next[i + 1]);
                push(std::move(next));
            }
        }
        if (cur.size() + 2 > max_len) continue;
        for (std::size_t i = 0; i <= cur.size(); ++i) {
            for (int v = 0; v < g.n; ++v) {
                Word next = cur;
                next.insert(next.begin() + i, {2 * v, 2 * v + 1});
                push(std::move(next));
                if (g.looped[v]) {
                    Word other = cur;
                    other.insert(other.begin() + i, {2 * v + 1, 2 * v});
                    push(std::move(other));
                }
            }
        }
    }
    return seen;
}

bool brute_chordal(const valence::Adjacency& g) {
    const int n = g.size();
    // Try every ordering of every subset of size >= 4 as a candidate cycle
    // (first element pinned to break rotational symmetry).
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) subset.push_back(v);
        if (subset.size() < 4) continue;
        std::sort(subset.begin(), subset.end());
        do {
            const int k = static_cast<int>(subset.size());
            bool cycle = true;
            for (int i = 0; i < k && cycle; ++i)
                for (int j = i + 1; j < k && cycle; ++j) {
                    bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
                    if (g.adjacent(subset[i], subset[j]) != consecutive) cycle = false;
                }
            if (cycle) return false;
        } while (std::next_permutation(subset.begin() + 1, subset.end()));
    }
    return true;
}

bool brute_all_semilinear(const valence::StorageGraph& g) {
    const int n = g.size();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u < v && g.adj.adjacent(u, v) && !g.looped[u] && !g.looped[v]) return false;
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w) {
                if (u >= w || u == v || w == v) continue;
                if (g.looped[v] || !g.looped[u] || !g.looped[w]) continue;
                if (g.adj.adjacent(v, u) && g.adj.adjacent(v, w) && !g.adj.adjacent(u, w))
                    return false;
            }
    // induced C4
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.adj.adjacent(a, b) && g.adj.adjacent(b, c) && g.adj.adjacent(c, d) &&
                        g.adj.adjacent(d, a) && !g.adj.adjacent(a, c) && !g.adj.adjacent(b, d))
                        return false;
                }
    // induced P4
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.adj.adjacent(a, b) && g.adj.adjacent(b, c) && g.adj.adjacent(c, d) &&
                        !g.adj.adjacent(a, c) && !g.adj.adjacent(a, d) && !g.adj.adjacent(b, d))
                        return false;
                }
    return true;
}

bool brute_group_context_free(const valence::AnnotatedProductGraph& g) {
    const int n = g.size();
    for (int v = 0; v < n; ++v)
        if (!g.annotations[v].context_free) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adj.adjacent(u, v) && !g.annotations[u].fri && !g.annotations[v].fri)
                return false;
    for (int v = 0; v < n; ++v) {
        if (g.annotations[v].fri) continue;
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) {
                if (u == v || w == v) continue;
                if (!g.annotations[u].fri || !g.annotations[w].fri) continue;
                if (g.adj.adjacent(v, u) && g.adj.adjacent(v, w) && !g.adj.adjacent(u, w))
                    return false;
            }
    }
    return brute_chordal(g.adj);
}

namespace {

struct BoxConfig {
    int state;
    std::string storage_key;
    std::vector<std::uint64_t> counts;

    bool operator<(const BoxConfig& o) const {
        if (state != o.state) return state < o.state;
        if (storage_key != o.storage_key) return storage_key < o.storage_key;
        return counts < o.counts;
    }
};

}  // namespace

std::set<std::vector<std::uint64_t>> parikh_box_vectors(const valence::ValenceAutomaton& a,
                                                        std::uint64_t box) {
    std::set<std::vector<std::uint64_t>> out;
    std::map<BoxConfig, MonoidElement> storages;  // key -> element (for products)
    std::deque<std::pair<BoxConfig, MonoidElement>> queue;

    auto push = [&](BoxConfig c, MonoidElement storage) {
        if (storages.emplace(c, storage).second) queue.emplace_back(std::move(c), std::move(storage));
    };
    MonoidElement start = identity(a.monoid());
    push(BoxConfig{a.initial(), start.key(),
                   std::vector<std::uint64_t>(a.alphabet()->size(), 0)},
         start);

    while (!queue.empty()) {
        auto [cfg, storage] = queue.front();
        queue.pop_front();
        if (a.is_final(cfg.state) && storage.is_identity()) out.insert(cfg.counts);
        for (const auto& e : a.edges()) {
            if (e.from != cfg.state) continue;
            auto counts = cfg.counts;
            if (e.symbol) {
                if (counts[*e.symbol] == box) continue;
                ++counts[*e.symbol];
            }
            MonoidElement next = storage * e.element;
            push(BoxConfig{e.to, next.key(), std::move(counts)}, next);
        }
    }
    return out;
}

std::set<std::vector<std::uint64_t>> parikh_box_by_enumeration(const valence::ValenceAutomaton& a,
                                                               std::uint64_t box,
                                                               std::size_t max_len,
                                                               std::size_t max_steps) {
    std::set<std::vector<std::uint64_t>> out;
    for (const auto& w : enumerate_language(a, max_len, max_steps)) {
        std::vector<std::uint64_t> counts(a.alphabet()->size(), 0);
        for (int s : w) ++counts[s];
        if (std::all_of(counts.begin(), counts.end(),
                        [&](std::uint64_t c) { return c <= box; }))
            out.insert(counts);
    }
    return out;
}

bool has_word_with_parikh(const valence::ValenceAutomaton& a,
                          const std::vector<std::uint64_t>& v, std::size_t max_steps,
                          std::size_t storage_cap) {
    struct Cfg {
        int state;
        MonoidElement storage;
        std::vector<std::uint64_t> counts;
    };
    std::set<std::string> seen;
    auto key = [](const Cfg& c) {
        std::string k = std::to_string(c.state) + "|" + c.storage.key() + "|";
        for (auto n : c.counts) k += std::to_string(n) + ",";
        return k;
    };
    std::deque<std::pair<Cfg, std::size_t>> queue;
    Cfg start{a.initial(), identity(a.monoid()), std::vector<std::uint64_t>(a.alphabet()->size(), 0)};
    seen.insert(key(start));
    queue.emplace_back(start, 0);
    while (!queue.empty()) {
        auto [cfg, steps] = queue.front();
        queue.pop_front();
        if (cfg.counts == v && a.is_final(cfg.state) && cfg.storage.is_identity()) return true;
        if (steps == max_steps) continue;
        for (const auto& e : a.edges()) {
            if (e.from != cfg.state) continue;
            auto counts = cfg.counts;
            if (e.symbol) {
                if (counts[*e.symbol] == v[*e.symbol]) continue;
                ++counts[*e.symbol];
            }
            MonoidElement storage = cfg.storage * e.element;
            if (storage.size_hint() > storage_cap) continue;
            Cfg next{e.to, std::move(storage), std::move(counts)};
            if (seen.insert(key(next)).second) queue.emplace_back(std::move(next), steps + 1);
        }
    }
    return false;
}

std::set<std::vector<std::uint64_t>> brute_insertion_members(const valence::ValenceAutomaton& hat,
                                                             const std::vector<int>& skeleton,
                                                             const valence::LoopAlphabet& loops,
                                                             std::uint64_t max_insertions) {
    std::set<std::vector<std::uint64_t>> members;
    const auto& edges = hat.edges();

    auto gamma_is_identity = [&](const std::vector<int>& word) {
        MonoidElement g = identity(hat.monoid());
        for (int e : word) g = g * edges[e].element;
        return g.is_identity();
    };
    auto gap_state = [&](const std::vector<int>& word, std::size_t gap) {
        if (gap == 0)
            return word.empty() ? hat.initial() : edges[word[0]].from;
        return edges[word[gap - 1]].to;
    };

    std::set<std::pair<std::vector<int>, std::vector<std::uint64_t>>> seen;
    std::deque<std::pair<std::vector<int>, std::vector<std::uint64_t>>> queue;
    std::vector<std::uint64_t> zero(loops.loops.size(), 0);
    queue.emplace_back(skeleton, zero);
    seen.emplace(skeleton, zero);

    while (!queue.empty()) {
        auto [word, mu] = queue.front();
        queue.pop_front();
        if (gamma_is_identity(word)) members.insert(mu);
        std::uint64_t used = 0;
        for (auto c : mu) used += c;
        if (used == max_insertions || skeleton.empty()) continue;
        for (std::size_t l = 0; l < loops.loops.size(); ++l) {
            const auto& loop = loops.loops[l];
            for (std::size_t gap = 0; gap <= word.size(); ++gap) {
                if (gap_state(word, gap) != loop.base) continue;
                std::vector<int> next = word;
                next.insert(next.begin() + gap, loop.edges.begin(), loop.edges.end());
                auto nmu = mu;
                ++nmu[l];
                if (seen.emplace(next, nmu).second) queue.emplace_back(std::move(next), std::move(nmu));
            }
        }
    }
    return members;
}

bool is_dyck(const std::string& w) {
    int depth = 0;
    for (char c : w) {
        depth += c == 'x' ? 1 : -1;
        if (depth < 0) return false;
    }
    return depth == 0;
}

bool is_anbmcndm(const std::string& w) {
    std::size_t i = 0;
    std::size_t n1 = 0, m1 = 0, n2 = 0, m2 = 0;
    while (i < w.size() && w[i] == 'a') ++i, ++n1;
    while (i < w.size() && w[i] == 'b') ++i, ++m1;
    while (i < w.size() && w[i] == 'c') ++i, ++n2;
    while (i < w.size() && w[i] == 'd') ++i, ++m2;
    return i == w.size() && n1 == n2 && m1 == m2;
}

bool has_even_count(const std::string& w, char c) {
    return std::count(w.begin(), w.end(), c) % 2 == 0;
}

}  // namespace oracles
