#include "valence/automaton.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace valence {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ValenceAutomaton::ValenceAutomaton(std::vector<std::string> states, AlphabetPtr alphabet,
                                   DescriptorPtr monoid, std::vector<RawEdge> raw_edges,
                                   int initial, std::vector<int> finals)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      monoid_(std::move(monoid)),
      initial_(initial),
      finals_(std::move(finals)) {
    require(alphabet_ != nullptr, "automaton: null alphabet");
    require(monoid_ != nullptr, "automaton: null monoid");
    const int n = static_cast<int>(states_.size());
    require(initial_ >= 0 && initial_ < n, "automaton: bad initial state");
    for (int f : finals_) require(f >= 0 && f < n, "automaton: bad final state");
    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());

    for (auto& raw : raw_edges) {
        require(raw.from >= 0 && raw.from < n, "automaton: bad edge source");
        require(raw.to >= 0 && raw.to < static_cast<int>(states_.size()), "automaton: bad edge target");
        require(raw.element.descriptor()->structurally_equal(*monoid_),
                "automaton: edge element over a different monoid");
        for (int s : raw.word)
            require(s >= 0 && s < alphabet_->size(), "automaton: bad edge symbol");
        if (raw.word.size() <= 1) {
            std::optional<int> sym;
            if (raw.word.size() == 1) sym = raw.word[0];
            edges_.push_back(Edge{raw.from, sym, raw.element, raw.to});
            continue;
        }
        // Split a multi-symbol label into a chain; the first link carries the
        // storage element.
        int cur = raw.from;
        for (std::size_t i = 0; i < raw.word.size(); ++i) {
            int next;
            if (i + 1 == raw.word.size()) {
                next = raw.to;
            } else {
                next = static_cast<int>(states_.size());
                states_.push_back(states_[raw.from] + "~" + std::to_string(edges_.size()));
            }
            edges_.push_back(Edge{cur, raw.word[i],
                                  i == 0 ? raw.element : identity(monoid_), next});
            cur = next;
        }
    }
}

bool ValenceAutomaton::is_final(int q) const {
    return std::binary_search(finals_.begin(), finals_.end(), q);
}

int ValenceAutomaton::state_index(const std::string& name) const {
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

struct Config {
    int state;
    MonoidElement storage;
    std::size_t consumed;
    int parent;  // index into the config pool
    int via_edge;
};

std::string config_key(const Config& c) {
    return std::to_string(c.state) + "|" + std::to_string(c.consumed) + "|" + c.storage.key();
}

}  // namespace

RunResult accepts_bounded(const ValenceAutomaton& a, const std::vector<int>& word,
                          std::size_t max_steps, std::size_t storage_cap) {
    RunResult result;
    std::vector<Config> pool;
    pool.push_back(Config{a.initial(), identity(a.monoid()), 0, -1, -1});
    std::unordered_set<std::string> seen{config_key(pool[0])};
    std::deque<std::pair<int, std::size_t>> queue{{0, 0}};  // (pool index, steps used)

    auto accepting = [&](const Config& c) {
        return c.consumed == word.size() && a.is_final(c.state) && c.storage.is_identity();
    };
    if (accepting(pool[0])) {
        result.accepted = true;
        return result;
    }

    while (!queue.empty()) {
        auto [idx, steps] = queue.front();
        queue.pop_front();
        if (steps == max_steps) continue;
        const Config cur = pool[idx];
        for (std::size_t e = 0; e < a.edges().size(); ++e) {
            const auto& edge = a.edges()[e];
            if (edge.from != cur.state) continue;
            std::size_t consumed = cur.consumed;
            if (edge.symbol) {
                if (consumed >= word.size() || word[consumed] != *edge.symbol) continue;
                ++consumed;
            }
            MonoidElement storage = cur.storage * edge.element;
            if (storage.size_hint() > storage_cap) {
                result.storage_capped = true;
                continue;
            }
            Config next{edge.to, std::move(storage), consumed, idx, static_cast<int>(e)};
            if (!seen.insert(config_key(next)).second) continue;
            if (accepting(next)) {
                result.accepted = true;
                std::vector<int> run;
                run.push_back(next.via_edge);
                for (int p = next.parent; p > 0; p = pool[p].parent) run.push_back(pool[p].via_edge);
                std::reverse(run.begin(), run.end());
                result.run = std::move(run);
                return result;
            }
            pool.push_back(std::move(next));
            queue.emplace_back(static_cast<int>(pool.size()) - 1, steps + 1);
        }
    }
    return result;
}

std::vector<std::vector<int>> enumerate_language(const ValenceAutomaton& a, std::size_t max_len,
                                                 std::size_t max_steps, std::size_t storage_cap) {
    struct EnumConfig {
        int state;
        MonoidElement storage;
        std::vector<int> word;
    };
    std::set<std::vector<int>> accepted;
    std::deque<std::pair<EnumConfig, std::size_t>> queue;
    std::unordered_set<std::string> seen;

    auto key = [](const EnumConfig& c) {
        std::string k = std::to_string(c.state) + "|" + c.storage.key() + "|";
        for (int s : c.word) k += std::to_string(s) + ",";
        return k;
    };
    auto visit = [&](EnumConfig c, std::size_t steps) {
        if (!seen.insert(key(c)).second) return;
        if (a.is_final(c.state) && c.storage.is_identity()) accepted.insert(c.word);
        queue.emplace_back(std::move(c), steps);
    };

    visit(EnumConfig{a.initial(), identity(a.monoid()), {}}, 0);
    while (!queue.empty()) {
        auto [cur, steps] = queue.front();
        queue.pop_front();
        if (steps == max_steps) continue;
        for (const auto& edge : a.edges()) {
            if (edge.from != cur.state) continue;
            std::vector<int> word = cur.word;
            if (edge.symbol) {
                if (word.size() == max_len) continue;
                word.push_back(*edge.symbol);
            }
            MonoidElement storage = cur.storage * edge.element;
            if (storage.size_hint() > storage_cap) continue;
            visit(EnumConfig{edge.to, std::move(storage), std::move(word)}, steps + 1);
        }
    }

    std::vector<std::vector<int>> out(accepted.begin(), accepted.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

bool replay_run(const ValenceAutomaton& a, const std::vector<int>& word,
                const std::vector<int>& run) {
    int state = a.initial();
    MonoidElement storage = identity(a.monoid());
    std::size_t consumed = 0;
    for (int e : run) {
        if (e < 0 || e >= static_cast<int>(a.edges().size())) return false;
        const auto& edge = a.edges()[e];
        if (edge.from != state) return false;
        if (edge.symbol) {
            if (consumed >= word.size() || word[consumed] != *edge.symbol) return false;
            ++consumed;
        }
        storage = storage * edge.element;
        state = edge.to;
    }
    return consumed == word.size() && a.is_final(state) && storage.is_identity();
}

bool nfa_accepts(const Nfa& n, const std::vector<int>& word) {
    std::set<int> cur{n.initial};
    for (int s : word) {
        std::set<int> next;
        for (const auto& e : n.edges)
            if (e.symbol == s && cur.count(e.from)) next.insert(e.to);
        cur = std::move(next);
        if (cur.empty()) return false;
    }
    return std::any_of(n.finals.begin(), n.finals.end(), [&](int f) { return cur.count(f); });
}

ValenceAutomaton intersect_regular(const ValenceAutomaton& a, const Nfa& n) {
    require(n.alphabet && *n.alphabet == *a.alphabet(), "intersect: alphabet mismatch");
    const int nn = n.num_states;
    auto pair_id = [&](int qa, int qn) { return qa * nn + qn; };
    std::vector<std::string> states;
    states.reserve(a.states().size() * nn);
    for (const auto& sa : a.states())
        for (int qn = 0; qn < nn; ++qn) states.push_back(sa + "*" + std::to_string(qn));

    std::vector<ValenceAutomaton::RawEdge> edges;
    for (const auto& ea : a.edges()) {
        if (!ea.symbol) {
            for (int qn = 0; qn < nn; ++qn)
                edges.push_back({pair_id(ea.from, qn), {}, ea.element, pair_id(ea.to, qn)});
        } else {
            for (const auto& en : n.edges)
                if (en.symbol == *ea.symbol)
                    edges.push_back({pair_id(ea.from, en.from),
                                     {*ea.symbol},
                                     ea.element,
                                     pair_id(ea.to, en.to)});
        }
    }
    std::vector<int> finals;
    for (int fa : a.finals())
        for (int fn : n.finals) finals.push_back(pair_id(fa, fn));
    return ValenceAutomaton(std::move(states), a.alphabet(), a.monoid(), std::move(edges),
                            pair_id(a.initial(), n.initial), std::move(finals));
}

ValenceAutomaton hat_automaton(const ValenceAutomaton& a) {
    std::vector<std::string> symbols;
    symbols.reserve(a.edges().size());
    for (std::size_t e = 0; e < a.edges().size(); ++e) symbols.push_back("e" + std::to_string(e));
    auto hat_alphabet = Alphabet::make(std::move(symbols));
    std::vector<ValenceAutomaton::RawEdge> edges;
    for (std::size_t e = 0; e < a.edges().size(); ++e) {
        const auto& edge = a.edges()[e];
        edges.push_back({edge.from, {static_cast<int>(e)}, edge.element, edge.to});
    }
    return ValenceAutomaton(a.states(), std::move(hat_alphabet), a.monoid(), std::move(edges),
                            a.initial(), a.finals());
}

std::vector<Multiset> edge_input_parikh(const ValenceAutomaton& a) {
    std::vector<Multiset> out;
    out.reserve(a.edges().size());
    for (const auto& edge : a.edges()) {
        Multiset m(a.alphabet());
        if (edge.symbol) ++m.count(*edge.symbol);
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<int> parse_word(const Alphabet& alphabet, const std::string& text) {
    // Greedy longest-match tokenization against the alphabet symbols.
    std::vector<int> word;
    std::size_t pos = 0;
    while (pos < text.size()) {
        int best = -1;
        std::size_t best_len = 0;
        for (int i = 0; i < alphabet.size(); ++i) {
            const auto& sym = alphabet.symbol(i);
            if (sym.size() > best_len && text.compare(pos, sym.size(), sym) == 0) {
                best = i;
                best_len = sym.size();
            }
        }
        if (best < 0) throw std::invalid_argument("word: unknown symbol at offset " +
                                                  std::to_string(pos));
        word.push_back(best);
        pos += best_len;
    }
    return word;
}

std::string format_word(const Alphabet& alphabet, const std::vector<int>& word) {
    std::string out;
    for (int s : word) out += alphabet.symbol(s);
    return out;
}

}  // namespace valence
