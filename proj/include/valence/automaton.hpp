#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "valence/monoid.hpp"
#include "valence/semilinear.hpp"

namespace valence {

/// A finite automaton whose edges carry an input word (at most one symbol
/// after normalization) and a storage monoid element. A run accepts when it
/// consumes the whole input, ends in a final state and its storage product
/// is the identity.
class ValenceAutomaton {
public:
    struct Edge {
        int from;
        std::optional<int> symbol;  // nullopt = silent edge
        MonoidElement element;
        int to;
    };

    struct RawEdge {
        int from;
        std::vector<int> word;  // any length, symbol indices
        MonoidElement element;
        int to;
    };

    /// Multi-symbol edge words are split into chains of fresh states; the
    /// first piece keeps the monoid element.
    ValenceAutomaton(std::vector<std::string> states, AlphabetPtr alphabet, DescriptorPtr monoid,
                     std::vector<RawEdge> raw_edges, int initial, std::vector<int> finals);

    const std::vector<std::string>& states() const { return states_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }
    const DescriptorPtr& monoid() const { return monoid_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int initial() const { return initial_; }
    const std::vector<int>& finals() const { return finals_; }
    bool is_final(int q) const;

    int state_index(const std::string& name) const;  // -1 if absent

private:
    std::vector<std::string> states_;
    AlphabetPtr alphabet_;
    DescriptorPtr monoid_;
    std::vector<Edge> edges_;
    int initial_ = 0;
    std::vector<int> finals_;
};

inline constexpr std::size_t kDefaultStorageCap = 64;

struct RunResult {
    bool accepted = false;
    std::vector<int> run;  // edge indices of an accepting run, when accepted
    /// True when some branch was abandoned because its storage exceeded the
    /// cap; a negative verdict is then bounded in one more way.
    bool storage_capped = false;
};

/// Bounded membership: BFS over configurations (state, storage, position),
/// deduplicated on the reduced storage payload, using at most max_steps
/// edges. A negative answer is a bounded verdict, not a proof, whenever
/// silent edges exist.
RunResult accepts_bounded(const ValenceAutomaton& a, const std::vector<int>& word,
                          std::size_t max_steps, std::size_t storage_cap = kDefaultStorageCap);

/// All accepted words of length <= max_len reachable with at most max_steps
/// edges, in (length, lex) order.
std::vector<std::vector<int>> enumerate_language(const ValenceAutomaton& a, std::size_t max_len,
                                                 std::size_t max_steps,
                                                 std::size_t storage_cap = kDefaultStorageCap);

/// Fold the run's storage elements and re-check acceptance; used by tests
/// and the CLI to validate witnesses.
bool replay_run(const ValenceAutomaton& a, const std::vector<int>& word,
                const std::vector<int>& run);

/// Plain NFA over the same alphabet type (no silent edges).
struct Nfa {
    int num_states = 0;
    AlphabetPtr alphabet;
    struct Edge {
        int from;
        int symbol;
        int to;
    };
    std::vector<Edge> edges;
    int initial = 0;
    std::vector<int> finals;
};

bool nfa_accepts(const Nfa& n, const std::vector<int>& word);

/// Product automaton accepting L(a) n L(n); storage is carried on the
/// valence component.
ValenceAutomaton intersect_regular(const ValenceAutomaton& a, const Nfa& n);

/// The edge-alphabet automaton: same states, one fresh input symbol per
/// edge, same storage elements. Symbol i of the result corresponds to edge i
/// of the argument.
ValenceAutomaton hat_automaton(const ValenceAutomaton& a);

/// Input-word Parikh map of each edge, as multisets over a.alphabet();
/// indexed like a.edges(). Together with hat_automaton this is the
/// edge-to-input projection.
std::vector<Multiset> edge_input_parikh(const ValenceAutomaton& a);

std::vector<int> parse_word(const Alphabet& alphabet, const std::string& text);
std::string format_word(const Alphabet& alphabet, const std::vector<int>& word);

}  // namespace valence
