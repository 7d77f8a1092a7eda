#pragma once

// Test-only oracles, implemented independently of the library code paths
// they check.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "valence/automaton.hpp"
#include "valence/classifier.hpp"
#include "valence/monoid.hpp"
#include "valence/semilinear.hpp"
#include "valence/torsion.hpp"

namespace oracles {

// A loop-annotated graph in plain form.
struct LoopGraph {
    int n = 0;
    std::vector<bool> looped;
    std::vector<std::pair<int, int>> edges;

    bool adjacent(int u, int v) const {
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    }
};

// Letters encoded as 2*vertex (positive) and 2*vertex+1 (negative).
using Word = std::vector<int>;

// Closure of {w} under adjacent commutations and adjacent cancelling-pair
// deletions; true iff the empty word is reachable. Length never grows, so
// the closure is finite.
bool closure_identity(const LoopGraph& g, const Word& w);

// All identity words of length <= max_len: closure of the empty word under
// cancelling-pair insertions and commutations (the inverse moves of
// closure_identity).
std::set<Word> identity_words_up_to(const LoopGraph& g, std::size_t max_len);

// Chordality by exhaustive induced-cycle enumeration.
bool brute_chordal(const valence::Adjacency& g);

// Forbidden-pattern scan for the semilinearity classifier, written directly
// over vertex tuples.
bool brute_all_semilinear(const valence::StorageGraph& g);

// The virtually-free-style conditions on an all-group annotation (finite =
// fri, infinite = not), coded verbatim as four separate scans.
bool brute_group_context_free(const valence::AnnotatedProductGraph& g);

// Exact Parikh vectors inside [0,box]^X of the language of a valence
// automaton over a finite group: saturation over (state, storage value,
// truncated letter counts). Requires a finite-group storage monoid.
std::set<std::vector<std::uint64_t>> parikh_box_vectors(const valence::ValenceAutomaton& a,
                                                        std::uint64_t box);

// Same set computed through word enumeration (independent path; trivial or
// small groups only, bounded by max_len/max_steps).
std::set<std::vector<std::uint64_t>> parikh_box_by_enumeration(const valence::ValenceAutomaton& a,
                                                               std::uint64_t box,
                                                               std::size_t max_len,
                                                               std::size_t max_steps);

// Bounded witness search: is some accepted word's Parikh vector exactly v?
// Used for soundness checks when the storage group is infinite.
bool has_word_with_parikh(const valence::ValenceAutomaton& a,
                          const std::vector<std::uint64_t>& v, std::size_t max_steps,
                          std::size_t storage_cap);

// Loop-insertion members by explicit word surgery: all loop multisets of
// total count <= max_insertions for which inserting loops into the skeleton
// (at matching states, nesting allowed) reaches an accepting computation.
// Every candidate word is built explicitly and checked with the monoid
// kernel, so this also exercises the insertion relation itself.
std::set<std::vector<std::uint64_t>> brute_insertion_members(const valence::ValenceAutomaton& hat,
                                                             const std::vector<int>& skeleton,
                                                             const valence::LoopAlphabet& loops,
                                                             std::uint64_t max_insertions);

// Closed-form language predicates for the engine corpus.
bool is_dyck(const std::string& w);                  // over x / X
bool is_anbmcndm(const std::string& w);              // over a,b,c,d
bool has_even_count(const std::string& w, char c);

}  // namespace oracles
