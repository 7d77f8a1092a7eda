#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "valence/automaton.hpp"
#include "valence/semilinear.hpp"

namespace valence {

/// A loop through the edge-alphabet automaton that returns to its base state
/// and whose intermediate target states are pairwise distinct. Its length is
/// bounded by the state count, so for each state set there are finitely many.
struct SimpleLoop {
    int base = 0;
    std::vector<int> edges;  // edge indices
};

/// The loops usable inside computations visiting exactly the state set,
/// together with the alphabet naming them (y0, y1, ...).
struct LoopAlphabet {
    std::uint64_t state_set = 0;
    std::vector<SimpleLoop> loops;
    AlphabetPtr symbols;
};

/// Accepting-shaped computations with visited-state set exactly state_set.
struct SkeletonSet {
    std::uint64_t state_set = 0;
    std::vector<std::vector<int>> members;  // edge-index words
    bool truncated = false;                 // enumeration budget was hit
};

/// |Q| * (2^|Q| + 1): any longer computation with this visited set contains a
/// removable simple loop.
std::size_t default_skeleton_bound(int num_states);

LoopAlphabet simple_loops(const ValenceAutomaton& hat, std::uint64_t state_set);

/// All initial-to-final computations with visited set exactly state_set and
/// length within the bound. With prune_subsumed, computations containing a
/// simple loop whose removal preserves the visited set are dropped: each is
/// reachable from a retained one by loop insertions, so the extraction terms
/// it would contribute are subsumed.
SkeletonSet skeletons(const ValenceAutomaton& hat, std::uint64_t state_set,
                      std::size_t length_bound, bool prune_subsumed = false,
                      std::size_t node_budget = 200000);

/// lcm of the storage orders of the loops' values; 1 when there are none.
/// Throws TorsionCapError when an order exceeds the cap (non-torsion input
/// or a cap that is too small).
std::uint64_t loop_modulus(const ValenceAutomaton& hat, const LoopAlphabet& loops,
                           std::uint64_t order_cap = kDefaultOrderCap);

struct TorsionCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchBudget {
    std::uint64_t scan_budget = 2000000;     // candidate multisets per skeleton
    std::size_t dp_cell_budget = 400000;     // populated (budget, value-set) cells
    std::uint64_t dp_op_budget = 100000000;  // set-product operations
};

/// Minimal elements (wrt componentwise order refined by congruence mod k) of
/// the set of loop multisets that extend the skeleton to an accepting
/// computation. Exhaustive for total size <= scanned_radius; complete is
/// true when scanned_radius reached the requested radius.
struct MinimalBasis {
    std::vector<Multiset> minimals;  // over the loop alphabet
    std::uint64_t scanned_radius = 0;
    bool complete = true;
    std::uint64_t audit_violations = 0;  // upward-closure spot checks that failed
};

MinimalBasis uv_minimals(const ValenceAutomaton& hat, const std::vector<int>& skeleton,
                         const LoopAlphabet& loops, std::uint64_t k, std::uint64_t radius,
                         const SearchBudget& budget = {});

struct ExtractionOptions {
    std::uint64_t radius = 0;       // 0: per state set, twice modulus times loop count
    std::uint64_t order_cap = kDefaultOrderCap;
    std::size_t skeleton_bound = 0;  // 0: the default bound
    std::size_t skeleton_budget = 200000;
    SearchBudget search;
    int threads = 0;  // 0: honor VALENCE_THREADS, else 1
};

struct PerSkeletonData {
    std::vector<int> word;
    std::vector<Multiset> minimals;
    std::uint64_t scanned_radius = 0;
    bool complete = true;
};

struct PerStateSetData {
    std::uint64_t state_set = 0;
    LoopAlphabet loops;
    SkeletonSet skeleton_set;
    std::uint64_t modulus = 1;
    std::uint64_t requested_radius = 0;
    std::vector<PerSkeletonData> per_skeleton;
};

struct ExtractionResult {
    AlphabetPtr edge_alphabet;
    std::vector<PerStateSetData> per_state_set;
    SemilinearSet edge_level;       // letter counts over the edge alphabet
    SemilinearSet assembled;        // projected to the input alphabet
    std::uint64_t complete_within_radius = 0;
    bool complete = true;
    std::uint64_t audit_violations = 0;
};

/// Semilinear representation of the Parikh image of a valence automaton over
/// a torsion group: per state set S, enumerate loop alphabets and skeleton
/// cores, compute a modulus k with trivial k-th loop powers, extract the
/// minimal loop multisets per skeleton, and assemble base-plus-period
/// components whose periods are the k-fold loop counts.
ExtractionResult extract(const ValenceAutomaton& a, const ExtractionOptions& opts = {});

}  // namespace valence
