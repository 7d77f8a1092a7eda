#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valence/graph.hpp"
#include "valence/monoid.hpp"

namespace valence {

/// Loop-annotated graph: an unlooped vertex stands for a bicyclic factor, a
/// looped one for an integer factor.
struct StorageGraph {
    std::vector<std::string> names;
    std::vector<bool> looped;
    Adjacency adj{0};

    int size() const { return adj.size(); }
    int find_vertex(const std::string& name) const;
    StorageGraph induced(std::uint64_t keep) const;
};

/// The corresponding graph product of bicyclic/integer factors.
DescriptorPtr storage_graph_monoid(const StorageGraph& g);

/// Per-vertex facts about a general graph-product factor. These are inputs:
/// none of them is decidable from a presentation in general.
struct VertexAnnotation {
    bool fri = true;           // finitely many right-invertible elements in
                               // every finitely generated submonoid
    bool context_free = true;  // valence automata over the factor accept only
                               // context-free languages
    bool j_trivial = false;    // the unit J-class is {1}
};

struct AnnotatedProductGraph {
    std::vector<std::string> names;
    Adjacency adj{0};
    std::vector<VertexAnnotation> annotations;

    int size() const { return adj.size(); }
};

struct ChordalityResult {
    bool chordal = false;
    std::vector<int> elimination_order;  // perfect elimination order when chordal
    std::vector<int> induced_cycle;      // a chordless cycle of length >= 4 otherwise
};

/// Simplicial-vertex elimination; on failure returns an induced cycle found
/// by a shortest-path search around a non-simplicial vertex.
ChordalityResult is_chordal(const Adjacency& g);

enum class Pattern4 { C4, P4 };

/// Exhaustive induced-subgraph test over 4-element vertex subsets.
bool has_induced(const Adjacency& g, Pattern4 pattern);
std::optional<std::vector<int>> find_induced(const Adjacency& g, Pattern4 pattern);

bool is_transitive_forest(const Adjacency& g);

struct ClassifierWitness {
    std::string pattern;        // which forbidden configuration
    std::vector<int> vertices;  // the vertices realizing it
};

struct SemilinearVerdict {
    bool all_semilinear = false;
    std::optional<ClassifierWitness> witness;
};

/// Every language of valence automata over the graph's storage monoid has a
/// semilinear letter-count image iff no forbidden configuration occurs: an
/// edge between unlooped vertices, an unlooped vertex with two nonadjacent
/// looped neighbors, or an induced C4/P4 in the underlying loop-free graph.
SemilinearVerdict classify_semilinear(const StorageGraph& g);

struct ContextFreeVerdict {
    bool context_free = false;
    std::optional<ClassifierWitness> witness;
};

/// Context-freeness of the annotated graph product. Vertices with a trivial
/// unit J-class are removed first; they cannot contribute to any run.
ContextFreeVerdict classify_context_free(const AnnotatedProductGraph& g);

struct RegularVerdict {
    bool regular = false;
};

/// Valence automata over the storage monoid accept exactly the regular
/// languages iff the graph is empty (both factor kinds have infinitely many
/// right-invertible elements).
RegularVerdict classify_regular(const StorageGraph& g);

}  // namespace valence
