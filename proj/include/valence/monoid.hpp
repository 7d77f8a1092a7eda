#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "valence/graph.hpp"

namespace valence {

class MonoidDescriptor;
using DescriptorPtr = std::shared_ptr<const MonoidDescriptor>;

enum class MonoidKind {
    Bicyclic,        // <x, X | xX = 1>, elements X^a x^b
    Integers,        // (Z, +)
    FinitePermGroup, // permutations of {0..degree-1}
    Grigorchuk,      // the self-similar 2-group on {a,b,c,d}
    GraphProduct,    // graph product of bicyclic/integer factors
    DirectProduct,
};

/// Shape of a storage monoid. Descriptors are immutable and shared; elements
/// keep a pointer to their descriptor.
class MonoidDescriptor {
public:
    MonoidKind kind = MonoidKind::Bicyclic;
    int degree = 0;                       // FinitePermGroup only
    std::vector<DescriptorPtr> factors;   // GraphProduct / DirectProduct
    Adjacency graph{0};                   // GraphProduct: loop-free commutation graph
    std::vector<std::string> vertex_names;

    static DescriptorPtr bicyclic();
    static DescriptorPtr integers();
    static DescriptorPtr perm_group(int degree);
    static DescriptorPtr trivial_group();  // perm_group(1)
    static DescriptorPtr grigorchuk();
    static DescriptorPtr direct_product(std::vector<DescriptorPtr> fs);
    /// Graph product; every factor must be bicyclic or integers (the only
    /// kinds whose elements are words over one positive/negative generator
    /// pair). Vertex names default to v0, v1, ...
    static DescriptorPtr graph_product(Adjacency g, std::vector<DescriptorPtr> fs,
                                       std::vector<std::string> names = {});

    bool is_group() const;
    bool structurally_equal(const MonoidDescriptor& o) const;
    int find_vertex(const std::string& name) const;  // -1 if absent
};

/// One generator occurrence in a graph-product word: a_v (neg = false) or
/// the formal inverse a_v^- (neg = true).
struct GenLetter {
    int vertex = 0;
    bool neg = false;
    friend bool operator==(const GenLetter&, const GenLetter&) = default;
    friend bool operator<(const GenLetter& a, const GenLetter& b) {
        return a.vertex != b.vertex ? a.vertex < b.vertex : a.neg < b.neg;
    }
};

using GenWord = std::vector<GenLetter>;

class MonoidElement;
using ElementTuple = std::vector<MonoidElement>;

/// An element in reduced form. The payload alternative is determined by the
/// descriptor kind (see MonoidKind order).
class MonoidElement {
public:
    using BicyclicPayload = std::pair<std::uint64_t, std::uint64_t>;  // (a, b) = X^a x^b
    using Payload = std::variant<BicyclicPayload,
                                 std::int64_t,               // Integers
                                 std::vector<std::uint8_t>,  // permutation images
                                 std::string,                // Grigorchuk reduced word
                                 GenWord,                    // graph-product canonical word
                                 ElementTuple>;              // direct product

    MonoidElement(DescriptorPtr d, Payload p);

    const DescriptorPtr& descriptor() const { return desc_; }
    const Payload& payload() const { return payload_; }

    MonoidElement operator*(const MonoidElement& rhs) const;
    bool is_identity() const;

    /// Canonical textual key. Distinct keys imply distinct elements; for
    /// every kind except Grigorchuk equal elements have equal keys.
    std::string key() const;

    /// Rough payload size, used to cap storage growth during searches.
    std::size_t size_hint() const;

    friend bool operator==(const MonoidElement& a, const MonoidElement& b) {
        return a.payload_ == b.payload_;
    }

private:
    DescriptorPtr desc_;
    Payload payload_;
};

MonoidElement identity(const DescriptorPtr& d);

/// Exact element equality (uses the word problem for Grigorchuk payloads).
bool elements_equal(const MonoidElement& x, const MonoidElement& y);

/// Inverse; throws for non-group descriptors.
MonoidElement inverse(const MonoidElement& x);

/// Supported for bicyclic, integers, permutation groups, Grigorchuk and
/// direct products of these; throws for graph products.
bool is_right_invertible(const MonoidElement& x);
bool is_left_invertible(const MonoidElement& x);

enum class JVerdict { Yes, NoWithinBound };

/// Semi-decision for membership of x in the two-sided unit class: searches
/// words b, c of length <= bound over the standard generating set with
/// b x c = 1.
JVerdict in_j_bounded(const MonoidElement& x, int bound);

inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 16;

struct TooLarge {};
using OrderResult = std::variant<std::uint64_t, TooLarge>;

/// Least k >= 1 with x^k = 1, or TooLarge past the cap. Requires a group
/// descriptor (integers allowed; nonzero integers report TooLarge).
OrderResult element_order(const MonoidElement& x, std::uint64_t cap = kDefaultOrderCap);

/// Graph-product word reduction: cancels generator pairs that can be brought
/// together through commuting letters (both orders for integer factors,
/// positive-then-negative only for bicyclic ones), then linearizes the
/// resulting trace lexicographically. The result is the canonical payload.
GenWord reduce_word(const MonoidDescriptor& gp, GenWord w);

/// Reduction fixpoint only (no linearization); empty iff the word is the
/// identity.
GenWord reduce_word_fixpoint_only(const MonoidDescriptor& gp, GenWord w);

MonoidElement graph_word_element(const DescriptorPtr& gp, GenWord w);
MonoidElement grigorchuk_element(const DescriptorPtr& d, const std::string& word);

/// Standard generating set used by in_j_bounded, as elements.
std::vector<MonoidElement> standard_generators(const DescriptorPtr& d);

namespace grig {
/// Reduce a word over {a,b,c,d}: squares vanish, adjacent {b,c,d} letters
/// combine inside the Klein four-group.
std::string reduce(const std::string& w);
/// Word problem via the section (portrait) recursion; input must be reduced.
bool is_identity(const std::string& reduced);
}  // namespace grig

}  // namespace valence
