#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "valence/monoid.hpp"

namespace valence {

/// One designated generator of a factor: a symbol name and its value.
struct GeneratorSymbol {
    std::string name;
    MonoidElement value;
};

struct AmalgamFactor {
    DescriptorPtr monoid;
    std::vector<GeneratorSymbol> alphabet;
};

/// A finite identified subgroup F shared by both factors. Element 0 is the
/// identity; embeddings map abstract elements to factor elements and must be
/// injective homomorphisms. symbol_of[i][f] names the designated alphabet
/// symbol of factor i evaluating to F-element f.
struct FiniteSubgroup {
    std::vector<MonoidElement> embed0;
    std::vector<MonoidElement> embed1;
    std::vector<int> symbol_of0;
    std::vector<int> symbol_of1;
};

/// A free product of two monoids, optionally amalgamated over a finite
/// subgroup of group factors.
class AmalgamSpec {
public:
    AmalgamSpec(AmalgamFactor f0, AmalgamFactor f1,
                std::optional<FiniteSubgroup> subgroup = std::nullopt);

    const AmalgamFactor& factor(int i) const { return i == 0 ? f0_ : f1_; }
    bool amalgamated() const { return subgroup_.has_value(); }
    const FiniteSubgroup& subgroup() const { return *subgroup_; }
    int subgroup_size() const { return amalgamated() ? static_cast<int>(subgroup_->embed0.size()) : 1; }

    const MonoidElement& embedded(int factor, int f) const;
    int symbol_for(int factor, int f) const;
    /// Group structure of F, derived from the factor-0 embedding.
    int f_multiply(int a, int b) const;
    int f_inverse(int a) const;

    /// (factor index, symbol index) of a symbol name; factor = -1 if absent.
    std::pair<int, int> find_symbol(const std::string& name) const;

private:
    AmalgamFactor f0_;
    AmalgamFactor f1_;
    std::optional<FiniteSubgroup> subgroup_;
    std::vector<std::vector<int>> f_mult_;
    std::vector<int> f_inv_;
};

/// A letter of the combined alphabet.
struct AmalgamLetter {
    int factor;
    int symbol;
    friend bool operator==(const AmalgamLetter&, const AmalgamLetter&) = default;
};

using AmalgamWord = std::vector<AmalgamLetter>;

AmalgamWord parse_amalgam_word(const AmalgamSpec& spec, const std::string& text);

struct InF {
    int f;
};
struct NotInF {};
struct UnknownBlockValue {
    int bound;
};
using BlockValue = std::variant<InF, NotInF, UnknownBlockValue>;

/// Value class of a one-factor word: the identified-subgroup element it
/// equals, if any.
BlockValue factor_block_value(const AmalgamSpec& spec, int factor, const std::vector<int>& word);

/// Whether the word denotes the identity of the (amalgamated) free product.
/// Splits into maximal one-factor blocks; a single block is decided inside
/// its factor, otherwise the leftmost block whose value lies in F is
/// contracted (replaced by the designated symbol of the other factor, or
/// deleted when F is trivial) and the test recurses. Words with at least two
/// blocks and no block in F cannot be the identity.
bool identity_membership(const AmalgamSpec& spec, const AmalgamWord& word);

/// One grammar production: the nonterminal (a designated symbol of one
/// factor) rewrites to the language of other-factor words evaluating to f.
struct Production {
    std::string nonterminal;
    int nonterminal_factor;
    int target_factor;
    int f;
};

/// Symbolic production table; 2|F| entries, start symbol the factor-0
/// identity nonterminal. Identity nonterminals are synthesized as e0/e1 when
/// the alphabets carry no identity-valued symbol.
std::vector<Production> grammar_productions(const AmalgamSpec& spec);

}  // namespace valence
