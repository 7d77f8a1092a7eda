#include "valence/amalgam.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace valence {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

MonoidElement eval_word(const AmalgamFactor& factor, const std::vector<int>& word) {
    MonoidElement value = identity(factor.monoid);
    for (int s : word) {
        require(s >= 0 && s < static_cast<int>(factor.alphabet.size()),
                "amalgam: symbol out of range");
        value = value * factor.alphabet[s].value;
    }
    return value;
}

}  // namespace

AmalgamSpec::AmalgamSpec(AmalgamFactor f0, AmalgamFactor f1,
                         std::optional<FiniteSubgroup> subgroup)
    : f0_(std::move(f0)), f1_(std::move(f1)), subgroup_(std::move(subgroup)) {
    require(f0_.monoid != nullptr && f1_.monoid != nullptr, "amalgam: null factor monoid");
    for (const auto& fac : {std::cref(f0_), std::cref(f1_)})
        for (const auto& sym : fac.get().alphabet)
            require(sym.value.descriptor()->structurally_equal(*fac.get().monoid),
                    "amalgam: symbol value over wrong monoid");
    // Symbol names must be disjoint so blocks are recoverable from words.
    for (const auto& s0 : f0_.alphabet)
        for (const auto& s1 : f1_.alphabet)
            require(s0.name != s1.name, "amalgam: duplicate symbol across factors");

    if (!subgroup_) return;
    require(f0_.monoid->kind == MonoidKind::FinitePermGroup &&
                f1_.monoid->kind == MonoidKind::FinitePermGroup,
            "amalgam: nontrivial identified subgroup needs finite group factors");
    const int m = static_cast<int>(subgroup_->embed0.size());
    require(m >= 1 && static_cast<int>(subgroup_->embed1.size()) == m,
            "amalgam: embedding size mismatch");
    require(subgroup_->embed0[0].is_identity() && subgroup_->embed1[0].is_identity(),
            "amalgam: subgroup element 0 must embed to the identity");
    require(static_cast<int>(subgroup_->symbol_of0.size()) == m &&
                static_cast<int>(subgroup_->symbol_of1.size()) == m,
            "amalgam: designated symbol table size mismatch");
    for (int f = 0; f < m; ++f) {
        int s0 = subgroup_->symbol_of0[f];
        int s1 = subgroup_->symbol_of1[f];
        require(s0 >= 0 && s0 < static_cast<int>(f0_.alphabet.size()) && s1 >= 0 &&
                    s1 < static_cast<int>(f1_.alphabet.size()),
                "amalgam: designated symbol out of range");
        require(elements_equal(f0_.alphabet[s0].value, subgroup_->embed0[f]),
                "amalgam: designated symbol of factor 0 has wrong value");
        require(elements_equal(f1_.alphabet[s1].value, subgroup_->embed1[f]),
                "amalgam: designated symbol of factor 1 has wrong value");
    }
    // Injectivity, and the group structure of F via the factor-0 embedding.
    auto find_f0 = [&](const MonoidElement& e) {
        for (int f = 0; f < m; ++f)
            if (elements_equal(subgroup_->embed0[f], e)) return f;
        return -1;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            require(!elements_equal(subgroup_->embed0[i], subgroup_->embed0[j]),
                    "amalgam: embedding 0 not injective");
            require(!elements_equal(subgroup_->embed1[i], subgroup_->embed1[j]),
                    "amalgam: embedding 1 not injective");
        }
    f_mult_.assign(m, std::vector<int>(m, -1));
    f_inv_.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            int k0 = find_f0(subgroup_->embed0[i] * subgroup_->embed0[j]);
            require(k0 >= 0, "amalgam: identified subgroup not closed in factor 0");
            int k1 = -1;
            MonoidElement p1 = subgroup_->embed1[i] * subgroup_->embed1[j];
            for (int f = 0; f < m; ++f)
                if (elements_equal(subgroup_->embed1[f], p1)) k1 = f;
            require(k1 == k0, "amalgam: embeddings disagree on the subgroup product");
            f_mult_[i][j] = k0;
            if (k0 == 0) f_inv_[i] = j;
        }
        require(f_inv_[i] >= 0, "amalgam: subgroup element without inverse");
    }
}

const MonoidElement& AmalgamSpec::embedded(int factor, int f) const {
    return factor == 0 ? subgroup_->embed0.at(f) : subgroup_->embed1.at(f);
}

int AmalgamSpec::symbol_for(int factor, int f) const {
    return factor == 0 ? subgroup_->symbol_of0.at(f) : subgroup_->symbol_of1.at(f);
}

int AmalgamSpec::f_multiply(int a, int b) const {
    return f_mult_.at(a).at(b);
}

int AmalgamSpec::f_inverse(int a) const {
    return f_inv_.at(a);
}

std::pair<int, int> AmalgamSpec::find_symbol(const std::string& name) const {
    for (int i = 0; i < 2; ++i) {
        const auto& alphabet = factor(i).alphabet;
        for (std::size_t s = 0; s < alphabet.size(); ++s)
            if (alphabet[s].name == name) return {i, static_cast<int>(s)};
    }
    return {-1, -1};
}

AmalgamWord parse_amalgam_word(const AmalgamSpec& spec, const std::string& text) {
    // Greedy longest-match over both factor alphabets; whitespace separates
    // tokens but is optional.
    AmalgamWord word;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        int best_factor = -1, best_symbol = -1;
        std::size_t best_len = 0;
        for (int i = 0; i < 2; ++i) {
            const auto& alphabet = spec.factor(i).alphabet;
            for (std::size_t s = 0; s < alphabet.size(); ++s) {
                const auto& name = alphabet[s].name;
                if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
                    best_factor = i;
                    best_symbol = static_cast<int>(s);
                    best_len = name.size();
                }
            }
        }
        if (best_factor < 0)
            throw std::invalid_argument("amalgam word: unknown symbol at offset " +
                                        std::to_string(pos));
        word.push_back(AmalgamLetter{best_factor, best_symbol});
        pos += best_len;
    }
    return word;
}

BlockValue factor_block_value(const AmalgamSpec& spec, int factor, const std::vector<int>& word) {
    MonoidElement value = eval_word(spec.factor(factor), word);
    if (!spec.amalgamated()) return value.is_identity() ? BlockValue{InF{0}} : BlockValue{NotInF{}};
    for (int f = 0; f < spec.subgroup_size(); ++f)
        if (elements_equal(value, spec.embedded(factor, f))) return InF{f};
    return NotInF{};
}

namespace {

struct Block {
    int factor;
    std::vector<int> symbols;
};

std::vector<Block> split_blocks(const AmalgamWord& word) {
    std::vector<Block> blocks;
    for (const auto& letter : word) {
        if (blocks.empty() || blocks.back().factor != letter.factor)
            blocks.push_back(Block{letter.factor, {}});
        blocks.back().symbols.push_back(letter.symbol);
    }
    return blocks;
}

}  // namespace

bool identity_membership(const AmalgamSpec& spec, const AmalgamWord& word) {
    AmalgamWord current = word;
    while (true) {
        auto blocks = split_blocks(current);
        if (blocks.empty()) return true;
        if (blocks.size() == 1)
            return eval_word(spec.factor(blocks[0].factor), blocks[0].symbols).is_identity();

        int chosen = -1, chosen_f = 0;
        for (std::size_t j = 0; j < blocks.size() && chosen < 0; ++j) {
            BlockValue bv = factor_block_value(spec, blocks[j].factor, blocks[j].symbols);
            if (std::holds_alternative<UnknownBlockValue>(bv))
                throw std::runtime_error("amalgam: factor evaluation is only bounded");
            if (auto* in = std::get_if<InF>(&bv)) {
                chosen = static_cast<int>(j);
                chosen_f = in->f;
            }
        }
        if (chosen < 0) return false;  // no block meets F: cannot cancel across blocks

        AmalgamWord next;
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (static_cast<int>(j) == chosen) {
                if (spec.amalgamated()) {
                    int other = 1 - blocks[j].factor;
                    next.push_back(AmalgamLetter{other, spec.symbol_for(other, chosen_f)});
                }
                // trivial F: the block evaluates to 1 and is simply dropped
                continue;
            }
            for (int s : blocks[j].symbols) next.push_back(AmalgamLetter{blocks[j].factor, s});
        }
        current = std::move(next);
    }
}

std::vector<Production> grammar_productions(const AmalgamSpec& spec) {
    std::vector<Production> out;
    auto identity_symbol_name = [&](int factor) {
        for (const auto& sym : spec.factor(factor).alphabet)
            if (sym.value.is_identity()) return sym.name;
        return std::string("e") + std::to_string(factor);  // synthesized
    };
    if (!spec.amalgamated()) {
        out.push_back(Production{identity_symbol_name(0), 0, 1, 0});
        out.push_back(Production{identity_symbol_name(1), 1, 0, 0});
        return out;
    }
    for (int i = 0; i < 2; ++i)
        for (int f = 0; f < spec.subgroup_size(); ++f)
            out.push_back(
                Production{spec.factor(i).alphabet[spec.symbol_for(i, f)].name, i, 1 - i, f});
    return out;
}

}  // namespace valence
