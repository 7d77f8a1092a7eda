#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace valence {

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);
    static AlphabetPtr make(std::vector<std::string> symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::string& symbol(int i) const { return symbols_.at(i); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    int index(const std::string& s) const;  // -1 if absent
    bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

private:
    std::vector<std::string> symbols_;
};

/// Map alphabet -> N, total (absent symbols count 0).
class Multiset {
public:
    explicit Multiset(AlphabetPtr alphabet);
    Multiset(AlphabetPtr alphabet, std::vector<std::uint64_t> counts);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    std::uint64_t count(int i) const { return counts_.at(i); }
    std::uint64_t& count(int i) { return counts_.at(i); }
    const std::vector<std::uint64_t>& counts() const { return counts_; }
    std::uint64_t total() const;
    bool is_zero() const;

    Multiset operator+(const Multiset& o) const;
    Multiset scaled(std::uint64_t n) const;
    /// Componentwise difference; nullopt unless o <= *this everywhere.
    std::optional<Multiset> minus(const Multiset& o) const;

    bool operator==(const Multiset& o) const { return counts_ == o.counts_; }
    bool operator<(const Multiset& o) const { return counts_ < o.counts_; }

private:
    AlphabetPtr alphabet_;
    std::vector<std::uint64_t> counts_;
};

/// Componentwise order.
bool leq(const Multiset& a, const Multiset& b);
/// a <= b componentwise and a == b mod k componentwise; k >= 1.
bool leq_k(const Multiset& a, const Multiset& b, std::uint64_t k);

/// Letter counts of a word given as symbol indices.
Multiset parikh(const AlphabetPtr& alphabet, const std::vector<int>& word);

/// base + N-combinations of periods; zero periods are dropped on
/// construction.
struct LinearSet {
    Multiset base;
    std::vector<Multiset> periods;

    LinearSet(Multiset base_, std::vector<Multiset> periods_);
    bool contains(const Multiset& target) const;
    bool operator==(const LinearSet& o) const { return base == o.base && periods == o.periods; }
    bool operator<(const LinearSet& o) const;
};

class SemilinearSet {
public:
    explicit SemilinearSet(AlphabetPtr alphabet);
    SemilinearSet(AlphabetPtr alphabet, std::vector<LinearSet> components);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<LinearSet>& components() const { return components_; }
    bool empty() const { return components_.empty(); }

    void add(LinearSet c);
    bool contains(const Multiset& target) const;
    /// Sort and deduplicate components; output canonicalization.
    void normalize();

private:
    AlphabetPtr alphabet_;
    std::vector<LinearSet> components_;
};

SemilinearSet set_union(const SemilinearSet& a, const SemilinearSet& b);
/// Minkowski sum: pairwise base+base with pooled periods.
SemilinearSet set_sum(const SemilinearSet& a, const SemilinearSet& b);

/// Linear substitution: h maps each source symbol to a multiset over the
/// target alphabet; applied to every base and period.
SemilinearSet morph_image(const SemilinearSet& s, const AlphabetPtr& target,
                          const std::vector<Multiset>& h);

/// One component per minimal element m: base m, periods {k e_x}. This is the
/// semilinear form of the k-upward closure.
SemilinearSet upward_closure_k(const std::vector<Multiset>& minimals, std::uint64_t k,
                               const AlphabetPtr& alphabet);

struct BoxDifference {
    Multiset vector;
    bool in_first = false;  // which side contains it
};

/// Compare membership over the full box [0,bound]^X; nullopt when equal.
std::optional<BoxDifference> box_difference(const SemilinearSet& a, const SemilinearSet& b,
                                            std::uint64_t bound);
inline bool equal_on_box(const SemilinearSet& a, const SemilinearSet& b, std::uint64_t bound) {
    return !box_difference(a, b, bound).has_value();
}

/// Visit every vector in [0,bound]^X.
void for_each_in_box(const AlphabetPtr& alphabet, std::uint64_t bound,
                     const std::function<void(const Multiset&)>& fn);

}  // namespace valence
