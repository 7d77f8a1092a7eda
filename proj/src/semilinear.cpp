#include "valence/semilinear.hpp"

#include <algorithm>
#include <stdexcept>

namespace valence {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    require(a && b && (a == b || *a == *b), "alphabet mismatch");
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        for (std::size_t j = i + 1; j < symbols_.size(); ++j)
            require(symbols_[i] != symbols_[j], "alphabet: duplicate symbol");
}

AlphabetPtr Alphabet::make(std::vector<std::string> symbols) {
    return std::make_shared<Alphabet>(std::move(symbols));
}

int Alphabet::index(const std::string& s) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == s) return static_cast<int>(i);
    return -1;
}

Multiset::Multiset(AlphabetPtr alphabet)
    : alphabet_(std::move(alphabet)), counts_(alphabet_ ? alphabet_->size() : 0, 0) {
    require(alphabet_ != nullptr, "multiset: null alphabet");
}

Multiset::Multiset(AlphabetPtr alphabet, std::vector<std::uint64_t> counts)
    : alphabet_(std::move(alphabet)), counts_(std::move(counts)) {
    require(alphabet_ != nullptr, "multiset: null alphabet");
    require(static_cast<int>(counts_.size()) == alphabet_->size(), "multiset: count arity mismatch");
}

std::uint64_t Multiset::total() const {
    std::uint64_t t = 0;
    for (auto c : counts_) t += c;
    return t;
}

bool Multiset::is_zero() const {
    return std::all_of(counts_.begin(), counts_.end(), [](std::uint64_t c) { return c == 0; });
}

Multiset Multiset::operator+(const Multiset& o) const {
    require_same_alphabet(alphabet_, o.alphabet_);
    std::vector<std::uint64_t> out(counts_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.counts_[i];
    return {alphabet_, std::move(out)};
}

Multiset Multiset::scaled(std::uint64_t n) const {
    std::vector<std::uint64_t> out(counts_);
    for (auto& c : out) c *= n;
    return {alphabet_, std::move(out)};
}

std::optional<Multiset> Multiset::minus(const Multiset& o) const {
    require_same_alphabet(alphabet_, o.alphabet_);
    std::vector<std::uint64_t> out(counts_);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] < o.counts_[i]) return std::nullopt;
        out[i] -= o.counts_[i];
    }
    return Multiset{alphabet_, std::move(out)};
}

bool leq(const Multiset& a, const Multiset& b) {
    require_same_alphabet(a.alphabet(), b.alphabet());
    for (int i = 0; i < a.alphabet()->size(); ++i)
        if (a.count(i) > b.count(i)) return false;
    return true;
}

bool leq_k(const Multiset& a, const Multiset& b, std::uint64_t k) {
    require(k >= 1, "leq_k: k must be positive");
    require_same_alphabet(a.alphabet(), b.alphabet());
    for (int i = 0; i < a.alphabet()->size(); ++i) {
        if (a.count(i) > b.count(i)) return false;
        if ((b.count(i) - a.count(i)) % k != 0) return false;
    }
    return true;
}

Multiset parikh(const AlphabetPtr& alphabet, const std::vector<int>& word) {
    Multiset m(alphabet);
    for (int s : word) {
        require(s >= 0 && s < alphabet->size(), "parikh: symbol out of range");
        ++m.count(s);
    }
    return m;
}

LinearSet::LinearSet(Multiset base_, std::vector<Multiset> periods_) : base(std::move(base_)) {
    for (auto& p : periods_) {
        require_same_alphabet(base.alphabet(), p.alphabet());
        if (!p.is_zero()) periods.push_back(std::move(p));
    }
    std::sort(periods.begin(), periods.end());
    periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
}

bool LinearSet::contains(const Multiset& target) const {
    auto rest = target.minus(base);
    if (!rest) return false;
    // DFS over coefficients; each period's coefficient is bounded by the
    // remaining counts on its support.
    std::function<bool(std::size_t, const Multiset&)> solve =
        [&](std::size_t i, const Multiset& remaining) -> bool {
        if (remaining.is_zero()) return true;
        if (i == periods.size()) return false;
        std::uint64_t bound = UINT64_MAX;
        const Multiset& p = periods[i];
        for (int s = 0; s < p.alphabet()->size(); ++s)
            if (p.count(s) > 0) bound = std::min(bound, remaining.count(s) / p.count(s));
        Multiset cur = remaining;
        for (std::uint64_t m = 0; m <= bound; ++m) {
            if (solve(i + 1, cur)) return true;
            if (m < bound) cur = *cur.minus(p);
        }
        return false;
    };
    return solve(0, *rest);
}

bool LinearSet::operator<(const LinearSet& o) const {
    if (!(base == o.base)) return base < o.base;
    return periods < o.periods;
}

SemilinearSet::SemilinearSet(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
    require(alphabet_ != nullptr, "semilinear: null alphabet");
}

SemilinearSet::SemilinearSet(AlphabetPtr alphabet, std::vector<LinearSet> components)
    : alphabet_(std::move(alphabet)), components_(std::move(components)) {
    require(alphabet_ != nullptr, "semilinear: null alphabet");
    for (const auto& c : components_) require_same_alphabet(alphabet_, c.base.alphabet());
}

void SemilinearSet::add(LinearSet c) {
    require_same_alphabet(alphabet_, c.base.alphabet());
    components_.push_back(std::move(c));
}

bool SemilinearSet::contains(const Multiset& target) const {
    require_same_alphabet(alphabet_, target.alphabet());
    return std::any_of(components_.begin(), components_.end(),
                       [&](const LinearSet& c) { return c.contains(target); });
}

void SemilinearSet::normalize() {
    std::sort(components_.begin(), components_.end());
    components_.erase(std::unique(components_.begin(), components_.end()), components_.end());
}

SemilinearSet set_union(const SemilinearSet& a, const SemilinearSet& b) {
    require_same_alphabet(a.alphabet(), b.alphabet());
    SemilinearSet out(a.alphabet());
    for (const auto& c : a.components()) out.add(c);
    for (const auto& c : b.components()) out.add(c);
    return out;
}

SemilinearSet set_sum(const SemilinearSet& a, const SemilinearSet& b) {
    require_same_alphabet(a.alphabet(), b.alphabet());
    SemilinearSet out(a.alphabet());
    for (const auto& ca : a.components())
        for (const auto& cb : b.components()) {
            std::vector<Multiset> periods = ca.periods;
            periods.insert(periods.end(), cb.periods.begin(), cb.periods.end());
            out.add(LinearSet(ca.base + cb.base, std::move(periods)));
        }
    return out;
}

SemilinearSet morph_image(const SemilinearSet& s, const AlphabetPtr& target,
                          const std::vector<Multiset>& h) {
    require(static_cast<int>(h.size()) == s.alphabet()->size(), "morph_image: map arity mismatch");
    for (const auto& img : h) require_same_alphabet(img.alphabet(), target);
    auto apply = [&](const Multiset& m) {
        Multiset out(target);
        for (int i = 0; i < m.alphabet()->size(); ++i)
            if (m.count(i) > 0) out = out + h[i].scaled(m.count(i));
        return out;
    };
    SemilinearSet out(target);
    for (const auto& c : s.components()) {
        std::vector<Multiset> periods;
        periods.reserve(c.periods.size());
        for (const auto& p : c.periods) periods.push_back(apply(p));
        out.add(LinearSet(apply(c.base), std::move(periods)));
    }
    return out;
}

SemilinearSet upward_closure_k(const std::vector<Multiset>& minimals, std::uint64_t k,
                               const AlphabetPtr& alphabet) {
    require(k >= 1, "upward_closure_k: k must be positive");
    SemilinearSet out(alphabet);
    std::vector<Multiset> periods;
    for (int i = 0; i < alphabet->size(); ++i) {
        Multiset unit(alphabet);
        unit.count(i) = k;
        periods.push_back(std::move(unit));
    }
    for (const auto& m : minimals) out.add(LinearSet(m, periods));
    return out;
}

void for_each_in_box(const AlphabetPtr& alphabet, std::uint64_t bound,
                     const std::function<void(const Multiset&)>& fn) {
    Multiset m(alphabet);
    const int n = alphabet->size();
    std::function<void(int)> walk = [&](int i) {
        if (i == n) {
            fn(m);
            return;
        }
        for (std::uint64_t c = 0; c <= bound; ++c) {
            m.count(i) = c;
            walk(i + 1);
        }
        m.count(i) = 0;
    };
    walk(0);
}

std::optional<BoxDifference> box_difference(const SemilinearSet& a, const SemilinearSet& b,
                                            std::uint64_t bound) {
    require_same_alphabet(a.alphabet(), b.alphabet());
    std::optional<BoxDifference> diff;
    for_each_in_box(a.alphabet(), bound, [&](const Multiset& m) {
        if (diff) return;
        bool ia = a.contains(m), ib = b.contains(m);
        if (ia != ib) diff = BoxDifference{m, ia};
    });
    return diff;
}

}  // namespace valence
