#include "valence/monoid.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace valence {

namespace {

std::string default_vertex_name(int i) {
    return "v" + std::to_string(i);
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// Descriptors

DescriptorPtr MonoidDescriptor::bicyclic() {
    auto d = std::make_shared<MonoidDescriptor>();
    d->kind = MonoidKind::Bicyclic;
    return d;
}

DescriptorPtr MonoidDescriptor::integers() {
    auto d = std::make_shared<MonoidDescriptor>();
    d->kind = MonoidKind::Integers;
    return d;
}

DescriptorPtr MonoidDescriptor::perm_group(int degree) {
    require(degree >= 1, "perm_group: degree must be positive");
    require(degree <= 16, "perm_group: degree too large");
    auto d = std::make_shared<MonoidDescriptor>();
    d->kind = MonoidKind::FinitePermGroup;
    d->degree = degree;
    return d;
}

DescriptorPtr MonoidDescriptor::trivial_group() {
    return perm_group(1);
}

DescriptorPtr MonoidDescriptor::grigorchuk() {
    auto d = std::make_shared<MonoidDescriptor>();
    d->kind = MonoidKind::Grigorchuk;
    return d;
}

DescriptorPtr MonoidDescriptor::direct_product(std::vector<DescriptorPtr> fs) {
    auto d = std::make_shared<MonoidDescriptor>();
    d->kind = MonoidKind::DirectProduct;
    d->factors = std::move(fs);
    for (const auto& f : d->factors) require(f != nullptr, "direct_product: null factor");
    return d;
}

DescriptorPtr MonoidDescriptor::graph_product(Adjacency g, std::vector<DescriptorPtr> fs,
                                              std::vector<std::string> names) {
    require(g.size() == static_cast<int>(fs.size()),
            "graph_product: factor list length must equal vertex count");
    for (const auto& f : fs) {
        require(f != nullptr, "graph_product: null factor");
        require(f->kind == MonoidKind::Bicyclic || f->kind == MonoidKind::Integers,
                "graph_product: factors must be bicyclic or integers");
    }
    auto d = std::make_shared<MonoidDescriptor>();
    d->kind = MonoidKind::GraphProduct;
    d->graph = std::move(g);
    d->factors = std::move(fs);
    if (names.empty()) {
        for (int i = 0; i < d->graph.size(); ++i) names.push_back(default_vertex_name(i));
    }
    require(static_cast<int>(names.size()) == d->graph.size(), "graph_product: name count mismatch");
    d->vertex_names = std::move(names);
    return d;
}

bool MonoidDescriptor::is_group() const {
    switch (kind) {
        case MonoidKind::Bicyclic: return false;
        case MonoidKind::Integers:
        case MonoidKind::FinitePermGroup:
        case MonoidKind::Grigorchuk: return true;
        case MonoidKind::GraphProduct:
        case MonoidKind::DirectProduct:
            return std::all_of(factors.begin(), factors.end(),
                               [](const DescriptorPtr& f) { return f->is_group(); });
    }
    return false;
}

bool MonoidDescriptor::structurally_equal(const MonoidDescriptor& o) const {
    if (kind != o.kind || degree != o.degree) return false;
    if (factors.size() != o.factors.size()) return false;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (!factors[i]->structurally_equal(*o.factors[i])) return false;
    if (kind == MonoidKind::GraphProduct && !(graph == o.graph)) return false;
    return true;
}

int MonoidDescriptor::find_vertex(const std::string& name) const {
    for (std::size_t i = 0; i < vertex_names.size(); ++i)
        if (vertex_names[i] == name) return static_cast<int>(i);
    return -1;
}

// ---------------------------------------------------------------------------
// Graph-product word reduction
//
// A pair of letters (i, j), i < j, cancels when letter i is a_v, letter j is
// the matching inverse (either order for integer factors) and every letter
// strictly between them commutes with v. Deletion runs to a fixpoint with a
// fixed scan order: leftmost j, then the largest i below it.

namespace {

bool factor_cancels_both_ways(const MonoidDescriptor& gp, int vertex) {
    return gp.factors[vertex]->kind == MonoidKind::Integers;
}

bool pair_cancels(const MonoidDescriptor& gp, const GenLetter& x, const GenLetter& y) {
    if (x.vertex != y.vertex || x.neg == y.neg) return false;
    if (!x.neg && y.neg) return true;                    // a_v then inverse
    return factor_cancels_both_ways(gp, x.vertex);       // inverse then a_v
}

bool delete_one_pair(const MonoidDescriptor& gp, GenWord& w) {
    const int n = static_cast<int>(w.size());
    for (int j = 1; j < n; ++j) {
        for (int i = j - 1; i >= 0; --i) {
            if (!pair_cancels(gp, w[i], w[j])) continue;
            bool clear = true;
            for (int t = i + 1; t < j && clear; ++t)
                clear = gp.graph.adjacent(w[t].vertex, w[i].vertex);
            if (!clear) continue;
            w.erase(w.begin() + j);
            w.erase(w.begin() + i);
            return true;
        }
    }
    return false;
}

}  // namespace

GenWord reduce_word_fixpoint_only(const MonoidDescriptor& gp, GenWord w) {
    require(gp.kind == MonoidKind::GraphProduct, "reduce_word: graph product expected");
    for (const auto& l : w)
        require(l.vertex >= 0 && l.vertex < gp.graph.size(), "reduce_word: bad vertex index");
    while (delete_one_pair(gp, w)) {
    }
    return w;
}

GenWord reduce_word(const MonoidDescriptor& gp, GenWord w) {
    w = reduce_word_fixpoint_only(gp, w);
    // Lexicographically least linearization of the trace: repeatedly emit the
    // smallest letter that commutes past everything before it. Letters of the
    // same vertex keep their order.
    GenWord out;
    out.reserve(w.size());
    while (!w.empty()) {
        int best = -1;
        for (int p = 0; p < static_cast<int>(w.size()); ++p) {
            bool movable = true;
            for (int q = 0; q < p && movable; ++q)
                movable = gp.graph.adjacent(w[q].vertex, w[p].vertex);
            if (movable && (best < 0 || w[p] < w[best])) best = p;
        }
        out.push_back(w[best]);
        w.erase(w.begin() + best);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elements

namespace {

MonoidElement::Payload normalize(const MonoidDescriptor& d, MonoidElement::Payload p) {
    switch (d.kind) {
        case MonoidKind::Bicyclic:
            require(std::holds_alternative<MonoidElement::BicyclicPayload>(p),
                    "element: bicyclic payload expected");
            break;
        case MonoidKind::Integers:
            require(std::holds_alternative<std::int64_t>(p), "element: integer payload expected");
            break;
        case MonoidKind::FinitePermGroup: {
            auto& perm = std::get<std::vector<std::uint8_t>>(p);
            require(static_cast<int>(perm.size()) == d.degree, "element: permutation size mismatch");
            std::vector<bool> seen(perm.size(), false);
            for (auto v : perm) {
                require(v < perm.size() && !seen[v], "element: not a permutation");
                seen[v] = true;
            }
            break;
        }
        case MonoidKind::Grigorchuk: {
            auto& word = std::get<std::string>(p);
            word = grig::reduce(word);
            break;
        }
        case MonoidKind::GraphProduct: {
            auto& word = std::get<GenWord>(p);
            word = reduce_word(d, std::move(word));
            break;
        }
        case MonoidKind::DirectProduct: {
            auto& tuple = std::get<ElementTuple>(p);
            require(tuple.size() == d.factors.size(), "element: tuple arity mismatch");
            for (std::size_t i = 0; i < tuple.size(); ++i)
                require(tuple[i].descriptor()->structurally_equal(*d.factors[i]),
                        "element: tuple component descriptor mismatch");
            break;
        }
    }
    return p;
}

std::vector<std::uint8_t> identity_perm(int degree) {
    std::vector<std::uint8_t> p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

}  // namespace

MonoidElement::MonoidElement(DescriptorPtr d, Payload p) : desc_(std::move(d)) {
    require(desc_ != nullptr, "element: null descriptor");
    payload_ = normalize(*desc_, std::move(p));
}

MonoidElement identity(const DescriptorPtr& d) {
    require(d != nullptr, "identity: null descriptor");
    switch (d->kind) {
        case MonoidKind::Bicyclic: return {d, MonoidElement::BicyclicPayload{0, 0}};
        case MonoidKind::Integers: return {d, std::int64_t{0}};
        case MonoidKind::FinitePermGroup: return {d, identity_perm(d->degree)};
        case MonoidKind::Grigorchuk: return {d, std::string{}};
        case MonoidKind::GraphProduct: return {d, GenWord{}};
        case MonoidKind::DirectProduct: {
            ElementTuple t;
            for (const auto& f : d->factors) t.push_back(identity(f));
            return {d, std::move(t)};
        }
    }
    throw std::logic_error("identity: bad kind");
}

MonoidElement MonoidElement::operator*(const MonoidElement& rhs) const {
    require(desc_->structurally_equal(*rhs.desc_), "multiply: descriptor mismatch");
    switch (desc_->kind) {
        case MonoidKind::Bicyclic: {
            // (a,b)(c,d) = (a + c - m, b + d - m) with m = min(b, c);
            // this is the unique normal form composition for X^a x^b.
            auto [a, b] = std::get<BicyclicPayload>(payload_);
            auto [c, d] = std::get<BicyclicPayload>(rhs.payload_);
            std::uint64_t m = std::min(b, c);
            return {desc_, BicyclicPayload{a + c - m, b + d - m}};
        }
        case MonoidKind::Integers:
            return {desc_, std::get<std::int64_t>(payload_) + std::get<std::int64_t>(rhs.payload_)};
        case MonoidKind::FinitePermGroup: {
            // Left-to-right action: (p*q)(i) = q[p[i]].
            const auto& p = std::get<std::vector<std::uint8_t>>(payload_);
            const auto& q = std::get<std::vector<std::uint8_t>>(rhs.payload_);
            std::vector<std::uint8_t> r(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
            return {desc_, std::move(r)};
        }
        case MonoidKind::Grigorchuk:
            return {desc_, std::get<std::string>(payload_) + std::get<std::string>(rhs.payload_)};
        case MonoidKind::GraphProduct: {
            GenWord w = std::get<GenWord>(payload_);
            const GenWord& v = std::get<GenWord>(rhs.payload_);
            w.insert(w.end(), v.begin(), v.end());
            return {desc_, std::move(w)};
        }
        case MonoidKind::DirectProduct: {
            const auto& xs = std::get<ElementTuple>(payload_);
            const auto& ys = std::get<ElementTuple>(rhs.payload_);
            ElementTuple t;
            t.reserve(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i) t.push_back(xs[i] * ys[i]);
            return {desc_, std::move(t)};
        }
    }
    throw std::logic_error("multiply: bad kind");
}

bool MonoidElement::is_identity() const {
    switch (desc_->kind) {
        case MonoidKind::Bicyclic:
            return std::get<BicyclicPayload>(payload_) == BicyclicPayload{0, 0};
        case MonoidKind::Integers: return std::get<std::int64_t>(payload_) == 0;
        case MonoidKind::FinitePermGroup: {
            const auto& p = std::get<std::vector<std::uint8_t>>(payload_);
            for (std::size_t i = 0; i < p.size(); ++i)
                if (p[i] != i) return false;
            return true;
        }
        case MonoidKind::Grigorchuk: return grig::is_identity(std::get<std::string>(payload_));
        case MonoidKind::GraphProduct: return std::get<GenWord>(payload_).empty();
        case MonoidKind::DirectProduct: {
            const auto& xs = std::get<ElementTuple>(payload_);
            return std::all_of(xs.begin(), xs.end(),
                               [](const MonoidElement& x) { return x.is_identity(); });
        }
    }
    return false;
}

std::string MonoidElement::key() const {
    std::ostringstream os;
    switch (desc_->kind) {
        case MonoidKind::Bicyclic: {
            auto [a, b] = std::get<BicyclicPayload>(payload_);
            os << "B" << a << "," << b;
            break;
        }
        case MonoidKind::Integers: os << "Z" << std::get<std::int64_t>(payload_); break;
        case MonoidKind::FinitePermGroup: {
            os << "P";
            for (auto v : std::get<std::vector<std::uint8_t>>(payload_)) os << int(v) << ".";
            break;
        }
        case MonoidKind::Grigorchuk: os << "G" << std::get<std::string>(payload_); break;
        case MonoidKind::GraphProduct: {
            os << "W";
            for (const auto& l : std::get<GenWord>(payload_))
                os << l.vertex << (l.neg ? "-" : "+");
            break;
        }
        case MonoidKind::DirectProduct: {
            os << "T";
            for (const auto& x : std::get<ElementTuple>(payload_)) os << "(" << x.key() << ")";
            break;
        }
    }
    return os.str();
}

std::size_t MonoidElement::size_hint() const {
    switch (desc_->kind) {
        case MonoidKind::Bicyclic: {
            auto [a, b] = std::get<BicyclicPayload>(payload_);
            return static_cast<std::size_t>(a + b);
        }
        case MonoidKind::Integers: {
            auto v = std::get<std::int64_t>(payload_);
            return static_cast<std::size_t>(v < 0 ? -v : v);
        }
        case MonoidKind::FinitePermGroup: return 0;
        case MonoidKind::Grigorchuk: return std::get<std::string>(payload_).size();
        case MonoidKind::GraphProduct: return std::get<GenWord>(payload_).size();
        case MonoidKind::DirectProduct: {
            std::size_t s = 0;
            for (const auto& x : std::get<ElementTuple>(payload_)) s += x.size_hint();
            return s;
        }
    }
    return 0;
}

MonoidElement graph_word_element(const DescriptorPtr& gp, GenWord w) {
    return {gp, std::move(w)};
}

MonoidElement grigorchuk_element(const DescriptorPtr& d, const std::string& word) {
    return {d, word};
}

// ---------------------------------------------------------------------------
// Inverses and equality

MonoidElement inverse(const MonoidElement& x) {
    const auto& d = x.descriptor();
    require(d->is_group(), "inverse: group descriptor required");
    switch (d->kind) {
        case MonoidKind::Integers: return {d, -std::get<std::int64_t>(x.payload())};
        case MonoidKind::FinitePermGroup: {
            const auto& p = std::get<std::vector<std::uint8_t>>(x.payload());
            std::vector<std::uint8_t> r(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
            return {d, std::move(r)};
        }
        case MonoidKind::Grigorchuk: {
            // All four generators are involutions.
            std::string w = std::get<std::string>(x.payload());
            std::reverse(w.begin(), w.end());
            return {d, std::move(w)};
        }
        case MonoidKind::GraphProduct: {
            GenWord w = std::get<GenWord>(x.payload());
            std::reverse(w.begin(), w.end());
            for (auto& l : w) l.neg = !l.neg;
            return {d, std::move(w)};
        }
        case MonoidKind::DirectProduct: {
            ElementTuple t;
            for (const auto& c : std::get<ElementTuple>(x.payload())) t.push_back(inverse(c));
            return {d, std::move(t)};
        }
        default: break;
    }
    throw std::invalid_argument("inverse: unsupported descriptor");
}

bool elements_equal(const MonoidElement& x, const MonoidElement& y) {
    require(x.descriptor()->structurally_equal(*y.descriptor()), "elements_equal: descriptor mismatch");
    if (x == y) return true;
    // Grigorchuk payloads are free-product normal forms, not canonical for the
    // group itself; fall back to the word problem.
    if (x.descriptor()->kind == MonoidKind::Grigorchuk) return (x * inverse(y)).is_identity();
    if (x.descriptor()->kind == MonoidKind::DirectProduct) {
        const auto& xs = std::get<ElementTuple>(x.payload());
        const auto& ys = std::get<ElementTuple>(y.payload());
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (!elements_equal(xs[i], ys[i])) return false;
        return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Invertibility and the unit J-class

bool is_right_invertible(const MonoidElement& x) {
    switch (x.descriptor()->kind) {
        case MonoidKind::Bicyclic:
            return std::get<MonoidElement::BicyclicPayload>(x.payload()).first == 0;
        case MonoidKind::Integers:
        case MonoidKind::FinitePermGroup:
        case MonoidKind::Grigorchuk: return true;
        case MonoidKind::DirectProduct: {
            const auto& xs = std::get<ElementTuple>(x.payload());
            return std::all_of(xs.begin(), xs.end(),
                               [](const MonoidElement& c) { return is_right_invertible(c); });
        }
        case MonoidKind::GraphProduct:
            throw std::invalid_argument("is_right_invertible: unsupported for graph products");
    }
    return false;
}

bool is_left_invertible(const MonoidElement& x) {
    switch (x.descriptor()->kind) {
        case MonoidKind::Bicyclic:
            return std::get<MonoidElement::BicyclicPayload>(x.payload()).second == 0;
        case MonoidKind::Integers:
        case MonoidKind::FinitePermGroup:
        case MonoidKind::Grigorchuk: return true;
        case MonoidKind::DirectProduct: {
            const auto& xs = std::get<ElementTuple>(x.payload());
            return std::all_of(xs.begin(), xs.end(),
                               [](const MonoidElement& c) { return is_left_invertible(c); });
        }
        case MonoidKind::GraphProduct:
            throw std::invalid_argument("is_left_invertible: unsupported for graph products");
    }
    return false;
}

std::vector<MonoidElement> standard_generators(const DescriptorPtr& d) {
    std::vector<MonoidElement> gens;
    switch (d->kind) {
        case MonoidKind::Bicyclic:
            gens.emplace_back(d, MonoidElement::BicyclicPayload{0, 1});  // x
            gens.emplace_back(d, MonoidElement::BicyclicPayload{1, 0});  // X
            break;
        case MonoidKind::Integers:
            gens.emplace_back(d, std::int64_t{1});
            gens.emplace_back(d, std::int64_t{-1});
            break;
        case MonoidKind::FinitePermGroup: {
            if (d->degree >= 2) {
                auto swap01 = identity_perm(d->degree);
                std::swap(swap01[0], swap01[1]);
                gens.emplace_back(d, std::move(swap01));
                std::vector<std::uint8_t> cycle(d->degree);
                for (int i = 0; i < d->degree; ++i)
                    cycle[i] = static_cast<std::uint8_t>((i + 1) % d->degree);
                MonoidElement c{d, std::move(cycle)};
                if (!(c == gens.front())) gens.push_back(std::move(c));
            }
            break;
        }
        case MonoidKind::Grigorchuk:
            for (char ch : {'a', 'b', 'c', 'd'}) gens.emplace_back(d, std::string(1, ch));
            break;
        case MonoidKind::GraphProduct:
            for (int v = 0; v < d->graph.size(); ++v) {
                gens.push_back(graph_word_element(d, {GenLetter{v, false}}));
                gens.push_back(graph_word_element(d, {GenLetter{v, true}}));
            }
            break;
        case MonoidKind::DirectProduct:
            for (std::size_t i = 0; i < d->factors.size(); ++i) {
                for (auto& g : standard_generators(d->factors[i])) {
                    ElementTuple t;
                    for (std::size_t j = 0; j < d->factors.size(); ++j)
                        t.push_back(i == j ? g : identity(d->factors[j]));
                    gens.emplace_back(d, std::move(t));
                }
            }
            break;
    }
    return gens;
}

JVerdict in_j_bounded(const MonoidElement& x, int bound) {
    const auto gens = standard_generators(x.descriptor());
    // All products of generator words of length <= bound, deduplicated by key.
    std::vector<MonoidElement> layer{identity(x.descriptor())};
    std::vector<MonoidElement> all = layer;
    std::vector<std::string> seen{layer.front().key()};
    auto known = [&](const std::string& k) {
        return std::find(seen.begin(), seen.end(), k) != seen.end();
    };
    for (int len = 1; len <= bound; ++len) {
        std::vector<MonoidElement> next;
        for (const auto& w : layer)
            for (const auto& g : gens) {
                MonoidElement p = w * g;
                auto k = p.key();
                if (known(k)) continue;
                seen.push_back(k);
                next.push_back(p);
                all.push_back(std::move(p));
            }
        layer = std::move(next);
        if (layer.empty()) break;
    }
    for (const auto& b : all)
        for (const auto& c : all)
            if ((b * x * c).is_identity()) return JVerdict::Yes;
    return JVerdict::NoWithinBound;
}

OrderResult element_order(const MonoidElement& x, std::uint64_t cap) {
    require(x.descriptor()->is_group() || x.descriptor()->kind == MonoidKind::Integers,
            "element_order: group descriptor required");
    MonoidElement acc = x;
    std::uint64_t k = 1;
    while (!acc.is_identity()) {
        if (k >= cap) return TooLarge{};
        acc = acc * x;
        ++k;
    }
    return k;
}

}  // namespace valence
