#pragma once

// Shared corpus automata used across the test suites.

#include "valence/automaton.hpp"
#include "valence/monoid.hpp"

namespace fixtures {

using namespace valence;

// One-state automaton over the bicyclic monoid accepting the one-bracket
// balanced words: x pushes, X pops.
inline ValenceAutomaton dyck() {
    auto B = MonoidDescriptor::bicyclic();
    auto alphabet = Alphabet::make({"x", "X"});
    std::vector<ValenceAutomaton::RawEdge> edges;
    edges.push_back({0, {0}, MonoidElement{B, MonoidElement::BicyclicPayload{0, 1}}, 0});
    edges.push_back({0, {1}, MonoidElement{B, MonoidElement::BicyclicPayload{1, 0}}, 0});
    return ValenceAutomaton({"q"}, alphabet, B, std::move(edges), 0, {0});
}

// Four-phase automaton over two partially blind counters for a^n b^m c^n d^m.
inline ValenceAutomaton anbmcndm() {
    auto B = MonoidDescriptor::bicyclic();
    auto BB = MonoidDescriptor::direct_product({B, B});
    auto alphabet = Alphabet::make({"a", "b", "c", "d"});
    auto elt = [&](std::uint64_t a1, std::uint64_t b1, std::uint64_t a2, std::uint64_t b2) {
        ElementTuple t;
        t.emplace_back(B, MonoidElement::BicyclicPayload{a1, b1});
        t.emplace_back(B, MonoidElement::BicyclicPayload{a2, b2});
        return MonoidElement{BB, std::move(t)};
    };
    std::vector<ValenceAutomaton::RawEdge> edges;
    edges.push_back({0, {0}, elt(0, 1, 0, 0), 0});  // a: push counter 1
    edges.push_back({1, {1}, elt(0, 0, 0, 1), 1});  // b: push counter 2
    edges.push_back({2, {2}, elt(1, 0, 0, 0), 2});  // c: pop counter 1
    edges.push_back({3, {3}, elt(0, 0, 1, 0), 3});  // d: pop counter 2
    edges.push_back({0, {}, elt(0, 0, 0, 0), 1});
    edges.push_back({1, {}, elt(0, 0, 0, 0), 2});
    edges.push_back({2, {}, elt(0, 0, 0, 0), 3});
    return ValenceAutomaton({"p1", "p2", "p3", "p4"}, alphabet, BB, std::move(edges), 0, {3});
}

// Words over {a,b} with an even number of a's, via an order-two storage
// element.
inline ValenceAutomaton parity() {
    auto Z2 = MonoidDescriptor::perm_group(2);
    auto alphabet = Alphabet::make({"a", "b"});
    MonoidElement flip{Z2, std::vector<std::uint8_t>{1, 0}};
    std::vector<ValenceAutomaton::RawEdge> edges;
    edges.push_back({0, {0}, flip, 0});
    edges.push_back({0, {1}, identity(Z2), 0});
    return ValenceAutomaton({"q"}, alphabet, Z2, std::move(edges), 0, {0});
}

// Plain (ab)* acceptor with trivial storage.
inline ValenceAutomaton abstar_nfa() {
    auto T = MonoidDescriptor::trivial_group();
    auto alphabet = Alphabet::make({"a", "b"});
    std::vector<ValenceAutomaton::RawEdge> edges;
    edges.push_back({0, {0}, identity(T), 1});
    edges.push_back({1, {1}, identity(T), 0});
    return ValenceAutomaton({"s", "t"}, alphabet, T, std::move(edges), 0, {0});
}

inline std::vector<int> word_of(const ValenceAutomaton& a, const std::string& text) {
    return parse_word(*a.alphabet(), text);
}

}  // namespace fixtures
