#include <doctest.h>

#include "oracles.hpp"
#include "valence/classifier.hpp"

using namespace valence;

namespace {

Adjacency cycle4() {
    Adjacency g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    return g;
}

Adjacency path4() {
    Adjacency g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
}

StorageGraph make_graph(int n, std::uint64_t loops, const std::vector<std::pair<int, int>>& edges) {
    StorageGraph g;
    g.adj = Adjacency(n);
    for (auto [u, v] : edges) g.adj.add_edge(u, v);
    for (int v = 0; v < n; ++v) {
        g.names.push_back("v" + std::to_string(v));
        g.looped.push_back((loops >> v) & 1);
    }
    return g;
}

// all loop-free graphs on n vertices
template <typename Fn>
void for_each_adjacency(int n, Fn fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Adjacency g(n);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if ((mask >> e) & 1) g.add_edge(pairs[e].first, pairs[e].second);
        fn(g);
    }
}

}  // namespace

TEST_CASE("chordality: examples and witnesses") {
    auto c4 = is_chordal(cycle4());
    CHECK_FALSE(c4.chordal);
    CHECK(c4.induced_cycle.size() >= 4);

    for (int n = 1; n <= 5; ++n) {
        Adjacency clique(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) clique.add_edge(u, v);
        CHECK(is_chordal(clique).chordal);
    }

    Adjacency tree(6);
    tree.add_edge(0, 1);
    tree.add_edge(0, 2);
    tree.add_edge(1, 3);
    tree.add_edge(1, 4);
    tree.add_edge(2, 5);
    CHECK(is_chordal(tree).chordal);
    CHECK(oracles::brute_chordal(tree));
}

TEST_CASE("chordality agrees with induced-cycle enumeration") {
    for (int n = 1; n <= 5; ++n)
        for_each_adjacency(n, [&](const Adjacency& g) {
            auto r = is_chordal(g);
            CHECK(r.chordal == oracles::brute_chordal(g));
            if (!r.chordal) {
                // the witness really is a chordless cycle
                const auto& c = r.induced_cycle;
                REQUIRE(c.size() >= 4);
                for (std::size_t i = 0; i < c.size(); ++i)
                    for (std::size_t j = i + 1; j < c.size(); ++j) {
                        bool consecutive = (j == i + 1) || (i == 0 && j == c.size() - 1);
                        CHECK(g.adjacent(c[i], c[j]) == consecutive);
                    }
            } else {
                CHECK(r.elimination_order.size() == static_cast<std::size_t>(n));
            }
        });
}

TEST_CASE("induced C4 / P4 detection") {
    CHECK(has_induced(cycle4(), Pattern4::C4));
    CHECK_FALSE(has_induced(cycle4(), Pattern4::P4));
    CHECK(has_induced(path4(), Pattern4::P4));
    CHECK_FALSE(has_induced(path4(), Pattern4::C4));

    Adjacency k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK_FALSE(has_induced(k4, Pattern4::C4));
    CHECK_FALSE(has_induced(k4, Pattern4::P4));

    // the four-cycle with one chord is the diamond: neither pattern is
    // induced (the only 4-subset carries five edges)
    auto chord = cycle4();
    chord.add_edge(0, 2);
    CHECK_FALSE(has_induced(chord, Pattern4::P4));
    CHECK_FALSE(has_induced(chord, Pattern4::C4));

    // a five-cycle with one chord does leave an induced path of four
    Adjacency c5(5);
    c5.add_edge(0, 1);
    c5.add_edge(1, 2);
    c5.add_edge(2, 3);
    c5.add_edge(3, 4);
    c5.add_edge(4, 0);
    c5.add_edge(0, 2);
    CHECK(has_induced(c5, Pattern4::P4));
    CHECK_FALSE(has_induced(c5, Pattern4::C4));

    CHECK_FALSE(is_transitive_forest(cycle4()));
    CHECK(is_transitive_forest(Adjacency(1)));
    Adjacency two_triangles(6);
    two_triangles.add_edge(0, 1);
    two_triangles.add_edge(1, 2);
    two_triangles.add_edge(0, 2);
    two_triangles.add_edge(3, 4);
    two_triangles.add_edge(4, 5);
    two_triangles.add_edge(3, 5);
    CHECK(is_transitive_forest(two_triangles));
}

TEST_CASE("semilinearity classifier: proof-side verdicts") {
    // two adjacent unlooped vertices
    auto bpair = make_graph(2, 0b00, {{0, 1}});
    auto v1 = classify_semilinear(bpair);
    CHECK_FALSE(v1.all_semilinear);
    CHECK(v1.witness->pattern == "adjacent_unlooped_pair");

    // unlooped hub with two nonadjacent looped neighbors
    auto triangle = make_graph(3, 0b110, {{0, 1}, {0, 2}});
    auto v2 = classify_semilinear(triangle);
    CHECK_FALSE(v2.all_semilinear);
    CHECK(v2.witness->pattern == "unlooped_with_nonadjacent_looped_neighbors");

    // one unlooped vertex joined to a looped clique
    auto star = make_graph(4, 0b1110, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(classify_semilinear(star).all_semilinear);

    // four looped vertices in a cycle
    auto looped_c4 = make_graph(4, 0b1111, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto v4 = classify_semilinear(looped_c4);
    CHECK_FALSE(v4.all_semilinear);
    CHECK(v4.witness->pattern == "induced_c4");
}

TEST_CASE("semilinearity classifier agrees with the brute-force pattern scan") {
    for (int n = 0; n <= 4; ++n)
        for_each_adjacency(n, [&](const Adjacency& adj) {
            for (std::uint64_t loops = 0; loops < (std::uint64_t{1} << n); ++loops) {
                StorageGraph g;
                g.adj = adj;
                for (int v = 0; v < n; ++v) {
                    g.names.push_back("v" + std::to_string(v));
                    g.looped.push_back((loops >> v) & 1);
                }
                CHECK(classify_semilinear(g).all_semilinear == oracles::brute_all_semilinear(g));
            }
        });
}

TEST_CASE("semilinearity is inherited by induced subgraphs") {
    for_each_adjacency(4, [&](const Adjacency& adj) {
        for (std::uint64_t loops = 0; loops < 16; ++loops) {
            StorageGraph g;
            g.adj = adj;
            for (int v = 0; v < 4; ++v) {
                g.names.push_back("v" + std::to_string(v));
                g.looped.push_back((loops >> v) & 1);
            }
            if (!classify_semilinear(g).all_semilinear) continue;
            for (std::uint64_t keep = 0; keep < 16; ++keep)
                CHECK(classify_semilinear(g.induced(keep)).all_semilinear);
        }
    });
}

TEST_CASE("context-freeness classifier") {
    auto annotated = [](int n, std::uint64_t fri_mask, const std::vector<std::pair<int, int>>& edges,
                        std::uint64_t j_trivial_mask = 0) {
        AnnotatedProductGraph g;
        g.adj = Adjacency(n);
        for (auto [u, v] : edges) g.adj.add_edge(u, v);
        for (int v = 0; v < n; ++v) {
            g.names.push_back("v" + std::to_string(v));
            VertexAnnotation a;
            a.fri = (fri_mask >> v) & 1;
            a.context_free = true;
            a.j_trivial = (j_trivial_mask >> v) & 1;
            g.annotations.push_back(a);
        }
        return g;
    };

    // two adjacent non-fri vertices
    auto bad_pair = annotated(2, 0b00, {{0, 1}});
    auto r1 = classify_context_free(bad_pair);
    CHECK_FALSE(r1.context_free);
    CHECK(r1.witness->pattern == "adjacent_non_fri_pair");

    // all-fri clique
    auto clique = annotated(3, 0b111, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(classify_context_free(clique).context_free);

    // non-fri hub with two fri, nonadjacent neighbors
    auto hub = annotated(3, 0b110, {{0, 1}, {0, 2}});
    auto r3 = classify_context_free(hub);
    CHECK_FALSE(r3.context_free);
    CHECK(r3.witness->pattern == "non_fri_neighborhood_not_clique");

    // all-fri four-cycle
    auto ring = annotated(4, 0b1111, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto r4 = classify_context_free(ring);
    CHECK_FALSE(r4.context_free);
    CHECK(r4.witness->pattern == "not_chordal");

    // a non-context-free factor loses regardless of shape
    auto ncf = annotated(1, 0b1, {});
    ncf.annotations[0].context_free = false;
    CHECK_FALSE(classify_context_free(ncf).context_free);

    // vertices with trivial unit J-class are ignored: a four-cycle broken by
    // removing one such vertex becomes chordal
    auto ring_with_trivial = annotated(4, 0b1111, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 0b0001);
    CHECK(classify_context_free(ring_with_trivial).context_free);
}

TEST_CASE("context-freeness matches the all-group condition scan") {
    for (int n = 0; n <= 4; ++n)
        for_each_adjacency(n, [&](const Adjacency& adj) {
            for (std::uint64_t fri = 0; fri < (std::uint64_t{1} << n); ++fri) {
                AnnotatedProductGraph g;
                g.adj = adj;
                for (int v = 0; v < n; ++v) {
                    g.names.push_back("v" + std::to_string(v));
                    VertexAnnotation a;
                    a.fri = (fri >> v) & 1;  // finite group vs infinite virtually free
                    a.context_free = true;
                    g.annotations.push_back(a);
                }
                CHECK(classify_context_free(g).context_free ==
                      oracles::brute_group_context_free(g));
            }
        });
}

TEST_CASE("regularity classifier") {
    CHECK(classify_regular(make_graph(0, 0, {})).regular);
    CHECK_FALSE(classify_regular(make_graph(1, 0b0, {})).regular);
    CHECK_FALSE(classify_regular(make_graph(1, 0b1, {})).regular);
}

TEST_CASE("storage graph to monoid") {
    auto g = make_graph(2, 0b10, {{0, 1}});
    auto m = storage_graph_monoid(g);
    CHECK(m->kind == MonoidKind::GraphProduct);
    CHECK(m->factors[0]->kind == MonoidKind::Bicyclic);
    CHECK(m->factors[1]->kind == MonoidKind::Integers);
    CHECK(m->find_vertex("v1") == 1);
}
