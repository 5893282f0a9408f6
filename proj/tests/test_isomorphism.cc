/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <reconf/errors.hh>
#include <reconf/isomorphism.hh>

#include <support/corpus.hh>
#include <support/oracles.hh>

#include <random>
#include <set>

using namespace reconf;
using namespace reconf::testing;

namespace
{
    auto mapping_preserves(const Graph & g, const Graph & h, const IsoMapping & m) -> bool
    {
        if (int(m.image.size()) != h.size() || int(m.image_set().size()) != h.size())
            return false;
        for (Vertex u = 0 ; u < h.size() ; ++u)
            for (Vertex v = u + 1 ; v < h.size() ; ++v)
                if (h.adjacent(u, v) != g.adjacent(m.image[u], m.image[v]))
                    return false;
        return true;
    }
}

TEST_CASE("isomorphism on small named graphs")
{
    auto c4 = cycle_graph(4);
    auto shuffled = Graph(4, { { 0, 2 }, { 2, 1 }, { 1, 3 }, { 3, 0 } });
    auto m = find_isomorphism(c4, shuffled);
    REQUIRE(m);
    CHECK(mapping_preserves(shuffled, c4, *m));
    CHECK(! is_isomorphic(c4, path_graph(4)));
    CHECK(is_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
    CHECK(! is_isomorphic(complete_graph(3), null_graph(4)));
}

TEST_CASE("isomorphism agrees with bijection search")
{
    std::mt19937 rng(11);
    std::vector<Graph> pool;
    for (int i = 0 ; i < 40 ; ++i)
        pool.push_back(random_graph(6, 0.5, rng));
    for (int i = 0 ; i < 20 ; ++i)
        pool.push_back(relabelled(pool[i], rng).first);

    for (auto & a : pool) {
        CHECK(is_isomorphic(a, a));
        for (auto & b : pool) {
            bool expected = naive_isomorphic(a, b);
            CHECK(is_isomorphic(a, b) == expected);
            CHECK(is_isomorphic(b, a) == expected);
            if (auto m = find_isomorphism(a, b))
                CHECK(mapping_preserves(b, a, *m));
        }
    }

    // transitivity, spot-checked
    for (size_t i = 0 ; i < 20 ; ++i) {
        auto [b, p] = relabelled(pool[i], rng);
        auto [c, q] = relabelled(b, rng);
        CHECK(is_isomorphic(pool[i], c));
    }
}

TEST_CASE("induced subgraph isomorphic sets")
{
    auto p3 = path_graph(3);
    auto edge = find_isis(p3, complete_graph(2));
    REQUIRE(edge);
    CHECK(p3.adjacent((*edge)[0], (*edge)[1]));

    CHECK(! find_isis(complete_graph(3), null_graph(2)));

    auto c4 = cycle_graph(4);
    auto pair = find_isis(c4, null_graph(2));
    REQUIRE(pair);
    CHECK((*pair == VertexSet{ 0, 2 } || *pair == VertexSet{ 1, 3 }));
    CHECK(enumerate_isis(c4, null_graph(2)) == std::vector<VertexSet>{ { 0, 2 }, { 1, 3 } });

    auto p4 = enumerate_isis(path_graph(4), null_graph(2));
    CHECK(std::set<VertexSet>(p4.begin(), p4.end()) == std::set<VertexSet>{ { 0, 2 }, { 0, 3 }, { 1, 3 } });

    CHECK(enumerate_isis(path_graph(3), Graph(0)) == std::vector<VertexSet>{ VertexSet{ } });

    CHECK(is_isis_set(c4, null_graph(2), VertexSet{ 0, 2 }));
    CHECK(! is_isis_set(c4, null_graph(2), VertexSet{ 0, 1 }));
    CHECK(! is_isis_set(c4, null_graph(2), VertexSet{ 0, 1, 2 }));
}

TEST_CASE("enumeration matches subset search")
{
    std::mt19937 rng(12);
    for (int trial = 0 ; trial < 120 ; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 9)(rng);
        auto g = random_graph(n, std::uniform_real_distribution<double>(0.1, 0.9)(rng), rng);
        int hn = std::uniform_int_distribution<int>(0, std::min(n, 5))(rng);
        auto h = random_graph(hn, std::uniform_real_distribution<double>(0.0, 1.0)(rng), rng);

        auto expected = naive_isis_sets(g, h);
        auto got = enumerate_isis(g, h);
        std::set<VertexSet> unique(got.begin(), got.end());
        CHECK(unique.size() == got.size());
        CHECK(unique == std::set<VertexSet>(expected.begin(), expected.end()));
        for (auto & s : got)
            CHECK(is_isis_set(g, h, s));

        auto found = find_isis(g, h);
        CHECK(found.has_value() == ! expected.empty());
        if (found)
            CHECK(naive_is_isis(g, h, *found));
        if (auto m = find_isis_mapping(g, h))
            CHECK(mapping_preserves(g, h, *m));
    }
}

TEST_CASE("assorted decomposition")
{
    auto h = Graph(7, { { 3, 4 }, { 5, 6 } });
    auto d = decompose_assorted(h);
    REQUIRE(d.parts.size() == 2);
    CHECK(d.parts[0].shape == complete_graph(1));
    CHECK(d.parts[0].multiplicity == 3);
    CHECK(d.parts[1].shape == complete_graph(2));
    CHECK(d.parts[1].multiplicity == 2);
    CHECK(d.order() == 7);
    CHECK(d.largest_part() == 2);

    auto k5 = decompose_assorted(complete_graph(5));
    REQUIRE(k5.parts.size() == 1);
    CHECK(k5.parts[0].multiplicity == 1);

    std::vector<Graph> pieces{ cycle_graph(4), path_graph(4), cycle_graph(4) };
    auto mixed = decompose_assorted(disjoint_union(pieces));
    REQUIRE(mixed.parts.size() == 2);
    CHECK(is_isomorphic(mixed.parts[0].shape, cycle_graph(4)));
    CHECK(mixed.parts[0].multiplicity == 2);
    CHECK(mixed.parts[1].multiplicity == 1);
    CHECK(mixed.classify(path_graph(4)) == std::optional<std::size_t>(1));
    CHECK(! mixed.classify(complete_graph(4)));

    std::mt19937 rng(13);
    for (int i = 0 ; i < 60 ; ++i) {
        auto g = random_graph(8, 0.2, rng);
        auto dec = decompose_assorted(g);
        CHECK(naive_isomorphic(dec.compose(dec.multiplicities()), g));
        for (size_t a = 0 ; a < dec.parts.size() ; ++a)
            for (size_t b = a + 1 ; b < dec.parts.size() ; ++b)
                CHECK(! naive_isomorphic(dec.parts[a].shape, dec.parts[b].shape));
    }
}

TEST_CASE("canonical forms")
{
    std::mt19937 rng(14);
    for (int i = 0 ; i < 200 ; ++i) {
        auto a = random_graph(6, 0.5, rng);
        auto b = random_graph(6, 0.5, rng);
        CHECK(canonical_form(a) == canonical_form(relabelled(a, rng).first));
        CHECK((canonical_form(a) == canonical_form(b)) == naive_isomorphic(a, b));
    }
    CHECK_THROWS_AS(canonical_form(path_graph(9)), InvalidInput);
}
