/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <reconf/bruteforce.hh>
#include <reconf/errors.hh>
#include <reconf/isomorphism.hh>

#include <support/corpus.hh>
#include <support/oracles.hh>

#include <random>

using namespace reconf;
using namespace reconf::testing;

TEST_CASE("reconfiguration graphs")
{
    auto c4 = cycle_graph(4);
    auto one = build_reconfig_graph(c4, null_graph(2), Rule::jump(1));
    CHECK(one.size() == 2);
    CHECK(one.edge_count() == 0);
    auto two = build_reconfig_graph(c4, null_graph(2), Rule::jump(2));
    CHECK(two.size() == 2);
    CHECK(two.edge_count() == 1);

    auto p4 = build_reconfig_graph(path_graph(4), null_graph(2), Rule::jump(1));
    CHECK(p4.size() == 3);
    CHECK(p4.edge_count() == 2);
    REQUIRE(p4.index_of(VertexSet{ 0, 3 }));
    CHECK(p4.neighbours(*p4.index_of(VertexSet{ 0, 3 })).size() == 2);

    CHECK_THROWS_AS(build_reconfig_graph(null_graph(10), null_graph(3), Rule::jump(1), SearchLimits{ 100, 1 }), ResourceLimit);
}

TEST_CASE("parallel construction is deterministic")
{
    std::mt19937 rng(31);
    for (int i = 0 ; i < 10 ; ++i) {
        auto g = random_graph(9, 0.3, rng);
        auto a = build_reconfig_graph(g, null_graph(3), Rule::slide(2), SearchLimits{ default_max_nodes, 1 });
        auto b = build_reconfig_graph(g, null_graph(3), Rule::slide(2), SearchLimits{ default_max_nodes, 3 });
        CHECK(a.nodes() == b.nodes());
        for (size_t v = 0 ; v < a.size() ; ++v)
            CHECK(a.neighbours(int(v)) == b.neighbours(int(v)));
    }
}

TEST_CASE("breadth-first solver")
{
    ReconfigInstance c4{ cycle_graph(4), null_graph(2), VertexSet{ 0, 2 }, VertexSet{ 1, 3 }, Rule::jump(1) };
    auto no = solve_bfs(c4);
    CHECK(! no.reachable);
    CHECK(! no.sequence);

    c4.rule = Rule::jump(2);
    auto yes = solve_bfs(c4);
    REQUIRE(yes.reachable);
    CHECK(yes.sequence->length() == 1);

    c4.target = c4.source;
    CHECK(solve_bfs(c4).sequence->length() == 0);

    c4.target = VertexSet{ 0, 1 };
    CHECK_THROWS_AS(solve_bfs(c4), InvalidInput);
    c4.target = VertexSet{ 0, 9 };
    CHECK_THROWS_AS(solve_bfs(c4), InvalidInput);
}

TEST_CASE("shortest lengths match iterative deepening, and relabelling changes nothing")
{
    std::mt19937 rng(32);
    for (int trial = 0 ; trial < 150 ; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 6)(rng);
        auto g = random_graph(n, 0.45, rng);
        auto h = random_graph(std::uniform_int_distribution<int>(1, 3)(rng), 0.4, rng);
        auto sets = naive_isis_sets(g, h);
        if (sets.empty())
            continue;
        std::uniform_int_distribution<size_t> pick(0, sets.size() - 1);
        Rule rule(rng() % 2 ? RuleKind::Jump : RuleKind::Slide, std::uniform_int_distribution<int>(1, 2)(rng));
        ReconfigInstance instance{ g, h, sets[pick(rng)], sets[pick(rng)], rule };

        auto solution = solve_bfs(instance);
        auto expected = naive_shortest_length(instance);
        REQUIRE(solution.reachable == expected.has_value());
        if (solution.reachable) {
            CHECK(solution.sequence->length() == *expected);
            CHECK(verify_sequence(instance, *solution.sequence));
        }

        auto [moved, perm] = relabelled(g, rng);
        ReconfigInstance other{ moved, h, mapped_set(perm, instance.source), mapped_set(perm, instance.target), rule };
        CHECK(solve_bfs(other).reachable == solution.reachable);
    }
}

TEST_CASE("word reachability")
{
    WordInstance w{ { "a", "b" }, { { 0, 1 }, { 1, 0 } }, { 0, 1 }, { 1, 0 } };
    CHECK(! word_reachability(w));
    w.target = w.source;
    CHECK(word_reachability(w));

    WordInstance full{ { "a", "b" }, { { 0, 0 }, { 0, 1 }, { 1, 0 }, { 1, 1 } }, { 0, 0 }, { 1, 1 } };
    CHECK(word_reachability(full));

    WordInstance bad = full;
    bad.target = { 1 };
    CHECK_THROWS_AS(word_reachability(bad), InvalidInput);
    bad = w;
    bad.source = { 0, 0 };
    CHECK_THROWS_AS(word_reachability(bad), InvalidInput);

    WordInstance wide{ { "a", "b", "c" }, { }, { }, { } };
    for (int i = 0 ; i < 3 ; ++i)
        for (int j = 0 ; j < 3 ; ++j)
            wide.relation.emplace(i, j);
    wide.source.assign(14, 0);
    wide.target.assign(14, 2);
    CHECK_THROWS_AS(word_reachability(wide, 1000), ResourceLimit);

    std::mt19937 rng(33);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        WordInstance r{ { "a", "b", "c" }, { }, { }, { } };
        for (int i = 0 ; i < 3 ; ++i)
            for (int j = 0 ; j < 3 ; ++j)
                if (rng() % 2)
                    r.relation.emplace(i, j);
        int n = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<std::vector<int>> words;
        for (int code = 0 ; code < 81 ; ++code) {
            std::vector<int> word;
            for (int i = 0, c = code ; i < n ; ++i, c /= 3)
                word.push_back(c % 3);
            if (r.is_word(word) && std::find(words.begin(), words.end(), word) == words.end())
                words.push_back(word);
        }
        if (words.empty())
            continue;
        r.source = words[rng() % words.size()];
        r.target = words[rng() % words.size()];
        CHECK(word_reachability(r) == naive_word_reachable(r));
    }
}

TEST_CASE("balanced bicliques")
{
    auto k22 = complete_bipartite_graph(2, 2);
    VertexSet left{ 0, 1 };
    auto found = max_balanced_biclique_at_least(k22, left, 2);
    REQUIRE(found);
    CHECK(found->left == left);
    CHECK(found->right == VertexSet{ 2, 3 });

    Graph matching(4, { { 0, 2 }, { 1, 3 } });
    CHECK(! max_balanced_biclique_at_least(matching, left, 2));
    CHECK(max_balanced_biclique_at_least(matching, left, 0));
    CHECK(max_balanced_biclique_at_least(null_graph(3), VertexSet{ 0 }, 0));
    CHECK_THROWS_AS(max_balanced_biclique_at_least(complete_graph(3), VertexSet{ 0 }, 1), InvalidInput);

    for (int a = 1 ; a <= 3 ; ++a)
        for (int b = 1 ; b <= 3 ; ++b) {
            std::vector<Vertex> side;
            for (int i = 0 ; i < a ; ++i)
                side.push_back(i);
            for (auto & g : bipartite_graphs(a, b))
                for (int size = 1 ; size <= 3 ; ++size) {
                    auto got = max_balanced_biclique_at_least(g, VertexSet(side), size);
                    CHECK(got.has_value() == naive_biclique(g, VertexSet(side), size));
                    if (got) {
                        CHECK(int(got->left.size()) == size);
                        CHECK(int(got->right.size()) == size);
                        for (auto u : got->left)
                            for (auto v : got->right)
                                CHECK(g.adjacent(u, v));
                    }
                }
        }
}
