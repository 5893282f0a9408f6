/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <reconf/analysis.hh>
#include <reconf/bruteforce.hh>
#include <reconf/errors.hh>
#include <reconf/isomorphism.hh>
#include <reconf/reductions.hh>

#include <support/corpus.hh>
#include <support/oracles.hh>

#include <random>

using namespace reconf;
using namespace reconf::testing;

namespace
{
    auto check_well_formed(const GadgetOutput & out) -> void
    {
        auto & instance = out.instance;
        CHECK(invariant_violation(instance.host).empty());
        REQUIRE(int(out.provenance.size()) == instance.host.size());
        for (Vertex v = 0 ; v < instance.host.size() ; ++v) {
            CHECK(! out.provenance[v].part.empty());
            CHECK(instance.host.label(v) == out.provenance[v].to_string());
        }
        CHECK(is_isis_set(instance.host, instance.pattern, instance.source));
        CHECK(is_isis_set(instance.host, instance.pattern, instance.target));
    }

    const WordInstance alternating{ { "a", "b" }, { { 0, 1 }, { 1, 0 } }, { 0, 1 }, { 1, 0 } };
}

TEST_CASE("word gadget shape")
{
    auto out = reduce_word_to_isisor(alternating, complete_graph(1), 2);
    check_well_formed(out);
    CHECK(out.parameters.m == 1);
    CHECK(out.parameters.t == 2);
    CHECK(out.instance.host.size() == 8);
    CHECK(out.instance.pattern == null_graph(4));
    CHECK(out.instance.rule == Rule::jump(2));

    // t doubles once k reaches 4|F|
    auto wider = reduce_word_to_isisor(alternating, complete_graph(1), 5, RuleKind::Slide);
    CHECK(wider.parameters.m == 2);
    CHECK(wider.parameters.t == 4);
    CHECK(wider.instance.rule == Rule::slide(5));
    CHECK(reduce_word_to_isisor(alternating, complete_graph(2), 7).parameters.t == 2);
    CHECK(reduce_word_to_isisor(alternating, complete_graph(2), 8).parameters.t == 4);

    // layer 0 token block for "a" is two isolated copies joined to the "b" block
    CHECK(out.provenance[0] == Provenance{ "a", 0, 0 });
    CHECK(out.provenance[1] == Provenance{ "a", 0, 1 });
    CHECK(! out.instance.host.adjacent(0, 1));
    CHECK(out.instance.host.adjacent(0, 2));

    CHECK_THROWS_AS(reduce_word_to_isisor(alternating, complete_graph(1), 1), InvalidInput);
    CHECK_THROWS_AS(reduce_word_to_isisor(alternating, complete_graph(2), 3), InvalidInput);
    CHECK_THROWS_AS(reduce_word_to_isisor(alternating, null_graph(2), 4), InvalidInput);
}

TEST_CASE("word gadget answers")
{
    auto no = reduce_word_to_isisor(alternating, complete_graph(1), 2);
    CHECK(! word_reachability(alternating));
    CHECK(! solve_bfs(no.instance).reachable);

    auto same = alternating;
    same.target = same.source;
    auto yes = solve_bfs(reduce_word_to_isisor(same, complete_graph(2), 4).instance);
    REQUIRE(yes.reachable);
    CHECK(yes.sequence->length() == 0);

    WordInstance free{ { "a", "b" }, { { 0, 0 }, { 0, 1 }, { 1, 0 }, { 1, 1 } }, { 0, 0 }, { 1, 1 } };
    for (auto kind : { RuleKind::Jump, RuleKind::Slide })
        CHECK(solve_bfs(reduce_word_to_isisor(free, path_graph(3), 6, kind).instance).reachable);
}

TEST_CASE("word gadget hosts are perfect for perfect units")
{
    WordInstance w{ { "a", "b", "c" }, { { 0, 1 }, { 1, 2 }, { 2, 0 }, { 1, 1 } }, { 0, 1, 1 }, { 0, 1, 2 } };
    for (auto & f : { complete_graph(1), complete_graph(2), path_graph(3), cycle_graph(4) }) {
        auto out = reduce_word_to_isisor(w, f, 2 * f.size());
        check_well_formed(out);
        CHECK(is_perfect(out.instance.host));
    }
}

TEST_CASE("isiso gadget")
{
    auto yes = reduce_isiso_to_isisor(complete_graph(3), complete_graph(2), 2);
    check_well_formed(yes);
    CHECK(yes.instance.host.size() == 21);
    CHECK(yes.instance.rule == Rule::jump(6));
    CHECK(yes.parameters.mu == 2);
    CHECK(solve_bfs(yes.instance).reachable);

    auto no = reduce_isiso_to_isisor(null_graph(3), complete_graph(2), 1);
    check_well_formed(no);
    CHECK(! solve_bfs(no.instance).reachable);

    std::mt19937 rng(51);
    for (int i = 0 ; i < 30 ; ++i) {
        auto gp = random_graph(int(rng() % 5) + 1, 0.5, rng);
        for (auto & hp : { complete_graph(1), null_graph(2), path_graph(3) }) {
            auto out = reduce_isiso_to_isisor(gp, hp, 1);
            CHECK(out.instance.host.size() == gp.size() + 9 * hp.size());
            CHECK(out.instance.pattern.size() == 4 * hp.size());
        }
    }

    CHECK_THROWS_AS(reduce_isiso_to_isisor(complete_graph(3), complete_graph(2), 5), InvalidInput);
    CHECK_THROWS_AS(reduce_isiso_to_isisor(complete_graph(3), complete_graph(2), 0), InvalidInput);
}

TEST_CASE("biclique gadget")
{
    VertexSet left{ 0, 1 };
    auto yes = reduce_mbb_to_isr(complete_bipartite_graph(2, 2), left, 2);
    check_well_formed(yes);
    CHECK(yes.parameters.c == 0);
    CHECK(yes.instance.host.size() == 12);
    CHECK(yes.instance.pattern == null_graph(4));
    CHECK(yes.instance.rule == Rule::jump(2));
    CHECK(solve_bfs(yes.instance).reachable);

    Graph matching(4, { { 0, 2 }, { 1, 3 } });
    auto no = reduce_mbb_to_isr(matching, left, 2);
    CHECK(! solve_bfs(no.instance).reachable);

    CHECK(solve_bfs(reduce_mbb_to_isr(Graph(5, { { 1, 4 } }), VertexSet{ 0, 1, 2 }, 1).instance).reachable);

    // sizes: |A| + (c+1)|B| + 2(c+2)b
    auto sized = reduce_mbb_to_isr(Graph(5, { { 0, 3 } }), VertexSet{ 0, 1, 2 }, 1);
    check_well_formed(sized);
    CHECK(sized.parameters.c == 2);
    CHECK(sized.instance.host.size() == 3 + 3 * 2 + 2 * 4);
    CHECK(sized.instance.rule == Rule::jump(3));
    CHECK(is_bipartite(induced_subgraph(sized.instance.host, VertexSet{ 0, 1, 2, 3, 4, 5, 6, 7, 8 }).graph));

    CHECK_THROWS_AS(reduce_mbb_to_isr(matching, left, 3), InvalidInput);
    CHECK_THROWS_AS(reduce_mbb_to_isr(matching, left, 0), InvalidInput);
    CHECK_THROWS_AS(reduce_mbb_to_isr(complete_graph(3), VertexSet{ 0 }, 1), InvalidInput);
}
