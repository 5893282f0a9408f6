/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <reconf/errors.hh>
#include <reconf/formats.hh>
#include <reconf/reductions.hh>

#include <support/corpus.hh>

#include <random>
#include <sstream>

using namespace reconf;
using namespace reconf::testing;

namespace
{
    auto parse_graph(const std::string & text) -> Graph
    {
        std::istringstream in(text);
        return read_graph(in);
    }

    auto parse_instance(const std::string & text) -> ReconfigInstance
    {
        std::istringstream in(text);
        return read_instance(in);
    }

    auto parse_sequence(const std::string & text) -> ReconfigSequence
    {
        std::istringstream in(text);
        return read_sequence(in);
    }

    auto parse_words(const std::string & text) -> WordInstance
    {
        std::istringstream in(text);
        return read_word_instance(in);
    }

    auto error_line(const std::function<void ()> & f) -> int
    {
        try {
            f();
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return -1;
    }

    const std::string c4_instance = "c a four-cycle\np graph 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"
        "h p graph 2 0\nss 1 3\ntt 2 4\nr tj 2\n";
}

TEST_CASE("graph files")
{
    auto g = parse_graph("c comment\np graph 4 3\ne 1 2\nc between\ne 2 3\n\ne 4 3\n");
    CHECK(g == path_graph(4));
    CHECK(parse_graph("p graph 3 0\n") == null_graph(3));

    CHECK(error_line([] { parse_graph("p graph 3 2\ne 1 2\ne 2 1\n"); }) == 3);
    CHECK(error_line([] { parse_graph("p graph 3 1\ne 2 2\n"); }) == 2);
    CHECK(error_line([] { parse_graph("p graph 3 1\ne 1 4\n"); }) == 2);
    CHECK(error_line([] { parse_graph("p graph 3 1\ne 0 1\n"); }) == 2);
    CHECK(error_line([] { parse_graph("p graph 3 2\ne 1 2\n"); }) == 2);
    CHECK(error_line([] { parse_graph("p graph 3 x\n"); }) == 1);
    CHECK(error_line([] { parse_graph("p edge 3 0\n"); }) == 1);
    CHECK(error_line([] { parse_graph("p graph 3 1\nq 1 2\n"); }) == 2);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("graph files round-trip")
{
    std::mt19937 rng(71);
    for (int i = 0 ; i < 50 ; ++i) {
        auto g = random_graph(int(rng() % 10), 0.4, rng);
        std::ostringstream out;
        write_graph(out, g, { "random" });
        CHECK(out.str().starts_with("c random\np graph"));
        CHECK(parse_graph(out.str()) == g);
    }

    std::ostringstream labelled;
    write_graph(labelled, path_graph(2).with_labels({ "x", "y" }));
    CHECK(labelled.str() == "c v 1 x\nc v 2 y\np graph 2 1\ne 1 2\n");
}

TEST_CASE("instance files")
{
    auto instance = parse_instance(c4_instance);
    CHECK(instance.host == cycle_graph(4));
    CHECK(instance.pattern == null_graph(2));
    CHECK(instance.source == VertexSet{ 0, 2 });
    CHECK(instance.target == VertexSet{ 1, 3 });
    CHECK(instance.rule == Rule::jump(2));

    std::ostringstream out;
    write_instance(out, instance);
    CHECK(parse_instance(out.str()) == instance);

    CHECK_THROWS_AS(parse_instance("p graph 2 0\nss 1\ntt 2\nr tj 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p graph 2 0\nh p graph 1 0\ntt 2\nr tj 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p graph 2 0\nh p graph 1 0\nss 1\ntt 2\n"), ParseError);
    CHECK(error_line([] { parse_instance("p graph 2 0\nh p graph 1 0\nss 3\ntt 2\nr tj 1\n"); }) == 3);
    CHECK(error_line([] { parse_instance("p graph 2 0\nh p graph 1 0\nss 1\ntt 2\nr tx 1\n"); }) == 5);
    CHECK(error_line([] { parse_instance("p graph 2 0\nh p graph 1 0\nss 1\ntt 2\nr ts 0\n"); }) == 5);
    CHECK(error_line([] { parse_instance("p graph 2 0\nh p graph 1 0\nss 1 1\ntt 2\nr ts 1\n"); }) == 3);
}

TEST_CASE("gadget instances round-trip")
{
    WordInstance w{ { "a", "b" }, { { 0, 1 }, { 1, 0 } }, { 0, 1 }, { 1, 0 } };
    for (auto & gadget : { reduce_word_to_isisor(w, complete_graph(2), 5, RuleKind::Slide),
            reduce_isiso_to_isisor(cycle_graph(5), path_graph(3), 2),
            reduce_mbb_to_isr(complete_bipartite_graph(2, 3), VertexSet{ 0, 1 }, 1) }) {
        std::ostringstream out;
        write_instance(out, gadget.instance, { "gadget" });
        CHECK(parse_instance(out.str()) == gadget.instance);
    }
}

TEST_CASE("sequence files")
{
    auto seq = parse_sequence("s reconfig 3 2\n1 3\n1 4\nc note\n2 4\n");
    REQUIRE(seq.steps.size() == 3);
    CHECK(seq.steps[1] == VertexSet{ 0, 3 });

    std::ostringstream out;
    write_sequence(out, seq);
    CHECK(out.str() == "s reconfig 3 2\n1 3\n1 4\n2 4\n");
    CHECK(parse_sequence(out.str()) == seq);

    CHECK(parse_sequence("s reconfig 0 0\n").steps.empty());
    auto empties = parse_sequence("s reconfig 2 0\n\n\n");
    CHECK(empties.steps.size() == 2);

    CHECK(error_line([] { parse_sequence("s reconfig 2 2\n1 3\n"); }) == 2);
    CHECK(error_line([] { parse_sequence("s reconfig 1 2\n3 1\n"); }) == 2);
    CHECK(error_line([] { parse_sequence("s reconfig 1 2\n1 2 3\n"); }) == 2);
    CHECK(error_line([] { parse_sequence("s reconfig 1 2\n1 3\n2 4\n"); }) == 3);
    CHECK(error_line([] { parse_sequence("s config 1 2\n1 3\n"); }) == 1);
}

TEST_CASE("word files")
{
    auto w = parse_words("w 2 2\na b\na b\nb a\nab\nb a\n");
    CHECK(w.sigma == std::vector<std::string>{ "a", "b" });
    CHECK(w.relation == std::set<std::pair<int, int>>{ { 0, 1 }, { 1, 0 } });
    CHECK(w.source == std::vector<int>{ 0, 1 });
    CHECK(w.target == std::vector<int>{ 1, 0 });

    std::ostringstream out;
    write_word_instance(out, w);
    auto again = parse_words(out.str());
    CHECK(again.sigma == w.sigma);
    CHECK(again.relation == w.relation);
    CHECK(again.source == w.source);
    CHECK(again.target == w.target);

    auto long_names = parse_words("w 2 1\nup down\nup\ndown\n");
    CHECK(long_names.relation.empty());
    CHECK(long_names.target == std::vector<int>{ 1 });

    CHECK(error_line([] { parse_words("w 2 2\na b\na b\nab\nba\n"); }) == 5);     // "ba" is no W-word
    CHECK(error_line([] { parse_words("w 2 2\na b\na z\nab\nab\n"); }) == 3);
    CHECK(error_line([] { parse_words("w 3 2\na b\na b\nab\nab\n"); }) == 2);
    CHECK(error_line([] { parse_words("w 2 2\na a\na a\naa\naa\n"); }) == 2);
    CHECK_THROWS_AS(parse_words("w 2 2\na b\n"), ParseError);
}

TEST_CASE("reduction sources and named graphs")
{
    std::istringstream mbb("p graph 4 2\ne 1 3\ne 2 4\na 1 2\n");
    auto source = read_mbb_source(mbb);
    CHECK(source.side_a == VertexSet{ 0, 1 });
    CHECK(source.graph.edge_count() == 2);

    std::istringstream isiso("p graph 3 3\ne 1 2\ne 2 3\ne 1 3\nh p graph 2 1\nh e 1 2\n");
    auto pair = read_isiso_source(isiso);
    CHECK(pair.host == complete_graph(3));
    CHECK(pair.pattern == complete_graph(2));

    std::istringstream missing("p graph 2 0\n");
    CHECK_THROWS_AS(read_mbb_source(missing), ParseError);

    CHECK(named_graph("K1") == complete_graph(1));
    CHECK(named_graph("P4") == path_graph(4));
    CHECK(named_graph("C5") == cycle_graph(5));
    CHECK(named_graph("N3") == null_graph(3));
    CHECK(! named_graph("C2"));
    CHECK(! named_graph("K"));
    CHECK(! named_graph("graph.txt"));
    CHECK_THROWS_AS(read_file("/nonexistent/file"), InvalidInput);
}
