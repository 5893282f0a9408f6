/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RECONF_TESTS_CORPUS_HH
#define RECONF_TESTS_CORPUS_HH 1

#include <reconf/graph.hh>

#include <random>
#include <vector>

namespace reconf::testing
{
    /// Every graph on n vertices, one per isomorphism class. Deduplicated by
    /// a brute-force minimum over all vertex orderings (n <= 7).
    auto all_graphs(int n) -> std::vector<Graph>;

    /// Connected graphs with 1..max_n vertices, one per isomorphism class.
    auto connected_graphs(int max_n) -> std::vector<Graph>;

    /// G(n, p).
    auto random_graph(int n, double p, std::mt19937 & rng) -> Graph;

    /// Every edge subset between sides {0..a-1} and {a..a+b-1}.
    auto bipartite_graphs(int a, int b) -> std::vector<Graph>;

    /// A uniformly random vertex permutation applied to g.
    auto relabelled(const Graph & g, std::mt19937 & rng) -> std::pair<Graph, std::vector<Vertex>>;

    auto mapped_set(const std::vector<Vertex> & permutation, const VertexSet & s) -> VertexSet;
}

#endif
