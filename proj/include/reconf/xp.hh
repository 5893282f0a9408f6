/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RECONF_XP_HH
#define RECONF_XP_HH 1

#include <reconf/graph.hh>
#include <reconf/isomorphism.hh>
#include <reconf/rules.hh>

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace reconf
{
    /// Decides induced subgraph isomorphism: an H-induced subgraph isomorphic
    /// set of the host, or nothing. Substitute a polynomial special-case
    /// oracle (e.g. maximum independent set on perfect graphs) here.
    using IsisOracle = std::function<std::optional<VertexSet> (const Graph & host, const Graph & pattern)>;

    /// The default oracle: find_isis.
    auto backtracking_oracle() -> IsisOracle;

    struct XpOptions
    {
        std::size_t max_nodes = 1'000'000;
        int workers = 1;
    };

    /// Decides whether some H-induced subgraph isomorphic set of g contains
    /// a u b, returning it. For each vertex of a u b not yet covered, picks a
    /// component shape of h and a connected occurrence W_v of it through that
    /// vertex, disjoint from and non-adjacent to the occurrences already
    /// picked; the rest of h is then asked of the oracle on g - N[W].
    class EdgeTester
    {
        public:
            EdgeTester(const Graph & g, const Graph & h, IsisOracle oracle);

            auto test(const VertexSet & a, const VertexSet & b) const -> std::optional<VertexSet>;

            auto decomposition() const -> const AssortedDecomposition &
            {
                return _decomposition;
            }

        private:
            Graph _g;
            Graph _h;
            IsisOracle _oracle;
            AssortedDecomposition _decomposition;
            // _through[part][v]: occurrences of that part's shape containing v
            std::vector<std::vector<std::vector<VertexSet>>> _through;
    };

    /// One-shot form of EdgeTester. |a| = |b| = mu >= 1, else InvalidInput.
    auto edge_test(const Graph & g, const Graph & h, const VertexSet & a, const VertexSet & b,
            const IsisOracle & oracle = backtracking_oracle()) -> std::optional<VertexSet>;

    /// The clique-compressed reconfiguration graph: one node per mu-subset of
    /// V(g) in lexicographic order, and an edge between two nodes whenever
    /// some H-induced subgraph isomorphic set contains both; that set is kept
    /// as the edge's witness.
    struct CompressedGraph
    {
        struct Edge
        {
            int a;
            int b;
            VertexSet witness;
        };

        int mu = 0;
        std::vector<VertexSet> nodes;
        std::vector<Edge> edges;
        std::vector<std::vector<std::pair<int, int>>> adjacency;    // (neighbour, edge index), ascending
        std::unordered_map<VertexSet, int, VertexSetHash> index;

        auto index_of(const VertexSet & t) const -> std::optional<int>;

        /// Node indices of a shortest path, ties broken by node order.
        auto path(int from, int to) const -> std::optional<std::vector<int>>;
    };

    /// Throws InvalidInput unless 1 <= mu <= |V(h)|, and ResourceLimit when
    /// C(n, mu) exceeds options.max_nodes.
    auto build_compressed(const Graph & g, const Graph & h, int mu,
            const IsisOracle & oracle = backtracking_oracle(), const XpOptions & options = { }) -> CompressedGraph;

    /// Reachability for the instance's k-TJ rule with mu = |V(H)| - k >= 1:
    /// a path between the clique-nodes of the smallest mu-subsets of the two
    /// endpoints. A yes-answer carries the sequence <S_s, witnesses..., S_t>,
    /// already checked with verify_sequence.
    auto solve_xp(const ReconfigInstance & instance, const IsisOracle & oracle = backtracking_oracle(),
            const XpOptions & options = { }) -> Solution;

    /// As solve_xp, over a prebuilt compressed graph and with explicit mu-subsets
    /// a of the source and b of the target.
    auto solve_xp_with(const CompressedGraph & compressed, const ReconfigInstance & instance,
            const VertexSet & a, const VertexSet & b) -> Solution;

    /// mu = |V(H)| - k, checking that the rule is k-TJ and mu >= 1.
    auto xp_parameter(const ReconfigInstance & instance) -> int;
}

#endif
