/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RECONF_BRUTEFORCE_HH
#define RECONF_BRUTEFORCE_HH 1

#include <reconf/graph.hh>
#include <reconf/rules.hh>

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace reconf
{
    constexpr std::size_t default_max_nodes = 1'000'000;
    constexpr std::size_t default_max_states = 1'000'000;

    struct SearchLimits
    {
        std::size_t max_nodes = default_max_nodes;
        int workers = 1;
    };

    /// The reconfiguration graph: every H-induced subgraph isomorphic set of
    /// G as a node (in enumerate_isis order), joined when adjacent under the
    /// rule. Adjacency lists are ascending.
    class ReconfigGraph
    {
        public:
            ReconfigGraph(std::vector<VertexSet> nodes, std::vector<std::vector<int>> adjacency);

            auto nodes() const -> const std::vector<VertexSet> &
            {
                return _nodes;
            }

            auto node(int i) const -> const VertexSet &
            {
                return _nodes[i];
            }

            auto neighbours(int i) const -> const std::vector<int> &
            {
                return _adjacency[i];
            }

            auto size() const -> std::size_t
            {
                return _nodes.size();
            }

            auto edge_count() const -> std::size_t;

            auto index_of(const VertexSet & s) const -> std::optional<int>;

            /// Component label per node; labels count up from 0 in node order.
            auto components() const -> std::vector<int>;

            /// BFS distances from one node, -1 where unreachable.
            auto distances_from(int source) const -> std::vector<int>;

            /// A shortest path of node sets, ties broken by node order.
            auto shortest_path(int source, int target) const -> std::optional<ReconfigSequence>;

        private:
            std::vector<VertexSet> _nodes;
            std::vector<std::vector<int>> _adjacency;
            std::unordered_map<VertexSet, int, VertexSetHash> _index;
    };

    /// Throws ResourceLimit when more than limits.max_nodes sets exist.
    auto build_reconfig_graph(const Graph & g, const Graph & h, const Rule & rule, const SearchLimits & limits = { }) -> ReconfigGraph;

    /// Breadth-first search over the reconfiguration graph, generating
    /// neighbours on demand. Yes-answers carry a shortest sequence. Endpoints
    /// that are not H-induced subgraph isomorphic sets throw InvalidInput.
    auto solve_bfs(const ReconfigInstance & instance, const SearchLimits & limits = { }) -> Solution;

    /// W = (sigma, relation): strings over sigma whose consecutive symbols
    /// are all in relation. Symbols are referred to by index.
    struct WordInstance
    {
        std::vector<std::string> sigma;
        std::set<std::pair<int, int>> relation;
        std::vector<int> source;
        std::vector<int> target;

        auto is_word(const std::vector<int> & w) const -> bool;

        /// Throws InvalidInput unless both words are W-words of equal length
        /// over sigma.
        auto validate() const -> void;

        auto symbol_index(const std::string & name) const -> std::optional<int>;
    };

    /// BFS over W-words of the source's length under single-symbol changes.
    auto word_reachability(const WordInstance & w, std::size_t max_states = default_max_states) -> bool;

    struct Biclique
    {
        VertexSet left;     // inside the declared side
        VertexSet right;
    };

    /// Searches b-subsets of the smaller side for b common neighbours on the
    /// other. `side` is one side of the bipartition; the rest is the other.
    /// Throws InvalidInput if an edge lies within a side.
    auto max_balanced_biclique_at_least(const Graph & g, const VertexSet & side, int b) -> std::optional<Biclique>;
}

#endif
