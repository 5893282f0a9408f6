/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RECONF_GRAPH_HH
#define RECONF_GRAPH_HH 1

#include <reconf/vertex_set.hh>

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace reconf
{
    using Edge = std::pair<Vertex, Vertex>;

    /// Immutable simple undirected graph on vertices 0..n-1. Adjacency is held
    /// both as sorted neighbour lists and as a bit matrix, so membership tests
    /// are O(1). Optional per-vertex labels record provenance through the
    /// construction operators; they take no part in equality.
    class Graph
    {
        public:
            Graph() = default;

            /// Duplicate edges are merged. Self-loops, out-of-range endpoints
            /// and a label vector of the wrong length throw InvalidInput.
            explicit Graph(int n, const std::vector<Edge> & edges = { }, std::vector<std::string> labels = { });

            auto size() const -> int
            {
                return _size;
            }

            auto edge_count() const -> long
            {
                return _edge_count;
            }

            auto adjacent(Vertex u, Vertex v) const -> bool
            {
                return (_matrix[std::size_t(u) * _words + (v >> 6)] >> (v & 63)) & 1;
            }

            auto neighbours(Vertex v) const -> std::span<const Vertex>
            {
                return _adjacency[v];
            }

            auto degree(Vertex v) const -> int
            {
                return int(_adjacency[v].size());
            }

            /// Row of the adjacency bit matrix; words() 64-bit words long.
            auto row(Vertex v) const -> std::span<const std::uint64_t>
            {
                return { _matrix.data() + std::size_t(v) * _words, std::size_t(_words) };
            }

            auto words() const -> int
            {
                return _words;
            }

            auto has_labels() const -> bool
            {
                return ! _labels.empty();
            }

            auto labels() const -> const std::vector<std::string> &
            {
                return _labels;
            }

            /// Empty string when the graph carries no labels.
            auto label(Vertex v) const -> std::string;

            /// Edges with u < v, in ascending order.
            auto edges() const -> std::vector<Edge>;

            auto with_labels(std::vector<std::string> labels) const -> Graph;
            auto without_labels() const -> Graph;

            auto contains(Vertex v) const -> bool
            {
                return v >= 0 && v < _size;
            }

            friend auto operator== (const Graph & a, const Graph & b) -> bool
            {
                return a._size == b._size && a._adjacency == b._adjacency;
            }

        private:
            int _size = 0;
            int _words = 0;
            long _edge_count = 0;
            std::vector<std::vector<Vertex>> _adjacency;
            std::vector<std::uint64_t> _matrix;
            std::vector<std::string> _labels;
    };

    /// Throws InvalidInput unless every member of s is a vertex of g.
    auto check_vertices(const Graph & g, const VertexSet & s) -> void;

    /// Re-checks the structural invariants (symmetry, no self-loops, labels
    /// total). Returns a description of the first violation, or empty.
    auto invariant_violation(const Graph & g) -> std::string;

    // Named graphs

    auto null_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_bipartite_graph(int left, int right) -> Graph;

    // Construction operators

    struct InducedSubgraph
    {
        Graph graph;
        std::vector<Vertex> original;   // new vertex -> vertex of the input
    };

    auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph;

    /// g - X: the subgraph induced by V(g) \ x.
    auto remove_vertices(const Graph & g, const VertexSet & x) -> InducedSubgraph;

    auto complement(const Graph & g) -> Graph;

    /// Parts are laid out contiguously in input order; labels record the part
    /// index as "<part>" or "<part>/<original label>".
    auto disjoint_union(std::span<const Graph> gs) -> Graph;

    /// t disjoint copies of f.
    auto copies(const Graph & f, int t) -> Graph;

    struct Duplication
    {
        Graph graph;
        std::vector<Vertex> original;   // vertex -> the vertex of the input it copies
    };

    /// Each round adds, for every u in s (ascending), a vertex adjacent to the
    /// original N_g(u). Rounds append |s| vertices each, in round order.
    auto duplicate_set(const Graph & g, const VertexSet & s, int times) -> Duplication;

    /// Adds every edge between a and b. Overlapping sets throw InvalidInput.
    auto join_sets(const Graph & g, const VertexSet & a, const VertexSet & b) -> Graph;

    struct Replacement
    {
        Graph graph;
        std::vector<Vertex> from_host;      // vertex of g -> new id, -1 for the replaced vertex
        std::vector<Vertex> from_inserted;  // vertex of f -> new id
    };

    /// Removes v, inserts f, and joins every vertex of f to the old N_g(v).
    /// Surviving host vertices keep their relative order; f is appended.
    auto replace_vertex(const Graph & g, Vertex v, const Graph & f) -> Replacement;

    struct Substitution
    {
        Graph graph;
        std::vector<Vertex> offsets;    // first vertex of each block, plus a final sentinel
    };

    /// Replaces every vertex i of base by parts[i] at once: block i occupies
    /// [offsets[i], offsets[i+1]), and blocks of adjacent base vertices are
    /// completely joined. Equivalent to replacing the vertices one by one.
    auto substitute(const Graph & base, std::span<const Graph> parts) -> Substitution;

    /// Open neighbourhood N(X) = vertices outside x with a neighbour in x, or
    /// the closed neighbourhood N[X] = N(X) u X.
    auto neighborhood(const Graph & g, const VertexSet & x, bool closed) -> VertexSet;

    /// Vertex sets of the connected components, ordered by smallest member.
    auto components(const Graph & g) -> std::vector<VertexSet>;

    auto is_connected(const Graph & g) -> bool;

    auto is_independent(const Graph & g, const VertexSet & s) -> bool;

    /// Every connected vertex set of exactly `size` vertices, each once
    /// (ESU enumeration). The callback returns false to stop early.
    auto for_each_connected_set(const Graph & g, int size, const std::function<bool (const VertexSet &)> & visit) -> void;
}

#endif
