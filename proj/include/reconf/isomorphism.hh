/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RECONF_ISOMORPHISM_HH
#define RECONF_ISOMORPHISM_HH 1

#include <reconf/graph.hh>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace reconf
{
    /// image[u] is the host vertex pattern vertex u maps to. Injective, and
    /// preserves both adjacency and non-adjacency.
    struct IsoMapping
    {
        std::vector<Vertex> image;

        auto image_set() const -> VertexSet
        {
            return VertexSet(image);
        }
    };

    auto is_isomorphic(const Graph & a, const Graph & b) -> bool;

    /// A witness bijection V(a) -> V(b), when one exists.
    auto find_isomorphism(const Graph & a, const Graph & b) -> std::optional<IsoMapping>;

    /// Backtracking search for an injection of h into g whose image induces a
    /// copy of h.
    auto find_isis_mapping(const Graph & g, const Graph & h) -> std::optional<IsoMapping>;

    /// A vertex set S with g[S] isomorphic to h, if any.
    auto find_isis(const Graph & g, const Graph & h) -> std::optional<VertexSet>;

    /// Calls visit once for every S with g[S] isomorphic to h (sets, not
    /// mappings). Return false from visit to stop. The order is deterministic.
    auto for_each_isis(const Graph & g, const Graph & h, const std::function<bool (const VertexSet &)> & visit) -> void;

    auto enumerate_isis(const Graph & g, const Graph & h) -> std::vector<VertexSet>;

    auto is_isis_set(const Graph & g, const Graph & h, const VertexSet & s) -> bool;

    /// Canonical form of a graph with at most max_canonical_order vertices:
    /// the minimum upper-triangle adjacency bit string over all vertex
    /// orderings that list vertices by non-decreasing degree.
    struct CanonicalForm
    {
        int order = 0;
        std::uint64_t bits = 0;

        auto operator<=> (const CanonicalForm &) const = default;
    };

    constexpr int max_canonical_order = 8;

    /// Memoised per thread. Throws InvalidInput above max_canonical_order.
    auto canonical_form(const Graph & g) -> CanonicalForm;

    struct ComponentClass
    {
        Graph shape;            // connected
        int multiplicity = 0;
        std::optional<CanonicalForm> canonical;
        std::vector<VertexSet> occurrences;     // components of the source graph of this class
    };

    /// h = t_1 F_1 + ... + t_l F_l, with the F_i pairwise non-isomorphic and
    /// listed in order of first appearance.
    struct AssortedDecomposition
    {
        std::vector<ComponentClass> parts;

        auto order() const -> int;
        auto largest_part() const -> int;

        /// Index of the part isomorphic to the given connected graph.
        auto classify(const Graph & component) const -> std::optional<std::size_t>;

        /// sum_i counts[i] F_i, laid out part by part.
        auto compose(const std::vector<int> & counts) const -> Graph;

        auto multiplicities() const -> std::vector<int>;
    };

    auto decompose_assorted(const Graph & h) -> AssortedDecomposition;
}

#endif
