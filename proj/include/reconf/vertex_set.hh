/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RECONF_VERTEX_SET_HH
#define RECONF_VERTEX_SET_HH 1

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace reconf
{
    using Vertex = int;

    /// A set of vertex identifiers, kept sorted and duplicate free. Token
    /// placements, candidate pattern images and clique-node labels are all
    /// VertexSets.
    class VertexSet
    {
        public:
            VertexSet() = default;
            VertexSet(std::initializer_list<Vertex> members);
            explicit VertexSet(std::vector<Vertex> members);

            auto members() const -> const std::vector<Vertex> &
            {
                return _members;
            }

            auto size() const -> std::size_t
            {
                return _members.size();
            }

            auto empty() const -> bool
            {
                return _members.empty();
            }

            auto begin() const
            {
                return _members.begin();
            }

            auto end() const
            {
                return _members.end();
            }

            auto operator[] (std::size_t i) const -> Vertex
            {
                return _members[i];
            }

            auto contains(Vertex v) const -> bool;

            /// Smallest and largest member; -1 when empty.
            auto min() const -> Vertex;
            auto max() const -> Vertex;

            /// The first `count` members in ascending order.
            auto prefix(std::size_t count) const -> VertexSet;

            auto with(Vertex v) const -> VertexSet;
            auto without(Vertex v) const -> VertexSet;

            auto operator<=> (const VertexSet &) const = default;
            auto operator== (const VertexSet &) const -> bool = default;

        private:
            std::vector<Vertex> _members;
    };

    auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet;
    auto set_intersection(const VertexSet & a, const VertexSet & b) -> VertexSet;
    auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet;

    /// |a \ b| without materialising the difference.
    auto difference_size(const VertexSet & a, const VertexSet & b) -> std::size_t;

    /// "{1, 3}" using zero-based identifiers.
    auto to_string(const VertexSet & s) -> std::string;

    struct VertexSetHash
    {
        auto operator() (const VertexSet & s) const -> std::size_t;
    };
}

#endif
