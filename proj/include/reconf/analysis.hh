/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RECONF_ANALYSIS_HH
#define RECONF_ANALYSIS_HH 1

#include <reconf/graph.hh>

#include <cstddef>
#include <optional>
#include <vector>

namespace reconf
{
    enum class Parity
    {
        Any,
        Odd,
        Even
    };

    /// Induced cycles of length >= 4. Each cycle starts at its smallest
    /// vertex and runs towards the smaller of that vertex's two cycle
    /// neighbours, so every hole is listed once.
    struct HoleReport
    {
        std::vector<std::vector<Vertex>> holes;
        int odd = 0;
        int even = 0;
    };

    constexpr std::size_t default_hole_search_steps = 10'000'000;

    /// Canonically rooted DFS over chordless paths. Throws ResourceLimit when
    /// more than max_steps path extensions would be needed.
    auto find_holes(const Graph & g, Parity parity, bool stop_at_first,
            std::size_t max_steps = default_hole_search_steps) -> HoleReport;

    auto is_even_hole_free(const Graph & g, std::size_t max_steps = default_hole_search_steps) -> bool;
    auto is_odd_hole_free(const Graph & g, std::size_t max_steps = default_hole_search_steps) -> bool;

    /// Neither g nor its complement has an odd hole.
    auto is_perfect(const Graph & g, std::size_t max_steps = default_hole_search_steps) -> bool;

    /// A proper 2-colouring (0/1 per vertex), if g is bipartite.
    auto two_colouring(const Graph & g) -> std::optional<std::vector<int>>;

    auto is_bipartite(const Graph & g) -> bool;

    /// Largest shortest-path distance. Throws InvalidInput on a disconnected
    /// graph; the empty and one-vertex graphs have diameter 0.
    auto diameter(const Graph & g) -> int;
}

#endif
