/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <reconf/analysis.hh>
#include <reconf/errors.hh>

#include <algorithm>
#include <deque>

using std::size_t;
using std::vector;

namespace reconf
{
    namespace
    {
        struct HoleSearch
        {
            const Graph & g;
            Parity parity;
            bool stop_at_first;
            size_t max_steps;
            size_t steps = 0;
            HoleReport report;
            vector<Vertex> path;
            vector<int> touching;       // number of path vertices adjacent to v, excluding the last one
            vector<char> on_path;
            bool done = false;

            auto wanted(size_t length) const -> bool
            {
                switch (parity) {
                    case Parity::Any: return true;
                    case Parity::Odd: return length % 2 == 1;
                    case Parity::Even: return length % 2 == 0;
                }
                return false;
            }

            auto record() -> void
            {
                size_t length = path.size();
                if (! wanted(length))
                    return;
                (length % 2 ? report.odd : report.even) += 1;
                report.holes.push_back(path);
                if (stop_at_first)
                    done = true;
            }

            // path = root, v1, ..., last. Extending with w keeps the path
            // chordless when w sees none of root..last except last, with the
            // root allowed only to close the cycle.
            auto extend(Vertex root) -> void
            {
                Vertex last = path.back();
                for (auto w : g.neighbours(last)) {
                    if (done)
                        return;
                    if (w <= root || on_path[w])
                        continue;
                    // path vertices other than root and last adjacent to w
                    bool sees_root = path.size() > 1 && g.adjacent(w, root);
                    if (touching[w] - (sees_root ? 1 : 0) > 0)
                        continue;

                    if (++steps > max_steps)
                        throw ResourceLimit("hole search exceeded " + std::to_string(max_steps) + " steps");

                    if (sees_root) {
                        // closes a cycle root..last,w; orient by second < final
                        if (path.size() >= 3 && path[1] < w) {
                            path.push_back(w);
                            record();
                            path.pop_back();
                        }
                        continue;
                    }

                    for (auto x : g.neighbours(last))
                        ++touching[x];
                    path.push_back(w);
                    on_path[w] = 1;
                    extend(root);
                    on_path[w] = 0;
                    path.pop_back();
                    for (auto x : g.neighbours(last))
                        --touching[x];
                }
            }
        };
    }

    auto find_holes(const Graph & g, Parity parity, bool stop_at_first, size_t max_steps) -> HoleReport
    {
        HoleSearch search{ g, parity, stop_at_first, max_steps, 0, { }, { }, vector<int>(g.size(), 0), vector<char>(g.size(), 0) };
        for (Vertex root = 0 ; root < g.size() && ! search.done ; ++root) {
            search.path = { root };
            search.on_path[root] = 1;
            search.extend(root);
            search.on_path[root] = 0;
        }
        return search.report;
    }

    auto is_even_hole_free(const Graph & g, size_t max_steps) -> bool
    {
        return find_holes(g, Parity::Even, true, max_steps).holes.empty();
    }

    auto is_odd_hole_free(const Graph & g, size_t max_steps) -> bool
    {
        return find_holes(g, Parity::Odd, true, max_steps).holes.empty();
    }

    auto is_perfect(const Graph & g, size_t max_steps) -> bool
    {
        return is_odd_hole_free(g, max_steps) && is_odd_hole_free(complement(g), max_steps);
    }

    auto two_colouring(const Graph & g) -> std::optional<vector<int>>
    {
        vector<int> colour(g.size(), -1);
        for (Vertex root = 0 ; root < g.size() ; ++root) {
            if (colour[root] != -1)
                continue;
            colour[root] = 0;
            std::deque<Vertex> queue{ root };
            while (! queue.empty()) {
                Vertex v = queue.front();
                queue.pop_front();
                for (auto w : g.neighbours(v)) {
                    if (colour[w] == -1) {
                        colour[w] = 1 - colour[v];
                        queue.push_back(w);
                    }
                    else if (colour[w] == colour[v])
                        return std::nullopt;
                }
            }
        }
        return colour;
    }

    auto is_bipartite(const Graph & g) -> bool
    {
        return two_colouring(g).has_value();
    }

    auto diameter(const Graph & g) -> int
    {
        if (! is_connected(g))
            throw InvalidInput("diameter is undefined for a disconnected graph");

        int result = 0;
        for (Vertex source = 0 ; source < g.size() ; ++source) {
            vector<int> distance(g.size(), -1);
            distance[source] = 0;
            std::deque<Vertex> queue{ source };
            while (! queue.empty()) {
                Vertex v = queue.front();
                queue.pop_front();
                result = std::max(result, distance[v]);
                for (auto w : g.neighbours(v))
                    if (distance[w] == -1) {
                        distance[w] = distance[v] + 1;
                        queue.push_back(w);
                    }
            }
        }
        return result;
    }
}
