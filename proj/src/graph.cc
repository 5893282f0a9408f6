/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <reconf/graph.hh>
#include <reconf/errors.hh>

#include <algorithm>
#include <deque>
#include <iterator>
#include <numeric>
#include <sstream>

using std::size_t;
using std::string;
using std::vector;

namespace reconf
{
    VertexSet::VertexSet(std::initializer_list<Vertex> members) :
        VertexSet(vector<Vertex>(members))
    {
    }

    VertexSet::VertexSet(vector<Vertex> members) :
        _members(std::move(members))
    {
        std::sort(_members.begin(), _members.end());
        _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
    }

    auto VertexSet::contains(Vertex v) const -> bool
    {
        return std::binary_search(_members.begin(), _members.end(), v);
    }

    auto VertexSet::min() const -> Vertex
    {
        return _members.empty() ? -1 : _members.front();
    }

    auto VertexSet::max() const -> Vertex
    {
        return _members.empty() ? -1 : _members.back();
    }

    auto VertexSet::prefix(size_t count) const -> VertexSet
    {
        VertexSet result;
        result._members.assign(_members.begin(), _members.begin() + std::min(count, _members.size()));
        return result;
    }

    auto VertexSet::with(Vertex v) const -> VertexSet
    {
        VertexSet result = *this;
        auto at = std::lower_bound(result._members.begin(), result._members.end(), v);
        if (at == result._members.end() || *at != v)
            result._members.insert(at, v);
        return result;
    }

    auto VertexSet::without(Vertex v) const -> VertexSet
    {
        VertexSet result = *this;
        auto at = std::lower_bound(result._members.begin(), result._members.end(), v);
        if (at != result._members.end() && *at == v)
            result._members.erase(at);
        return result;
    }

    auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet
    {
        vector<Vertex> out;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return VertexSet(std::move(out));
    }

    auto set_intersection(const VertexSet & a, const VertexSet & b) -> VertexSet
    {
        vector<Vertex> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return VertexSet(std::move(out));
    }

    auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet
    {
        vector<Vertex> out;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return VertexSet(std::move(out));
    }

    auto difference_size(const VertexSet & a, const VertexSet & b) -> size_t
    {
        size_t count = 0;
        auto i = a.begin(), j = b.begin();
        while (i != a.end()) {
            if (j == b.end() || *i < *j) {
                ++count;
                ++i;
            }
            else if (*j < *i)
                ++j;
            else {
                ++i;
                ++j;
            }
        }
        return count;
    }

    auto to_string(const VertexSet & s) -> string
    {
        std::ostringstream out;
        out << "{";
        for (size_t i = 0 ; i < s.size() ; ++i)
            out << (i ? ", " : "") << s[i];
        out << "}";
        return out.str();
    }

    auto VertexSetHash::operator() (const VertexSet & s) const -> size_t
    {
        size_t h = 0xcbf29ce484222325ULL;
        for (auto v : s) {
            h ^= size_t(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    Graph::Graph(int n, const vector<Edge> & edges, vector<string> labels) :
        _size(n),
        _words((n + 63) / 64),
        _adjacency(n),
        _matrix(size_t(n) * size_t((n + 63) / 64), 0),
        _labels(std::move(labels))
    {
        if (n < 0)
            throw InvalidInput("negative vertex count");
        if (! _labels.empty() && int(_labels.size()) != n)
            throw InvalidInput("labels must cover every vertex");

        for (auto [u, v] : edges) {
            if (! contains(u) || ! contains(v))
                throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
            if (u == v)
                throw InvalidInput("self-loop on vertex " + std::to_string(u));
            if (adjacent(u, v))
                continue;
            _matrix[size_t(u) * _words + (v >> 6)] |= std::uint64_t(1) << (v & 63);
            _matrix[size_t(v) * _words + (u >> 6)] |= std::uint64_t(1) << (u & 63);
            _adjacency[u].push_back(v);
            _adjacency[v].push_back(u);
            ++_edge_count;
        }

        for (auto & a : _adjacency)
            std::sort(a.begin(), a.end());
    }

    auto Graph::label(Vertex v) const -> string
    {
        return _labels.empty() ? string() : _labels.at(v);
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_edge_count);
        for (Vertex u = 0 ; u < _size ; ++u)
            for (auto v : _adjacency[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::with_labels(vector<string> labels) const -> Graph
    {
        if (! labels.empty() && int(labels.size()) != _size)
            throw InvalidInput("labels must cover every vertex");
        Graph result = *this;
        result._labels = std::move(labels);
        return result;
    }

    auto Graph::without_labels() const -> Graph
    {
        return with_labels({ });
    }

    auto check_vertices(const Graph & g, const VertexSet & s) -> void
    {
        for (auto v : s)
            if (! g.contains(v))
                throw InvalidInput("vertex " + std::to_string(v) + " is not in a graph with "
                        + std::to_string(g.size()) + " vertices");
    }

    auto invariant_violation(const Graph & g) -> string
    {
        if (g.has_labels() && int(g.labels().size()) != g.size())
            return "labels do not cover every vertex";

        long degree_sum = 0;
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            if (g.adjacent(v, v))
                return "self-loop at " + std::to_string(v);
            degree_sum += g.degree(v);
            for (auto w : g.neighbours(v)) {
                if (! g.adjacent(w, v) || ! g.adjacent(v, w))
                    return "matrix and lists disagree at " + std::to_string(v) + "-" + std::to_string(w);
                auto back = g.neighbours(w);
                if (! std::binary_search(back.begin(), back.end(), v))
                    return "asymmetric edge " + std::to_string(v) + "-" + std::to_string(w);
            }
            int row_count = 0;
            for (auto word : g.row(v))
                row_count += __builtin_popcountll(word);
            if (row_count != g.degree(v))
                return "matrix row count differs from degree at " + std::to_string(v);
        }
        if (degree_sum != 2 * g.edge_count())
            return "edge count does not match degree sum";
        return { };
    }

    auto null_graph(int n) -> Graph
    {
        return Graph(n);
    }

    auto complete_graph(int n) -> Graph
    {
        vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    auto path_graph(int n) -> Graph
    {
        vector<Edge> edges;
        for (int u = 0 ; u + 1 < n ; ++u)
            edges.emplace_back(u, u + 1);
        return Graph(n, edges);
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw InvalidInput("a cycle needs at least three vertices");
        vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            edges.emplace_back(u, (u + 1) % n);
        return Graph(n, edges);
    }

    auto complete_bipartite_graph(int left, int right) -> Graph
    {
        vector<Edge> edges;
        for (int u = 0 ; u < left ; ++u)
            for (int v = 0 ; v < right ; ++v)
                edges.emplace_back(u, left + v);
        return Graph(left + right, edges);
    }

    auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph
    {
        check_vertices(g, s);

        vector<Vertex> position(g.size(), -1);
        for (size_t i = 0 ; i < s.size() ; ++i)
            position[s[i]] = Vertex(i);

        vector<Edge> edges;
        for (size_t i = 0 ; i < s.size() ; ++i)
            for (auto w : g.neighbours(s[i]))
                if (position[w] > Vertex(i))
                    edges.emplace_back(Vertex(i), position[w]);

        vector<string> labels;
        if (g.has_labels())
            for (auto v : s)
                labels.push_back(g.label(v));

        return InducedSubgraph{ Graph(int(s.size()), edges, std::move(labels)), s.members() };
    }

    auto remove_vertices(const Graph & g, const VertexSet & x) -> InducedSubgraph
    {
        check_vertices(g, x);
        vector<Vertex> keep;
        for (Vertex v = 0 ; v < g.size() ; ++v)
            if (! x.contains(v))
                keep.push_back(v);
        return induced_subgraph(g, VertexSet(std::move(keep)));
    }

    auto complement(const Graph & g) -> Graph
    {
        vector<Edge> edges;
        for (Vertex u = 0 ; u < g.size() ; ++u)
            for (Vertex v = u + 1 ; v < g.size() ; ++v)
                if (! g.adjacent(u, v))
                    edges.emplace_back(u, v);
        return Graph(g.size(), edges, g.labels());
    }

    auto disjoint_union(std::span<const Graph> gs) -> Graph
    {
        int total = 0;
        for (auto & g : gs)
            total += g.size();

        vector<Edge> edges;
        vector<string> labels;
        labels.reserve(total);
        int offset = 0;
        for (size_t part = 0 ; part < gs.size() ; ++part) {
            auto & g = gs[part];
            for (auto [u, v] : g.edges())
                edges.emplace_back(offset + u, offset + v);
            for (Vertex v = 0 ; v < g.size() ; ++v)
                labels.push_back(g.has_labels() ? std::to_string(part) + "/" + g.label(v) : std::to_string(part));
            offset += g.size();
        }
        return Graph(total, edges, std::move(labels));
    }

    auto copies(const Graph & f, int t) -> Graph
    {
        vector<Graph> parts(std::max(t, 0), f);
        return disjoint_union(parts);
    }

    auto duplicate_set(const Graph & g, const VertexSet & s, int times) -> Duplication
    {
        check_vertices(g, s);
        if (times < 0)
            throw InvalidInput("negative duplication count");

        int n = g.size() + int(s.size()) * times;
        vector<Edge> edges = g.edges();
        vector<Vertex> original(n);
        std::iota(original.begin(), original.begin() + g.size(), 0);
        vector<string> labels = g.labels();

        Vertex next = g.size();
        for (int round = 1 ; round <= times ; ++round)
            for (auto u : s) {
                original[next] = u;
                for (auto w : g.neighbours(u))
                    edges.emplace_back(next, w);
                if (g.has_labels())
                    labels.push_back(g.label(u) + "'" + std::to_string(round));
                ++next;
            }

        return Duplication{ Graph(n, edges, std::move(labels)), std::move(original) };
    }

    auto join_sets(const Graph & g, const VertexSet & a, const VertexSet & b) -> Graph
    {
        check_vertices(g, a);
        check_vertices(g, b);
        if (! set_intersection(a, b).empty())
            throw InvalidInput("cannot join overlapping vertex sets");

        vector<Edge> edges = g.edges();
        for (auto u : a)
            for (auto v : b)
                edges.emplace_back(u, v);
        return Graph(g.size(), edges, g.labels());
    }

    auto replace_vertex(const Graph & g, Vertex v, const Graph & f) -> Replacement
    {
        if (! g.contains(v))
            throw InvalidInput("vertex " + std::to_string(v) + " is not in the host graph");

        int n = g.size() - 1 + f.size();
        vector<Vertex> from_host(g.size(), -1), from_inserted(f.size());
        Vertex next = 0;
        for (Vertex u = 0 ; u < g.size() ; ++u)
            if (u != v)
                from_host[u] = next++;
        for (Vertex w = 0 ; w < f.size() ; ++w)
            from_inserted[w] = next++;

        vector<Edge> edges;
        for (auto [a, b] : g.edges())
            if (a != v && b != v)
                edges.emplace_back(from_host[a], from_host[b]);
        for (auto [a, b] : f.edges())
            edges.emplace_back(from_inserted[a], from_inserted[b]);
        for (auto u : g.neighbours(v))
            for (Vertex w = 0 ; w < f.size() ; ++w)
                edges.emplace_back(from_host[u], from_inserted[w]);

        vector<string> labels;
        if (g.has_labels() || f.has_labels()) {
            labels.resize(n);
            for (Vertex u = 0 ; u < g.size() ; ++u)
                if (u != v)
                    labels[from_host[u]] = g.label(u);
            for (Vertex w = 0 ; w < f.size() ; ++w)
                labels[from_inserted[w]] = g.label(v) + "/" + (f.has_labels() ? f.label(w) : std::to_string(w));
        }

        return Replacement{ Graph(n, edges, std::move(labels)), std::move(from_host), std::move(from_inserted) };
    }

    auto substitute(const Graph & base, std::span<const Graph> parts) -> Substitution
    {
        if (int(parts.size()) != base.size())
            throw InvalidInput("substitute needs exactly one part per base vertex");

        vector<Vertex> offsets(base.size() + 1, 0);
        for (Vertex v = 0 ; v < base.size() ; ++v)
            offsets[v + 1] = offsets[v] + parts[v].size();

        vector<Edge> edges;
        for (Vertex v = 0 ; v < base.size() ; ++v)
            for (auto [a, b] : parts[v].edges())
                edges.emplace_back(offsets[v] + a, offsets[v] + b);
        for (auto [u, v] : base.edges())
            for (Vertex a = offsets[u] ; a < offsets[u + 1] ; ++a)
                for (Vertex b = offsets[v] ; b < offsets[v + 1] ; ++b)
                    edges.emplace_back(a, b);

        return Substitution{ Graph(offsets.back(), edges), std::move(offsets) };
    }

    auto neighborhood(const Graph & g, const VertexSet & x, bool closed) -> VertexSet
    {
        check_vertices(g, x);
        vector<char> in(g.size(), 0);
        for (auto v : x)
            for (auto w : g.neighbours(v))
                in[w] = 1;
        for (auto v : x)
            in[v] = closed;

        vector<Vertex> result;
        for (Vertex v = 0 ; v < g.size() ; ++v)
            if (in[v])
                result.push_back(v);
        return VertexSet(std::move(result));
    }

    auto components(const Graph & g) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        vector<char> seen(g.size(), 0);
        for (Vertex root = 0 ; root < g.size() ; ++root) {
            if (seen[root])
                continue;
            vector<Vertex> members{ root };
            seen[root] = 1;
            for (size_t i = 0 ; i < members.size() ; ++i)
                for (auto w : g.neighbours(members[i]))
                    if (! seen[w]) {
                        seen[w] = 1;
                        members.push_back(w);
                    }
            result.emplace_back(std::move(members));
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return components(g).size() <= 1;
    }

    auto is_independent(const Graph & g, const VertexSet & s) -> bool
    {
        check_vertices(g, s);
        for (size_t i = 0 ; i < s.size() ; ++i)
            for (size_t j = i + 1 ; j < s.size() ; ++j)
                if (g.adjacent(s[i], s[j]))
                    return false;
        return true;
    }

    namespace
    {
        struct ConnectedSetEnumerator
        {
            const Graph & g;
            int target;
            const std::function<bool (const VertexSet &)> & visit;
            vector<Vertex> chosen;
            vector<int> excluded;       // > 0 if in chosen or adjacent to chosen
            bool stopped = false;

            // ESU: extension holds candidates adjacent to the current set,
            // larger than root, and not yet ruled out for this branch.
            auto extend(vector<Vertex> extension, Vertex root) -> void
            {
                if (int(chosen.size()) == target) {
                    if (! visit(VertexSet(chosen)))
                        stopped = true;
                    return;
                }

                while (! extension.empty() && ! stopped) {
                    Vertex w = extension.back();
                    extension.pop_back();

                    vector<Vertex> next = extension;
                    for (auto u : g.neighbours(w))
                        if (u > root && excluded[u] == 0)
                            next.push_back(u);

                    chosen.push_back(w);
                    ++excluded[w];
                    for (auto u : g.neighbours(w))
                        ++excluded[u];

                    extend(std::move(next), root);

                    for (auto u : g.neighbours(w))
                        --excluded[u];
                    --excluded[w];
                    chosen.pop_back();
                }
            }
        };
    }

    auto for_each_connected_set(const Graph & g, int size, const std::function<bool (const VertexSet &)> & visit) -> void
    {
        if (size <= 0) {
            visit(VertexSet{ });
            return;
        }

        ConnectedSetEnumerator e{ g, size, visit, { }, vector<int>(g.size(), 0) };
        for (Vertex root = 0 ; root < g.size() && ! e.stopped ; ++root) {
            e.chosen.push_back(root);
            ++e.excluded[root];
            for (auto u : g.neighbours(root))
                ++e.excluded[u];

            vector<Vertex> extension;
            for (auto u : g.neighbours(root))
                if (u > root)
                    extension.push_back(u);
            e.extend(std::move(extension), root);

            for (auto u : g.neighbours(root))
                --e.excluded[u];
            --e.excluded[root];
            e.chosen.pop_back();
        }
    }
}
