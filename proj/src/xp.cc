/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <reconf/xp.hh>
#include <reconf/errors.hh>

#include "parallel.hh"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>

using std::optional;
using std::size_t;
using std::vector;

namespace reconf
{
    auto backtracking_oracle() -> IsisOracle
    {
        return [] (const Graph & host, const Graph & pattern) { return find_isis(host, pattern); };
    }

    EdgeTester::EdgeTester(const Graph & g, const Graph & h, IsisOracle oracle) :
        _g(g),
        _h(h),
        _oracle(std::move(oracle)),
        _decomposition(decompose_assorted(h))
    {
        for (auto & part : _decomposition.parts) {
            vector<vector<VertexSet>> through(_g.size());
            optional<CanonicalForm> form = part.canonical;
            for_each_connected_set(_g, part.shape.size(), [&] (const VertexSet & x) {
                auto sub = induced_subgraph(_g, x).graph;
                if (sub.edge_count() != part.shape.edge_count())
                    return true;
                if (form ? canonical_form(sub) == *form : is_isomorphic(sub, part.shape))
                    for (auto v : x)
                        through[v].push_back(x);
                return true;
            });
            for (auto & list : through)
                std::sort(list.begin(), list.end());
            _through.push_back(std::move(through));
        }
    }

    auto EdgeTester::test(const VertexSet & a, const VertexSet & b) const -> optional<VertexSet>
    {
        if (a.size() != b.size() || a.empty())
            throw InvalidInput("edge test needs two clique-node sets of equal size mu >= 1");
        check_vertices(_g, a);
        check_vertices(_g, b);

        auto c = set_union(a, b);
        if (int(c.size()) > _h.size())
            return std::nullopt;

        auto & parts = _decomposition.parts;
        vector<int> used(parts.size(), 0);
        vector<char> in_w(_g.size(), 0);
        vector<int> blocked(_g.size(), 0);      // > 0 when in N[W]
        vector<Vertex> w;
        optional<VertexSet> found;

        auto place = [&] (const VertexSet & x, int delta) {
            for (auto v : x) {
                in_w[v] = delta > 0;
                blocked[v] += delta;
                for (auto u : _g.neighbours(v))
                    blocked[u] += delta;
            }
        };

        auto finish = [&] () -> optional<VertexSet> {
            VertexSet chosen(w);

            // g[W] must be made of components of h, with multiplicities to spare
            vector<int> needed(parts.size(), 0);
            for (auto & component : components(induced_subgraph(_g, chosen).graph)) {
                vector<Vertex> members;
                for (auto local : component)
                    members.push_back(chosen[local]);
                auto cls = _decomposition.classify(induced_subgraph(_g, VertexSet(std::move(members))).graph);
                if (! cls || ++needed[*cls] > parts[*cls].multiplicity)
                    return std::nullopt;
            }

            vector<int> remaining(parts.size());
            for (size_t i = 0 ; i < parts.size() ; ++i)
                remaining[i] = parts[i].multiplicity - needed[i];

            auto rest = remove_vertices(_g, neighborhood(_g, chosen, true));
            auto rest_pattern = _decomposition.compose(remaining);
            auto witness = _oracle(rest.graph, rest_pattern);
            if (! witness)
                return std::nullopt;

            vector<Vertex> members = chosen.members();
            for (auto v : *witness)
                members.push_back(rest.original.at(v));
            return VertexSet(std::move(members));
        };

        std::function<bool (size_t)> choose = [&] (size_t at) -> bool {
            if (at == c.size()) {
                found = finish();
                return found.has_value();
            }

            Vertex v = c[at];
            if (in_w[v])
                return choose(at + 1);

            for (size_t i = 0 ; i < parts.size() ; ++i) {
                if (used[i] == parts[i].multiplicity)
                    continue;
                for (auto & x : _through[i][v]) {
                    bool clash = false;
                    for (auto u : x)
                        if (blocked[u]) {
                            clash = true;
                            break;
                        }
                    if (clash)
                        continue;

                    place(x, 1);
                    w.insert(w.end(), x.begin(), x.end());
                    ++used[i];
                    bool done = choose(at + 1);
                    --used[i];
                    w.resize(w.size() - x.size());
                    place(x, -1);
                    if (done)
                        return true;
                }
            }
            return false;
        };

        choose(0);
        return found;
    }

    auto edge_test(const Graph & g, const Graph & h, const VertexSet & a, const VertexSet & b, const IsisOracle & oracle) -> optional<VertexSet>
    {
        if (a.size() != b.size() || a.empty())
            throw InvalidInput("edge test needs two clique-node sets of equal size mu >= 1");
        return EdgeTester(g, h, oracle).test(a, b);
    }

    auto CompressedGraph::index_of(const VertexSet & t) const -> optional<int>
    {
        if (auto it = index.find(t) ; it != index.end())
            return it->second;
        return std::nullopt;
    }

    auto CompressedGraph::path(int from, int to) const -> optional<vector<int>>
    {
        vector<int> parent(nodes.size(), -1);
        vector<char> seen(nodes.size(), 0);
        seen[from] = 1;
        std::deque<int> queue{ from };
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (v == to) {
                vector<int> result;
                for (int at = to ; at != -1 ; at = parent[at])
                    result.push_back(at);
                std::reverse(result.begin(), result.end());
                return result;
            }
            for (auto [w, e] : adjacency[v])
                if (! seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
        return std::nullopt;
    }

    namespace
    {
        auto binomial(int n, int r) -> double
        {
            double result = 1;
            for (int i = 1 ; i <= r ; ++i)
                result = result * (n - r + i) / i;
            return result;
        }
    }

    auto build_compressed(const Graph & g, const Graph & h, int mu, const IsisOracle & oracle, const XpOptions & options) -> CompressedGraph
    {
        if (mu < 1 || mu > h.size())
            throw InvalidInput("mu must satisfy 1 <= mu <= |V(H)|");
        if (binomial(g.size(), mu) > double(options.max_nodes))
            throw ResourceLimit("compressed graph would have C(" + std::to_string(g.size()) + ", " + std::to_string(mu)
                    + ") nodes, more than " + std::to_string(options.max_nodes) + " (raise --max-nodes)");

        CompressedGraph result;
        result.mu = mu;

        if (mu <= g.size()) {
            vector<Vertex> pick(mu);
            for (int i = 0 ; i < mu ; ++i)
                pick[i] = i;
            while (true) {
                result.index.emplace(VertexSet(pick), int(result.nodes.size()));
                result.nodes.emplace_back(pick);
                int i = mu - 1;
                while (i >= 0 && pick[i] == g.size() - mu + i)
                    --i;
                if (i < 0)
                    break;
                ++pick[i];
                for (int j = i + 1 ; j < mu ; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }

        EdgeTester tester(g, h, oracle);
        size_t count = result.nodes.size();
        vector<vector<std::pair<int, VertexSet>>> later(count);
        detail::parallel_for(count, options.workers, [&] (size_t i) {
            for (size_t j = i + 1 ; j < count ; ++j) {
                if (int(set_union(result.nodes[i], result.nodes[j]).size()) > h.size())
                    continue;
                if (auto witness = tester.test(result.nodes[i], result.nodes[j]))
                    later[i].emplace_back(int(j), std::move(*witness));
            }
        });

        result.adjacency.resize(count);
        for (size_t i = 0 ; i < count ; ++i)
            for (auto & [j, witness] : later[i]) {
                int e = int(result.edges.size());
                result.edges.push_back(CompressedGraph::Edge{ int(i), j, std::move(witness) });
                result.adjacency[i].emplace_back(j, e);
                result.adjacency[j].emplace_back(int(i), e);
            }

        return result;
    }

    auto xp_parameter(const ReconfigInstance & instance) -> int
    {
        if (instance.rule.kind() != RuleKind::Jump)
            throw InvalidInput("the XP solver needs a k-TJ rule");
        int mu = instance.pattern.size() - instance.rule.k();
        if (mu < 1)
            throw InvalidInput("the XP solver needs mu = |V(H)| - k >= 1, got " + std::to_string(mu));
        return mu;
    }

    namespace
    {
        auto check_endpoints(const ReconfigInstance & instance) -> void
        {
            check_vertices(instance.host, instance.source);
            check_vertices(instance.host, instance.target);
            if (! is_isis_set(instance.host, instance.pattern, instance.source))
                throw InvalidInput("source set is not an H-induced subgraph isomorphic set");
            if (! is_isis_set(instance.host, instance.pattern, instance.target))
                throw InvalidInput("target set is not an H-induced subgraph isomorphic set");
        }

        auto checked(const ReconfigInstance & instance, ReconfigSequence sequence) -> ReconfigSequence
        {
            sequence.steps.erase(std::unique(sequence.steps.begin(), sequence.steps.end()), sequence.steps.end());
            if (auto check = verify_sequence(instance, sequence) ; ! check)
                throw std::logic_error("XP sequence failed verification at step " + std::to_string(check.failed_index)
                        + ": " + check.reason);
            return sequence;
        }
    }

    auto solve_xp_with(const CompressedGraph & compressed, const ReconfigInstance & instance,
            const VertexSet & a, const VertexSet & b) -> Solution
    {
        int mu = xp_parameter(instance);
        if (mu != compressed.mu)
            throw InvalidInput("compressed graph was built for a different mu");
        if (int(a.size()) != mu || int(b.size()) != mu
                || set_difference(a, instance.source).size() != 0 || set_difference(b, instance.target).size() != 0)
            throw InvalidInput("clique-node endpoints must be mu-subsets of the source and target");

        Solution result;
        result.stats.solver = "xp";
        result.stats.nodes = compressed.nodes.size();
        result.stats.edges = compressed.edges.size();

        if (instance.source == instance.target) {
            result.reachable = true;
            result.sequence = ReconfigSequence{ { instance.source } };
            return result;
        }
        if (a == b) {
            // the endpoints share mu vertices, so at most k tokens differ
            result.reachable = true;
            result.sequence = checked(instance, ReconfigSequence{ { instance.source, instance.target } });
            return result;
        }

        auto from = compressed.index_of(a), to = compressed.index_of(b);
        if (! from || ! to)
            throw InvalidInput("clique-node endpoints are not nodes of the compressed graph");

        auto path = compressed.path(*from, *to);
        result.stats.expanded = path ? path->size() : 0;
        if (! path)
            return result;

        ReconfigSequence sequence{ { instance.source } };
        for (size_t i = 1 ; i < path->size() ; ++i) {
            int u = (*path)[i - 1], v = (*path)[i];
            for (auto [w, e] : compressed.adjacency[u])
                if (w == v) {
                    sequence.steps.push_back(compressed.edges[e].witness);
                    break;
                }
        }
        sequence.steps.push_back(instance.target);

        result.reachable = true;
        result.sequence = checked(instance, std::move(sequence));
        return result;
    }

    auto solve_xp(const ReconfigInstance & instance, const IsisOracle & oracle, const XpOptions & options) -> Solution
    {
        int mu = xp_parameter(instance);
        check_endpoints(instance);

        auto a = instance.source.prefix(mu), b = instance.target.prefix(mu);
        if (instance.source == instance.target || a == b) {
            CompressedGraph trivial;
            trivial.mu = mu;
            return solve_xp_with(trivial, instance, a, b);
        }

        auto compressed = build_compressed(instance.host, instance.pattern, mu, oracle, options);
        return solve_xp_with(compressed, instance, a, b);
    }
}
