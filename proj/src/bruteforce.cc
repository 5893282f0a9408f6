/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <reconf/bruteforce.hh>
#include <reconf/errors.hh>
#include <reconf/isomorphism.hh>

#include "parallel.hh"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace reconf
{
    namespace
    {
        using Bits = vector<std::uint64_t>;

        auto to_bits(int words, const VertexSet & s) -> Bits
        {
            Bits bits(words, 0);
            for (auto v : s)
                bits[v >> 6] |= std::uint64_t(1) << (v & 63);
            return bits;
        }

        auto moved(const Bits & a, const Bits & b) -> int
        {
            int count = 0;
            for (size_t w = 0 ; w < a.size() ; ++w)
                count += __builtin_popcountll(a[w] & ~b[w]);
            return count;
        }

        // Pair test with a bitset prefilter on the number of moved tokens.
        struct PairTester
        {
            const Graph & g;
            const Rule & rule;

            auto operator() (const VertexSet & s, const Bits & sb, const VertexSet & t, const Bits & tb) const -> bool
            {
                if (moved(sb, tb) > rule.k())
                    return false;
                if (rule.kind() == RuleKind::Jump)
                    return true;
                return adjacent(g, s, t, rule);
            }
        };

        auto collect_nodes(const Graph & g, const Graph & h, size_t max_nodes) -> vector<VertexSet>
        {
            vector<VertexSet> nodes;
            for_each_isis(g, h, [&] (const VertexSet & s) {
                if (nodes.size() == max_nodes)
                    throw ResourceLimit("reconfiguration graph has more than " + std::to_string(max_nodes)
                            + " nodes (raise --max-nodes)");
                nodes.push_back(s);
                return true;
            });
            return nodes;
        }

        auto path_to(const vector<VertexSet> & nodes, const vector<int> & parent, int target) -> ReconfigSequence
        {
            vector<VertexSet> reversed;
            for (int at = target ; at != -1 ; at = parent[at])
                reversed.push_back(nodes[at]);
            return ReconfigSequence{ { reversed.rbegin(), reversed.rend() } };
        }
    }

    ReconfigGraph::ReconfigGraph(vector<VertexSet> nodes, vector<vector<int>> adjacency) :
        _nodes(std::move(nodes)),
        _adjacency(std::move(adjacency))
    {
        for (size_t i = 0 ; i < _nodes.size() ; ++i)
            _index.emplace(_nodes[i], int(i));
    }

    auto ReconfigGraph::edge_count() const -> size_t
    {
        size_t total = 0;
        for (auto & a : _adjacency)
            total += a.size();
        return total / 2;
    }

    auto ReconfigGraph::index_of(const VertexSet & s) const -> optional<int>
    {
        if (auto it = _index.find(s) ; it != _index.end())
            return it->second;
        return std::nullopt;
    }

    auto ReconfigGraph::components() const -> vector<int>
    {
        vector<int> label(_nodes.size(), -1);
        int next = 0;
        for (size_t root = 0 ; root < _nodes.size() ; ++root) {
            if (label[root] != -1)
                continue;
            label[root] = next;
            vector<int> stack{ int(root) };
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto w : _adjacency[v])
                    if (label[w] == -1) {
                        label[w] = next;
                        stack.push_back(w);
                    }
            }
            ++next;
        }
        return label;
    }

    auto ReconfigGraph::distances_from(int source) const -> vector<int>
    {
        vector<int> distance(_nodes.size(), -1);
        distance[source] = 0;
        std::deque<int> queue{ source };
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (auto w : _adjacency[v])
                if (distance[w] == -1) {
                    distance[w] = distance[v] + 1;
                    queue.push_back(w);
                }
        }
        return distance;
    }

    auto ReconfigGraph::shortest_path(int source, int target) const -> optional<ReconfigSequence>
    {
        vector<int> parent(_nodes.size(), -1);
        vector<char> seen(_nodes.size(), 0);
        seen[source] = 1;
        std::deque<int> queue{ source };
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (v == target)
                return path_to(_nodes, parent, target);
            for (auto w : _adjacency[v])
                if (! seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
        return std::nullopt;
    }

    auto build_reconfig_graph(const Graph & g, const Graph & h, const Rule & rule, const SearchLimits & limits) -> ReconfigGraph
    {
        auto nodes = collect_nodes(g, h, limits.max_nodes);

        vector<Bits> bits;
        bits.reserve(nodes.size());
        for (auto & s : nodes)
            bits.push_back(to_bits(g.words(), s));

        PairTester test{ g, rule };
        vector<vector<int>> later(nodes.size());
        detail::parallel_for(nodes.size(), limits.workers, [&] (size_t i) {
            for (size_t j = i + 1 ; j < nodes.size() ; ++j)
                if (test(nodes[i], bits[i], nodes[j], bits[j]))
                    later[i].push_back(int(j));
        });

        vector<vector<int>> adjacency(nodes.size());
        for (size_t i = 0 ; i < nodes.size() ; ++i)
            for (auto j : later[i]) {
                adjacency[i].push_back(j);
                adjacency[j].push_back(int(i));
            }

        return ReconfigGraph(std::move(nodes), std::move(adjacency));
    }

    auto solve_bfs(const ReconfigInstance & instance, const SearchLimits & limits) -> Solution
    {
        auto & g = instance.host;
        auto & h = instance.pattern;
        check_vertices(g, instance.source);
        check_vertices(g, instance.target);
        if (! is_isis_set(g, h, instance.source))
            throw InvalidInput("source set is not an H-induced subgraph isomorphic set");
        if (! is_isis_set(g, h, instance.target))
            throw InvalidInput("target set is not an H-induced subgraph isomorphic set");

        Solution result;
        result.stats.solver = "bfs";
        if (instance.source == instance.target) {
            result.reachable = true;
            result.sequence = ReconfigSequence{ { instance.source } };
            return result;
        }

        auto nodes = collect_nodes(g, h, limits.max_nodes);
        result.stats.nodes = nodes.size();

        int source = -1, target = -1;
        for (size_t i = 0 ; i < nodes.size() ; ++i) {
            if (nodes[i] == instance.source)
                source = int(i);
            if (nodes[i] == instance.target)
                target = int(i);
        }

        vector<Bits> bits;
        bits.reserve(nodes.size());
        for (auto & s : nodes)
            bits.push_back(to_bits(g.words(), s));

        PairTester test{ g, instance.rule };
        vector<int> parent(nodes.size(), -1);
        vector<char> seen(nodes.size(), 0);
        seen[source] = 1;
        std::deque<int> queue{ source };
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            ++result.stats.expanded;
            for (size_t w = 0 ; w < nodes.size() ; ++w) {
                if (seen[w] || ! test(nodes[v], bits[v], nodes[w], bits[w]))
                    continue;
                ++result.stats.edges;
                seen[w] = 1;
                parent[w] = v;
                if (int(w) == target) {
                    result.reachable = true;
                    result.sequence = path_to(nodes, parent, target);
                    return result;
                }
                queue.push_back(int(w));
            }
        }
        return result;
    }

    auto WordInstance::is_word(const vector<int> & w) const -> bool
    {
        for (auto c : w)
            if (c < 0 || c >= int(sigma.size()))
                return false;
        for (size_t i = 0 ; i + 1 < w.size() ; ++i)
            if (! relation.contains({ w[i], w[i + 1] }))
                return false;
        return true;
    }

    auto WordInstance::validate() const -> void
    {
        for (size_t i = 0 ; i < sigma.size() ; ++i)
            for (size_t j = i + 1 ; j < sigma.size() ; ++j)
                if (sigma[i] == sigma[j])
                    throw InvalidInput("repeated symbol '" + sigma[i] + "'");
        for (auto [a, b] : relation)
            if (a < 0 || b < 0 || a >= int(sigma.size()) || b >= int(sigma.size()))
                throw InvalidInput("relation pair refers to an unknown symbol");
        if (source.size() != target.size())
            throw InvalidInput("words differ in length");
        if (! is_word(source))
            throw InvalidInput("source is not a W-word");
        if (! is_word(target))
            throw InvalidInput("target is not a W-word");
    }

    auto WordInstance::symbol_index(const string & name) const -> optional<int>
    {
        for (size_t i = 0 ; i < sigma.size() ; ++i)
            if (sigma[i] == name)
                return int(i);
        return std::nullopt;
    }

    auto word_reachability(const WordInstance & w, size_t max_states) -> bool
    {
        w.validate();
        if (w.source == w.target)
            return true;

        auto fits = [&] (const vector<int> & word, size_t i) {
            if (i > 0 && ! w.relation.contains({ word[i - 1], word[i] }))
                return false;
            if (i + 1 < word.size() && ! w.relation.contains({ word[i], word[i + 1] }))
                return false;
            return true;
        };

        std::map<vector<int>, char> seen{ { w.source, 1 } };
        std::deque<vector<int>> queue{ w.source };
        while (! queue.empty()) {
            auto word = std::move(queue.front());
            queue.pop_front();
            for (size_t i = 0 ; i < word.size() ; ++i) {
                int original = word[i];
                for (int c = 0 ; c < int(w.sigma.size()) ; ++c) {
                    if (c == original)
                        continue;
                    word[i] = c;
                    if (fits(word, i) && ! seen.contains(word)) {
                        if (word == w.target)
                            return true;
                        if (seen.size() >= max_states)
                            throw ResourceLimit("word reachability exceeded " + std::to_string(max_states) + " states");
                        seen.emplace(word, 1);
                        queue.push_back(word);
                    }
                }
                word[i] = original;
            }
        }
        return false;
    }

    auto max_balanced_biclique_at_least(const Graph & g, const VertexSet & side, int b) -> optional<Biclique>
    {
        check_vertices(g, side);
        vector<Vertex> other_members;
        for (Vertex v = 0 ; v < g.size() ; ++v)
            if (! side.contains(v))
                other_members.push_back(v);
        VertexSet other(std::move(other_members));

        for (auto [u, v] : g.edges())
            if (side.contains(u) == side.contains(v))
                throw InvalidInput("edge " + std::to_string(u) + "-" + std::to_string(v) + " lies inside one side");

        if (b <= 0)
            return Biclique{ };

        bool flip = other.size() < side.size();
        auto & choose_from = flip ? other : side;
        auto & meet_in = flip ? side : other;
        if (int(choose_from.size()) < b || int(meet_in.size()) < b)
            return std::nullopt;

        vector<size_t> pick(b);
        for (int i = 0 ; i < b ; ++i)
            pick[i] = size_t(i);

        while (true) {
            vector<Vertex> common;
            for (auto y : meet_in) {
                bool all = true;
                for (auto p : pick)
                    if (! g.adjacent(choose_from[p], y)) {
                        all = false;
                        break;
                    }
                if (all)
                    common.push_back(y);
            }
            if (int(common.size()) >= b) {
                vector<Vertex> chosen;
                for (auto p : pick)
                    chosen.push_back(choose_from[p]);
                common.resize(b);
                VertexSet x(std::move(chosen)), y(std::move(common));
                return flip ? Biclique{ y, x } : Biclique{ x, y };
            }

            // next combination in lexicographic order
            int i = b - 1;
            while (i >= 0 && pick[i] == choose_from.size() - size_t(b - i))
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1 ; j < b ; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        return std::nullopt;
    }
}
