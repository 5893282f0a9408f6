/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <reconf/reductions.hh>
#include <reconf/errors.hh>
#include <reconf/isomorphism.hh>

using std::string;
using std::vector;

namespace reconf
{
    auto Provenance::to_string() const -> string
    {
        string result = part;
        if (layer >= 0)
            result += ":" + std::to_string(layer);
        if (copy >= 0)
            result += "." + std::to_string(copy);
        return result;
    }

    namespace
    {
        auto block(const Substitution & s, int i) -> VertexSet
        {
            vector<Vertex> members;
            for (Vertex v = s.offsets[i] ; v < s.offsets[i + 1] ; ++v)
                members.push_back(v);
            return VertexSet(std::move(members));
        }

        auto labelled(const Graph & g, const vector<Provenance> & provenance) -> Graph
        {
            vector<string> labels;
            for (auto & p : provenance)
                labels.push_back(p.to_string());
            return g.with_labels(std::move(labels));
        }
    }

    auto reduce_word_to_isisor(const WordInstance & w, const Graph & f, int k, RuleKind kind) -> GadgetOutput
    {
        w.validate();
        if (f.size() == 0 || ! is_connected(f))
            throw InvalidInput("the pattern unit F must be a nonempty connected graph");
        if (k < 2 * f.size())
            throw InvalidInput("k = " + std::to_string(k) + " is below 2|V(F)| = " + std::to_string(2 * f.size()));
        if (w.sigma.empty())
            throw InvalidInput("the alphabet is empty");

        int m = 0;
        while ((long(2) << m) * f.size() <= k)
            ++m;
        int t = 1 << m;

        int sigma = int(w.sigma.size()), n = int(w.source.size());
        vector<Edge> edges;
        for (int i = 0 ; i < n ; ++i)
            for (int j = 0 ; j < sigma ; ++j) {
                for (int j2 = j + 1 ; j2 < sigma ; ++j2)
                    edges.emplace_back(i * sigma + j, i * sigma + j2);
                if (i + 1 < n)
                    for (int j2 = 0 ; j2 < sigma ; ++j2)
                        if (! w.relation.contains({ j, j2 }))
                            edges.emplace_back(i * sigma + j, (i + 1) * sigma + j2);
            }
        Graph base(n * sigma, edges);

        auto unit = copies(f, t);
        vector<Graph> parts(n * sigma, unit);
        auto sub = substitute(base, parts);

        vector<Provenance> provenance(sub.graph.size());
        for (int i = 0 ; i < n ; ++i)
            for (int j = 0 ; j < sigma ; ++j)
                for (Vertex v = sub.offsets[i * sigma + j] ; v < sub.offsets[i * sigma + j + 1] ; ++v)
                    provenance[v] = Provenance{ w.sigma[j], i, (v - sub.offsets[i * sigma + j]) / f.size() };

        auto tokens = [&] (const vector<int> & word) {
            vector<Vertex> members;
            for (int i = 0 ; i < n ; ++i)
                for (auto v : block(sub, i * sigma + word[i]))
                    members.push_back(v);
            return VertexSet(std::move(members));
        };

        GadgetOutput result;
        result.instance.host = labelled(sub.graph, provenance);
        result.instance.pattern = copies(f, n * t).without_labels();
        result.instance.source = tokens(w.source);
        result.instance.target = tokens(w.target);
        result.instance.rule = Rule(kind, k);
        result.provenance = std::move(provenance);
        result.parameters.t = t;
        result.parameters.m = m;
        result.parameters.k = k;
        return result;
    }

    auto reduce_isiso_to_isisor(const Graph & gp, const Graph & hp, int mu) -> GadgetOutput
    {
        if (hp.size() == 0)
            throw InvalidInput("the pattern hp must have at least one vertex");
        if (mu < 1 || mu > 2 * hp.size())
            throw InvalidInput("mu must satisfy 1 <= mu <= 2|V(hp)| = " + std::to_string(2 * hp.size()));

        // g', a, b, h*, x, y
        Graph base(6, { { 0, 1 }, { 0, 2 }, { 1, 2 }, { 1, 3 }, { 2, 3 }, { 1, 4 }, { 2, 5 }, { 4, 5 } });
        auto doubled = copies(hp, 2);
        vector<Graph> parts{ gp.without_labels(), doubled, doubled, hp.without_labels(), doubled, doubled };
        auto sub = substitute(base, parts);

        const vector<string> names{ "g'", "A", "B", "h*", "X", "Y" };
        vector<Provenance> provenance(sub.graph.size());
        for (int i = 0 ; i < 6 ; ++i)
            for (Vertex v = sub.offsets[i] ; v < sub.offsets[i + 1] ; ++v)
                provenance[v] = Provenance{ names[i], -1, i == 0 ? -1 : (v - sub.offsets[i]) / hp.size() };

        int k = 4 * hp.size() - mu;
        GadgetOutput result;
        result.instance.host = labelled(sub.graph, provenance);
        result.instance.pattern = copies(hp, 4).without_labels();
        result.instance.source = set_union(block(sub, 1), block(sub, 5));
        result.instance.target = set_union(block(sub, 2), block(sub, 4));
        result.instance.rule = Rule::jump(k);
        result.provenance = std::move(provenance);
        result.parameters.k = k;
        result.parameters.mu = mu;
        return result;
    }

    auto reduce_mbb_to_isr(const Graph & g, const VertexSet & side_a, int b) -> GadgetOutput
    {
        check_vertices(g, side_a);
        for (auto [u, v] : g.edges())
            if (side_a.contains(u) == side_a.contains(v))
                throw InvalidInput("edge " + std::to_string(u + 1) + " " + std::to_string(v + 1) + " lies inside one side");
        if (b < 1 || b > int(side_a.size()))
            throw InvalidInput("b must satisfy 1 <= b <= |A| = " + std::to_string(side_a.size()));

        vector<Vertex> b_members;
        for (Vertex v = 0 ; v < g.size() ; ++v)
            if (! side_a.contains(v))
                b_members.push_back(v);
        VertexSet side_b(std::move(b_members));

        vector<Edge> complement_edges;
        for (auto u : side_a)
            for (auto v : side_b)
                if (! g.adjacent(u, v))
                    complement_edges.emplace_back(std::min(u, v), std::max(u, v));
        Graph star(g.size(), complement_edges);

        int c = int(side_a.size()) - b;
        auto dup = duplicate_set(star, side_b, c);

        int half = (c + 2) * b;
        int first_s = dup.graph.size(), first_t = first_s + half, n = first_t + half;
        auto edges = dup.graph.edges();
        for (int i = 0 ; i < half ; ++i)
            for (int j = 0 ; j < half ; ++j)
                edges.emplace_back(first_s + i, first_t + j);
        for (int i = 0 ; i < half ; ++i) {
            for (Vertex v = 0 ; v < dup.graph.size() ; ++v)
                if (! side_a.contains(dup.original[v]))
                    edges.emplace_back(v, first_s + i);
            for (auto v : side_a)
                edges.emplace_back(v, first_t + i);
        }
        Graph host(n, edges);

        vector<Provenance> provenance(n);
        for (Vertex v = 0 ; v < g.size() ; ++v)
            provenance[v] = side_a.contains(v) ? Provenance{ "A", -1, -1 } : Provenance{ "B", 0, -1 };
        for (Vertex v = g.size() ; v < first_s ; ++v)
            provenance[v] = Provenance{ "B", 1 + (v - g.size()) / int(side_b.size()), -1 };
        vector<Vertex> s_members, t_members;
        for (int i = 0 ; i < half ; ++i) {
            provenance[first_s + i] = Provenance{ "S", -1, i };
            provenance[first_t + i] = Provenance{ "T", -1, i };
            s_members.push_back(first_s + i);
            t_members.push_back(first_t + i);
        }

        GadgetOutput result;
        result.instance.host = labelled(host, provenance);
        result.instance.pattern = null_graph(half);
        result.instance.source = VertexSet(std::move(s_members));
        result.instance.target = VertexSet(std::move(t_members));
        result.instance.rule = Rule::jump((c + 1) * b);
        result.provenance = std::move(provenance);
        result.parameters.c = c;
        result.parameters.k = (c + 1) * b;
        result.parameters.mu = b;
        return result;
    }
}
