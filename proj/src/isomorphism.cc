/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <reconf/isomorphism.hh>
#include <reconf/errors.hh>

#include <algorithm>
#include <numeric>
#include <unordered_map>

using std::optional;
using std::size_t;
using std::vector;

namespace reconf
{
    namespace
    {
        auto sorted_degrees(const Graph & g) -> vector<int>
        {
            vector<int> d(g.size());
            for (Vertex v = 0 ; v < g.size() ; ++v)
                d[v] = g.degree(v);
            std::sort(d.begin(), d.end());
            return d;
        }

        auto same_invariants(const Graph & a, const Graph & b) -> bool
        {
            return a.size() == b.size() && a.edge_count() == b.edge_count() && sorted_degrees(a) == sorted_degrees(b);
        }

        // u and v are twins when N(u) \ {v} = N(v) \ {u}; any permutation of a
        // twin class is an automorphism.
        auto twin_classes(const Graph & h) -> vector<int>
        {
            vector<int> cls(h.size(), -1);
            int next = 0;
            for (Vertex u = 0 ; u < h.size() ; ++u) {
                if (cls[u] != -1)
                    continue;
                cls[u] = next;
                for (Vertex v = u + 1 ; v < h.size() ; ++v) {
                    if (cls[v] != -1 || h.degree(u) != h.degree(v))
                        continue;
                    bool twins = true;
                    for (Vertex w = 0 ; w < h.size() && twins ; ++w)
                        if (w != u && w != v && h.adjacent(u, w) != h.adjacent(v, w))
                            twins = false;
                    if (twins)
                        cls[v] = next;
                }
                ++next;
            }
            return cls;
        }

        auto connected_isomorphism(const Graph & a, const Graph & b) -> optional<IsoMapping>;

        struct MappingSearch
        {
            const Graph & g;
            const Graph & h;
            vector<Vertex> order;
            vector<Vertex> anchor;                  // placed h-neighbour to draw candidates from, or -1
            vector<vector<Vertex>> must_follow;     // image(p) < image(x) for p in must_follow[x]
            vector<vector<Vertex>> must_precede;    // image(x) < image(q) for q in must_precede[x]
            vector<Vertex> image;
            vector<char> used;

            MappingSearch(const Graph & host, const Graph & pattern) :
                g(host),
                h(pattern),
                must_follow(pattern.size()),
                must_precede(pattern.size()),
                image(pattern.size(), -1),
                used(host.size(), 0)
            {
                build_order_and_symmetry();
            }

            auto add_less(Vertex p, Vertex q) -> void
            {
                must_precede[p].push_back(q);
                must_follow[q].push_back(p);
            }

            auto build_order_and_symmetry() -> void
            {
                auto comps = components(h);

                // isomorphic components of h, grouped
                vector<int> group(comps.size(), -1);
                vector<vector<size_t>> groups;
                vector<Graph> shapes;
                for (auto & c : comps)
                    shapes.push_back(induced_subgraph(h, c).graph);
                for (size_t i = 0 ; i < comps.size() ; ++i) {
                    if (group[i] != -1)
                        continue;
                    group[i] = int(groups.size());
                    groups.push_back({ i });
                    for (size_t j = i + 1 ; j < comps.size() ; ++j)
                        if (group[j] == -1 && same_invariants(shapes[i], shapes[j]) && connected_isomorphism(shapes[i], shapes[j])) {
                            group[j] = group[i];
                            groups.back().push_back(j);
                        }
                }

                // within a component: highest degree first, then most placed neighbours
                vector<char> placed(h.size(), 0);
                for (auto & grp : groups)
                    for (auto ci : grp) {
                        auto & c = comps[ci];
                        vector<int> links(h.size(), 0);
                        for (size_t step = 0 ; step < c.size() ; ++step) {
                            Vertex best = -1;
                            for (auto v : c) {
                                if (placed[v])
                                    continue;
                                if (best == -1 || links[v] > links[best] || (links[v] == links[best] && h.degree(v) > h.degree(best)))
                                    best = v;
                            }
                            placed[best] = 1;
                            order.push_back(best);
                            for (auto w : h.neighbours(best))
                                ++links[w];
                        }
                    }

                anchor.assign(h.size(), -1);
                vector<char> seen(h.size(), 0);
                for (auto x : order) {
                    for (auto w : h.neighbours(x))
                        if (seen[w]) {
                            anchor[x] = w;
                            break;
                        }
                    seen[x] = 1;
                }

                auto twins = twin_classes(h);
                for (Vertex u = 0 ; u < h.size() ; ++u)
                    for (Vertex v = u + 1 ; v < h.size() ; ++v)
                        if (twins[u] == twins[v]) {
                            add_less(u, v);
                            break;
                        }

                // copies of one component shape are ordered by the smallest
                // image of a corresponding twin class; with twin classes sorted
                // that is the image of the class's smallest vertex
                for (auto & grp : groups) {
                    if (grp.size() < 2)
                        continue;
                    auto & first = comps[grp[0]];
                    Vertex lead = -1;
                    for (auto x : order)
                        if (first.contains(x)) {
                            lead = x;
                            break;
                        }
                    vector<Vertex> representatives;
                    for (auto ci : grp) {
                        auto iso = connected_isomorphism(shapes[grp[0]], shapes[ci]);
                        // iso maps local indices of the first copy to local indices of copy ci
                        Vertex local_lead = Vertex(std::lower_bound(first.begin(), first.end(), lead) - first.begin());
                        Vertex mapped = comps[ci][iso->image[local_lead]];
                        Vertex smallest = mapped;
                        for (auto v : comps[ci])
                            if (twins[v] == twins[mapped])
                                smallest = std::min(smallest, v);
                        representatives.push_back(smallest);
                    }
                    for (size_t i = 0 ; i + 1 < representatives.size() ; ++i)
                        add_less(representatives[i], representatives[i + 1]);
                }
            }

            auto consistent(Vertex x, Vertex c, size_t depth) const -> bool
            {
                if (used[c] || g.degree(c) < h.degree(x))
                    return false;
                for (size_t i = 0 ; i < depth ; ++i) {
                    Vertex q = order[i];
                    if (h.adjacent(x, q) != g.adjacent(c, image[q]))
                        return false;
                }
                for (auto p : must_follow[x])
                    if (image[p] != -1 && ! (image[p] < c))
                        return false;
                for (auto q : must_precede[x])
                    if (image[q] != -1 && ! (c < image[q]))
                        return false;
                return true;
            }

            auto search(size_t depth) -> bool
            {
                if (depth == order.size())
                    return true;

                Vertex x = order[depth];
                auto attempt = [&] (Vertex c) -> bool {
                    if (! consistent(x, c, depth))
                        return false;
                    image[x] = c;
                    used[c] = 1;
                    if (search(depth + 1))
                        return true;
                    used[c] = 0;
                    image[x] = -1;
                    return false;
                };

                if (anchor[x] != -1) {
                    for (auto c : g.neighbours(image[anchor[x]]))
                        if (attempt(c))
                            return true;
                }
                else {
                    for (Vertex c = 0 ; c < g.size() ; ++c)
                        if (attempt(c))
                            return true;
                }
                return false;
            }
        };

        // Plain backtracking without component-level symmetry breaking, which
        // itself needs isomorphism tests between connected components.
        auto connected_isomorphism(const Graph & a, const Graph & b) -> optional<IsoMapping>
        {
            if (! same_invariants(a, b))
                return std::nullopt;

            vector<Vertex> order;
            vector<char> placed(a.size(), 0);
            vector<int> links(a.size(), 0);
            for (int step = 0 ; step < a.size() ; ++step) {
                Vertex best = -1;
                for (Vertex v = 0 ; v < a.size() ; ++v) {
                    if (placed[v])
                        continue;
                    if (best == -1 || links[v] > links[best] || (links[v] == links[best] && a.degree(v) > a.degree(best)))
                        best = v;
                }
                placed[best] = 1;
                order.push_back(best);
                for (auto w : a.neighbours(best))
                    ++links[w];
            }

            vector<Vertex> image(a.size(), -1);
            vector<char> used(b.size(), 0);
            std::function<bool (size_t)> search = [&] (size_t depth) -> bool {
                if (depth == order.size())
                    return true;
                Vertex x = order[depth];
                for (Vertex c = 0 ; c < b.size() ; ++c) {
                    if (used[c] || b.degree(c) != a.degree(x))
                        continue;
                    bool ok = true;
                    for (size_t i = 0 ; i < depth && ok ; ++i)
                        if (a.adjacent(x, order[i]) != b.adjacent(c, image[order[i]]))
                            ok = false;
                    if (! ok)
                        continue;
                    image[x] = c;
                    used[c] = 1;
                    if (search(depth + 1))
                        return true;
                    used[c] = 0;
                }
                image[x] = -1;
                return false;
            };

            if (! search(0))
                return std::nullopt;
            return IsoMapping{ std::move(image) };
        }
    }

    auto find_isis_mapping(const Graph & g, const Graph & h) -> optional<IsoMapping>
    {
        if (h.size() > g.size())
            return std::nullopt;
        if (h.size() == 0)
            return IsoMapping{ };

        MappingSearch search(g, h);
        if (! search.search(0))
            return std::nullopt;
        return IsoMapping{ std::move(search.image) };
    }

    auto find_isis(const Graph & g, const Graph & h) -> optional<VertexSet>
    {
        auto mapping = find_isis_mapping(g, h);
        if (! mapping)
            return std::nullopt;
        return mapping->image_set();
    }

    auto find_isomorphism(const Graph & a, const Graph & b) -> optional<IsoMapping>
    {
        if (! same_invariants(a, b))
            return std::nullopt;

        if (a.edge_count() == 0 || 2 * a.edge_count() == long(a.size()) * (a.size() - 1)) {
            vector<Vertex> identity(a.size());
            std::iota(identity.begin(), identity.end(), 0);
            return IsoMapping{ std::move(identity) };
        }

        auto ca = components(a), cb = components(b);
        if (ca.size() != cb.size())
            return std::nullopt;
        if (ca.size() == 1)
            return connected_isomorphism(a, b);

        // isomorphism is an equivalence, so greedy matching of components suffices
        vector<Vertex> image(a.size(), -1);
        vector<char> taken(cb.size(), 0);
        vector<Graph> shapes_b;
        for (auto & c : cb)
            shapes_b.push_back(induced_subgraph(b, c).graph);
        for (auto & c : ca) {
            auto shape = induced_subgraph(a, c).graph;
            bool matched = false;
            for (size_t j = 0 ; j < cb.size() && ! matched ; ++j) {
                if (taken[j])
                    continue;
                if (auto iso = connected_isomorphism(shape, shapes_b[j])) {
                    taken[j] = 1;
                    matched = true;
                    for (size_t i = 0 ; i < c.size() ; ++i)
                        image[c[i]] = cb[j][iso->image[i]];
                }
            }
            if (! matched)
                return std::nullopt;
        }
        return IsoMapping{ std::move(image) };
    }

    auto is_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        return find_isomorphism(a, b).has_value();
    }

    auto is_isis_set(const Graph & g, const Graph & h, const VertexSet & s) -> bool
    {
        check_vertices(g, s);
        if (int(s.size()) != h.size())
            return false;
        return is_isomorphic(induced_subgraph(g, s).graph, h);
    }

    auto canonical_form(const Graph & g) -> CanonicalForm
    {
        int n = g.size();
        if (n > max_canonical_order)
            throw InvalidInput("canonical forms are limited to " + std::to_string(max_canonical_order) + " vertices");

        std::uint64_t labelled = 0;
        for (int j = 1, bit = 0 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i, ++bit)
                if (g.adjacent(i, j))
                    labelled |= std::uint64_t(1) << bit;

        thread_local std::unordered_map<std::uint64_t, CanonicalForm> memo;
        std::uint64_t key = (std::uint64_t(n) << 56) | labelled;
        if (auto it = memo.find(key) ; it != memo.end())
            return it->second;

        int pairs = n * (n - 1) / 2;
        vector<int> degree_at(n);
        for (int v = 0 ; v < n ; ++v)
            degree_at[v] = g.degree(v);
        std::sort(degree_at.begin(), degree_at.end());

        // position j fixes pairs (0,j)..(j-1,j); earlier pairs are more significant
        std::uint64_t best = ~std::uint64_t(0);
        vector<Vertex> at(n, -1);
        vector<char> used(n, 0);
        std::function<void (int, std::uint64_t)> place = [&] (int j, std::uint64_t value) {
            if (j == n) {
                best = std::min(best, value);
                return;
            }
            int done = j * (j + 1) / 2;
            for (Vertex v = 0 ; v < n ; ++v) {
                if (used[v] || g.degree(v) != degree_at[j])
                    continue;
                std::uint64_t next = value;
                for (int i = 0 ; i < j ; ++i)
                    if (g.adjacent(at[i], v))
                        next |= std::uint64_t(1) << (pairs - 1 - (j * (j - 1) / 2 + i));
                int remaining = pairs - done;
                if (best != ~std::uint64_t(0) && (next >> remaining) > (best >> remaining))
                    continue;
                at[j] = v;
                used[v] = 1;
                place(j + 1, next);
                used[v] = 0;
            }
        };
        place(0, 0);

        CanonicalForm result{ n, n == 0 ? 0 : best };
        if (n <= 1)
            result.bits = 0;
        memo.emplace(key, result);
        return result;
    }

    auto AssortedDecomposition::order() const -> int
    {
        int total = 0;
        for (auto & p : parts)
            total += p.multiplicity * p.shape.size();
        return total;
    }

    auto AssortedDecomposition::largest_part() const -> int
    {
        int result = 0;
        for (auto & p : parts)
            result = std::max(result, p.shape.size());
        return result;
    }

    auto AssortedDecomposition::classify(const Graph & component) const -> optional<size_t>
    {
        optional<CanonicalForm> form;
        if (component.size() <= max_canonical_order)
            form = canonical_form(component);

        for (size_t i = 0 ; i < parts.size() ; ++i) {
            auto & p = parts[i];
            if (p.shape.size() != component.size() || p.shape.edge_count() != component.edge_count())
                continue;
            if (form && p.canonical) {
                if (*form == *p.canonical)
                    return i;
            }
            else if (is_isomorphic(p.shape, component))
                return i;
        }
        return std::nullopt;
    }

    auto AssortedDecomposition::compose(const vector<int> & counts) const -> Graph
    {
        vector<Graph> pieces;
        for (size_t i = 0 ; i < parts.size() && i < counts.size() ; ++i)
            for (int c = 0 ; c < counts[i] ; ++c)
                pieces.push_back(parts[i].shape);
        return disjoint_union(pieces).without_labels();
    }

    auto AssortedDecomposition::multiplicities() const -> vector<int>
    {
        vector<int> result;
        for (auto & p : parts)
            result.push_back(p.multiplicity);
        return result;
    }

    auto decompose_assorted(const Graph & h) -> AssortedDecomposition
    {
        AssortedDecomposition result;
        for (auto & c : components(h)) {
            auto shape = induced_subgraph(h, c).graph.without_labels();
            if (auto i = result.classify(shape)) {
                ++result.parts[*i].multiplicity;
                result.parts[*i].occurrences.push_back(c);
            }
            else {
                optional<CanonicalForm> form;
                if (shape.size() <= max_canonical_order)
                    form = canonical_form(shape);
                result.parts.push_back(ComponentClass{ shape, 1, form, { c } });
            }
        }
        return result;
    }

    namespace
    {
        struct Candidate
        {
            VertexSet members;
            vector<std::uint64_t> inside;       // bitset of members
            vector<std::uint64_t> closed;       // bitset of N[members]
        };

        auto bitset_of(const Graph & g, const VertexSet & s) -> vector<std::uint64_t>
        {
            vector<std::uint64_t> bits(g.words(), 0);
            for (auto v : s)
                bits[v >> 6] |= std::uint64_t(1) << (v & 63);
            return bits;
        }

        auto closed_bitset_of(const Graph & g, const VertexSet & s) -> vector<std::uint64_t>
        {
            auto bits = bitset_of(g, s);
            for (auto v : s) {
                auto row = g.row(v);
                for (int w = 0 ; w < g.words() ; ++w)
                    bits[w] |= row[w];
            }
            return bits;
        }

        auto occurrences_of(const Graph & g, const Graph & shape) -> vector<Candidate>
        {
            vector<Candidate> result;
            optional<CanonicalForm> form;
            if (shape.size() <= max_canonical_order)
                form = canonical_form(shape);

            for_each_connected_set(g, shape.size(), [&] (const VertexSet & x) {
                auto sub = induced_subgraph(g, x).graph;
                bool match = sub.edge_count() == shape.edge_count()
                    && (form ? canonical_form(sub) == *form : is_isomorphic(sub, shape));
                if (match)
                    result.push_back(Candidate{ x, bitset_of(g, x), closed_bitset_of(g, x) });
                return true;
            });

            std::sort(result.begin(), result.end(), [] (const Candidate & a, const Candidate & b) {
                    return a.members < b.members; });
            return result;
        }
    }

    auto for_each_isis(const Graph & g, const Graph & h, const std::function<bool (const VertexSet &)> & visit) -> void
    {
        if (h.size() == 0) {
            visit(VertexSet{ });
            return;
        }
        if (h.size() > g.size())
            return;

        // components of g[S] are pairwise disjoint, non-adjacent, connected
        // occurrences of the components of h, so choose them part by part with
        // increasing candidate indices among copies of one part
        auto decomposition = decompose_assorted(h);
        vector<vector<Candidate>> candidates;
        vector<size_t> slot_part;
        for (size_t i = 0 ; i < decomposition.parts.size() ; ++i) {
            candidates.push_back(occurrences_of(g, decomposition.parts[i].shape));
            if (int(candidates.back().size()) < decomposition.parts[i].multiplicity)
                return;
            for (int c = 0 ; c < decomposition.parts[i].multiplicity ; ++c)
                slot_part.push_back(i);
        }

        vector<std::uint64_t> blocked(g.words(), 0);
        vector<size_t> chosen(slot_part.size(), 0);
        bool stopped = false;

        std::function<void (size_t)> fill = [&] (size_t slot) {
            if (slot == slot_part.size()) {
                vector<Vertex> members;
                for (size_t s = 0 ; s < slot_part.size() ; ++s) {
                    auto & m = candidates[slot_part[s]][chosen[s]].members;
                    members.insert(members.end(), m.begin(), m.end());
                }
                if (! visit(VertexSet(std::move(members))))
                    stopped = true;
                return;
            }

            size_t part = slot_part[slot];
            size_t start = (slot > 0 && slot_part[slot - 1] == part) ? chosen[slot - 1] + 1 : 0;
            auto & pool = candidates[part];
            for (size_t c = start ; c < pool.size() && ! stopped ; ++c) {
                bool clash = false;
                for (int w = 0 ; w < g.words() && ! clash ; ++w)
                    if (pool[c].inside[w] & blocked[w])
                        clash = true;
                if (clash)
                    continue;

                auto saved = blocked;
                for (int w = 0 ; w < g.words() ; ++w)
                    blocked[w] |= pool[c].closed[w];
                chosen[slot] = c;
                fill(slot + 1);
                blocked = std::move(saved);
            }
        };
        fill(0);
    }

    auto enumerate_isis(const Graph & g, const Graph & h) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        for_each_isis(g, h, [&] (const VertexSet & s) {
            result.push_back(s);
            return true;
        });
        return result;
    }
}
