/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <reconf/rules.hh>
#include <reconf/analysis.hh>
#include <reconf/errors.hh>
#include <reconf/isomorphism.hh>

#include <functional>

using std::size_t;
using std::string;
using std::vector;

namespace reconf
{
    Rule::Rule(RuleKind kind, int k) :
        _kind(kind),
        _k(k)
    {
        if (k < 1)
            throw InvalidInput("rule budget k must be at least 1, got " + std::to_string(k));
    }

    auto to_string(const Rule & rule) -> string
    {
        return string(rule.kind() == RuleKind::Jump ? "tj " : "ts ") + std::to_string(rule.k());
    }

    namespace
    {
        // Kuhn's augmenting paths; left and right are the moved-from and
        // moved-to vertices.
        auto has_perfect_matching(const Graph & g, const VertexSet & left, const VertexSet & right) -> bool
        {
            vector<int> match_right(right.size(), -1);
            vector<char> visited;

            std::function<bool (size_t)> augment = [&] (size_t l) -> bool {
                for (size_t r = 0 ; r < right.size() ; ++r) {
                    if (visited[r] || ! g.adjacent(left[l], right[r]))
                        continue;
                    visited[r] = 1;
                    if (match_right[r] == -1 || augment(size_t(match_right[r]))) {
                        match_right[r] = int(l);
                        return true;
                    }
                }
                return false;
            };

            for (size_t l = 0 ; l < left.size() ; ++l) {
                visited.assign(right.size(), 0);
                if (! augment(l))
                    return false;
            }
            return true;
        }
    }

    auto adjacent(const Graph & g, const VertexSet & s, const VertexSet & t, const Rule & rule) -> bool
    {
        if (s.size() != t.size())
            throw InvalidInput("token sets differ in size: " + std::to_string(s.size()) + " vs " + std::to_string(t.size()));

        if (difference_size(s, t) > size_t(rule.k()))
            return false;
        if (rule.kind() == RuleKind::Jump)
            return true;

        return has_perfect_matching(g, set_difference(s, t), set_difference(t, s));
    }

    auto verify_sequence(const ReconfigInstance & instance, const ReconfigSequence & sequence) -> SequenceCheck
    {
        auto fail = [] (int index, string reason) {
            return SequenceCheck{ false, index, std::move(reason) };
        };

        if (sequence.steps.empty())
            return fail(0, "empty sequence");

        auto & g = instance.host;
        size_t size = size_t(instance.pattern.size());
        for (size_t i = 0 ; i < sequence.steps.size() ; ++i) {
            auto & step = sequence.steps[i];
            for (auto v : step)
                if (! g.contains(v))
                    return fail(int(i), "vertex " + std::to_string(v) + " is not in the host graph");
            if (step.size() != size)
                return fail(int(i), "set has " + std::to_string(step.size()) + " vertices, pattern has " + std::to_string(size));
            if (i == 0 && step != instance.source)
                return fail(0, "sequence does not start at the source set");
            if (! is_isis_set(g, instance.pattern, step))
                return fail(int(i), "not an H-induced subgraph isomorphic set");
            if (i > 0 && ! adjacent(g, sequence.steps[i - 1], step, instance.rule))
                return fail(int(i), "not adjacent to the previous set under " + to_string(instance.rule));
        }

        if (sequence.steps.back() != instance.target)
            return fail(int(sequence.steps.size()) - 1, "sequence does not end at the target set");

        return { };
    }

    auto kts_step_to_ts(const Graph & g, const VertexSet & i, const VertexSet & j) -> ReconfigSequence
    {
        check_vertices(g, i);
        check_vertices(g, j);
        if (i.size() != j.size())
            throw InvalidInput("token sets differ in size");
        if (! is_independent(g, i) || ! is_independent(g, j))
            throw InvalidInput("k-TS conversion needs independent sets");

        ReconfigSequence result{ { i } };
        VertexSet current = i;
        while (current != j) {
            auto leaving = set_difference(current, j);
            auto entering = set_difference(j, current);

            Vertex chosen = -1, partner = -1;
            for (auto v : entering) {
                Vertex only = -1;
                int count = 0;
                for (auto u : leaving)
                    if (g.adjacent(u, v)) {
                        ++count;
                        only = u;
                    }
                if (count == 1) {
                    chosen = v;
                    partner = only;
                    break;
                }
            }

            if (chosen == -1)
                throw PreconditionViolation("no vertex of J\\I has exactly one neighbour in I\\J between "
                        + to_string(current) + " and " + to_string(j) + " (even hole or non-adjacent step)");

            current = current.without(partner).with(chosen);
            result.steps.push_back(current);
        }
        return result;
    }

    auto kts_sequence_to_ts(const Graph & g, const ReconfigSequence & sequence) -> ReconfigSequence
    {
        if (auto holes = find_holes(g, Parity::Even, true) ; ! holes.holes.empty()) {
            string cycle;
            for (auto v : holes.holes.front())
                cycle += (cycle.empty() ? "" : " ") + std::to_string(v);
            throw PreconditionViolation("graph has an even hole: " + cycle);
        }

        if (sequence.steps.empty())
            return sequence;

        ReconfigSequence result{ { sequence.steps.front() } };
        for (size_t s = 1 ; s < sequence.steps.size() ; ++s) {
            auto part = kts_step_to_ts(g, sequence.steps[s - 1], sequence.steps[s]);
            result.steps.insert(result.steps.end(), part.steps.begin() + 1, part.steps.end());
        }
        return result;
    }
}
