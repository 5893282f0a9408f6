/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RECONF_RULES_HH
#define RECONF_RULES_HH 1

#include <reconf/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace reconf
{
    enum class RuleKind
    {
        Jump,
        Slide
    };

    /// k-TJ or k-TS: at most k tokens move per step (k >= 1).
    class Rule
    {
        public:
            Rule(RuleKind kind, int k);

            static auto jump(int k) -> Rule
            {
                return Rule(RuleKind::Jump, k);
            }

            static auto slide(int k) -> Rule
            {
                return Rule(RuleKind::Slide, k);
            }

            auto kind() const -> RuleKind
            {
                return _kind;
            }

            auto k() const -> int
            {
                return _k;
            }

            auto operator== (const Rule &) const -> bool = default;

        private:
            RuleKind _kind;
            int _k;
    };

    /// "tj 2" / "ts 1", as used in instance files.
    auto to_string(const Rule & rule) -> std::string;

    struct ReconfigSequence
    {
        std::vector<VertexSet> steps;

        /// Number of moves, i.e. one less than the number of sets.
        auto length() const -> int
        {
            return steps.empty() ? 0 : int(steps.size()) - 1;
        }

        auto operator== (const ReconfigSequence &) const -> bool = default;
    };

    /// (host, pattern, source, target, rule). ISR is the case of an edgeless
    /// pattern.
    struct ReconfigInstance
    {
        Graph host;
        Graph pattern;
        VertexSet source;
        VertexSet target;
        Rule rule = Rule::jump(1);

        auto operator== (const ReconfigInstance &) const -> bool = default;
    };

    struct SolverStats
    {
        std::string solver;
        std::size_t nodes = 0;
        std::size_t edges = 0;
        std::size_t expanded = 0;
    };

    struct Solution
    {
        bool reachable = false;
        std::optional<ReconfigSequence> sequence;
        SolverStats stats;
    };

    /// Whether s can become t in one step. Under slide, s \ t must be matched
    /// perfectly onto t \ s along edges of g; the moves happen at once, so
    /// no intermediate set is required. Unequal sizes throw InvalidInput.
    auto adjacent(const Graph & g, const VertexSet & s, const VertexSet & t, const Rule & rule) -> bool;

    struct SequenceCheck
    {
        bool valid = true;
        int failed_index = -1;
        std::string reason;

        explicit operator bool() const
        {
            return valid;
        }
    };

    /// Never throws for bad sequences; reports the first failing index.
    auto verify_sequence(const ReconfigInstance & instance, const ReconfigSequence & sequence) -> SequenceCheck;

    /// Splits one k-TS step between independent sets i and j of an
    /// even-hole-free graph into |i \ j| single slides. Each slide moves the
    /// unique I\J-neighbour u of the smallest v in J\I that has exactly one
    /// such neighbour. Throws PreconditionViolation when no such v exists.
    auto kts_step_to_ts(const Graph & g, const VertexSet & i, const VertexSet & j) -> ReconfigSequence;

    /// Expands every step of a k-TS sequence of independent sets. Checks
    /// that g is even-hole-free first.
    auto kts_sequence_to_ts(const Graph & g, const ReconfigSequence & sequence) -> ReconfigSequence;
}

#endif
