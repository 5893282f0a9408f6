/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RECONF_REDUCTIONS_HH
#define RECONF_REDUCTIONS_HH 1

#include <reconf/bruteforce.hh>
#include <reconf/graph.hh>
#include <reconf/rules.hh>

#include <optional>
#include <string>
#include <vector>

namespace reconf
{
    /// Which part of a gadget a host vertex came from. `layer` and `copy`
    /// are -1 where they do not apply.
    struct Provenance
    {
        std::string part;
        int layer = -1;
        int copy = -1;

        auto to_string() const -> std::string;

        auto operator== (const Provenance &) const -> bool = default;
    };

    struct GadgetParameters
    {
        std::optional<int> t;
        std::optional<int> m;
        std::optional<int> c;
        std::optional<int> k;
        std::optional<int> mu;
    };

    /// The host's labels are the provenance strings.
    struct GadgetOutput
    {
        ReconfigInstance instance;
        std::vector<Provenance> provenance;
        GadgetParameters parameters;
    };

    /// Layers L_1..L_n of |sigma|-cliques, consecutive layers joined where a
    /// symbol pair is forbidden, and every layer vertex replaced by tF with
    /// t = 2^m, 2^m |F| <= k < 2^(m+1) |F|. Tokens sit on the copies of tF
    /// that spell the word. Needs k >= 2|F| and F connected.
    auto reduce_word_to_isisor(const WordInstance & w, const Graph & f, int k, RuleKind kind = RuleKind::Jump) -> GadgetOutput;

    /// Base graph on g', a, b, h*, x, y with the substitutions gp, 2hp, 2hp,
    /// hp, 2hp, 2hp; pattern 4hp; source A u Y, target B u X; rule
    /// (jump, 4|hp| - mu). Needs 1 <= mu <= 2|hp|.
    auto reduce_isiso_to_isisor(const Graph & gp, const Graph & hp, int mu) -> GadgetOutput;

    /// Bipartite complement across (A, B), B duplicated c = |A| - b times,
    /// then independent S and T of size (c+2)b, fully joined to each other,
    /// S to every copy of B and T to A. ISR from S to T under
    /// (jump, (c+1)b). Needs 1 <= b <= |A|; `side_a` is A.
    auto reduce_mbb_to_isr(const Graph & g, const VertexSet & side_a, int b) -> GadgetOutput;
}

#endif
