/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RECONF_FORMATS_HH
#define RECONF_FORMATS_HH 1

#include <reconf/bruteforce.hh>
#include <reconf/graph.hh>
#include <reconf/rules.hh>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

// Text formats. Vertices are 1-indexed on disk and 0-indexed in memory.
// Lines starting with `c` are comments. All readers throw ParseError with
// the offending line number.

namespace reconf
{
    /// `p graph <n> <m>` then m lines `e <u> <v>`.
    auto read_graph(std::istream & in) -> Graph;

    /// Comment lines first (one `c ` line each), then the header and edges.
    /// Labels, if any, are written as `c v <vertex> <label>` comments.
    auto write_graph(std::ostream & out, const Graph & g, const std::vector<std::string> & comments = { }) -> void;

    /// A host graph, then the pattern as `h p graph ..` / `h e u v` lines,
    /// `ss <vertices>`, `tt <vertices>` and `r <tj|ts> <k>`.
    auto read_instance(std::istream & in) -> ReconfigInstance;

    auto write_instance(std::ostream & out, const ReconfigInstance & instance, const std::vector<std::string> & comments = { }) -> void;

    /// `s reconfig <steps> <set-size>`, then one line per step.
    auto read_sequence(std::istream & in) -> ReconfigSequence;

    auto write_sequence(std::ostream & out, const ReconfigSequence & sequence) -> void;

    /// `w <|sigma|> <n>`, the symbols, relation pairs one per line, and then
    /// the two words. A word is its symbols separated by spaces; when every
    /// symbol is a single character it may also be written unbroken.
    auto read_word_instance(std::istream & in) -> WordInstance;

    auto write_word_instance(std::ostream & out, const WordInstance & w) -> void;

    /// A bipartite graph plus one `a <vertices>` line naming side A.
    struct BipartiteSource
    {
        Graph graph;
        VertexSet side_a;
    };

    auto read_mbb_source(std::istream & in) -> BipartiteSource;

    /// The host gp, with the pattern hp given by `h` lines.
    struct IsisoSource
    {
        Graph host;
        Graph pattern;
    };

    auto read_isiso_source(std::istream & in) -> IsisoSource;

    /// Named unit graphs: K<n>, P<n>, C<n> (n >= 3) and N<n> (edgeless).
    auto named_graph(const std::string & name) -> std::optional<Graph>;

    auto read_file(const std::string & path) -> std::string;
}

#endif
