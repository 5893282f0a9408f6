/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <reconf/formats.hh>
#include <reconf/errors.hh>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

using std::string;
using std::vector;

namespace reconf
{
    namespace
    {
        struct Line
        {
            int number;
            vector<string> tokens;
        };

        // Non-comment lines, split on whitespace. Blank lines are kept only
        // when asked for (empty sequence steps are blank).
        auto tokenise(std::istream & in, bool keep_blank = false) -> vector<Line>
        {
            vector<Line> lines;
            string text;
            int number = 0;
            while (std::getline(in, text)) {
                ++number;
                std::istringstream words(text);
                vector<string> tokens;
                for (string word ; words >> word ; )
                    tokens.push_back(word);
                if (tokens.empty() ? ! keep_blank : tokens[0] == "c")
                    continue;
                lines.push_back(Line{ number, std::move(tokens) });
            }
            return lines;
        }

        auto integer(const Line & line, const string & token, const string & what) -> long
        {
            long value = 0;
            auto [end, error] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (error != std::errc() || end != token.data() + token.size())
                throw ParseError(line.number, "expected an integer for " + what + ", got '" + token + "'");
            return value;
        }

        auto parse_graph(const vector<Line> & lines, size_t skip = 0) -> Graph
        {
            if (lines.empty())
                throw ParseError(0, "missing 'p graph <n> <m>' header");
            auto & header = lines[0];
            if (header.tokens.size() - skip != 4 || header.tokens[skip] != "p" || header.tokens[skip + 1] != "graph")
                throw ParseError(header.number, "expected 'p graph <n> <m>'");
            long n = integer(header, header.tokens[skip + 2], "the vertex count");
            long m = integer(header, header.tokens[skip + 3], "the edge count");
            if (n < 0 || m < 0)
                throw ParseError(header.number, "negative count in header");
            if (n > 1'000'000)
                throw ParseError(header.number, "too many vertices");

            vector<Edge> edges;
            std::set<Edge> seen;
            for (size_t i = 1 ; i < lines.size() ; ++i) {
                auto & line = lines[i];
                if (line.tokens.size() - skip != 3 || line.tokens[skip] != "e")
                    throw ParseError(line.number, "expected 'e <u> <v>'");
                long u = integer(line, line.tokens[skip + 1], "an edge endpoint");
                long v = integer(line, line.tokens[skip + 2], "an edge endpoint");
                if (u < 1 || u > n || v < 1 || v > n)
                    throw ParseError(line.number, "edge endpoint out of range 1.." + std::to_string(n));
                if (u == v)
                    throw ParseError(line.number, "self-loop on vertex " + std::to_string(u));
                Edge e{ int(std::min(u, v)) - 1, int(std::max(u, v)) - 1 };
                if (! seen.insert(e).second)
                    throw ParseError(line.number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
                edges.push_back(e);
            }
            if (long(edges.size()) != m)
                throw ParseError(lines.back().number, "header announces " + std::to_string(m) + " edges, found "
                        + std::to_string(edges.size()));
            return Graph(int(n), edges);
        }

        auto parse_set(const Line & line, size_t from, int n) -> VertexSet
        {
            vector<Vertex> members;
            for (size_t i = from ; i < line.tokens.size() ; ++i) {
                long v = integer(line, line.tokens[i], "a vertex");
                if (v < 1 || v > n)
                    throw ParseError(line.number, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
                members.push_back(int(v) - 1);
            }
            VertexSet result(members);
            if (result.size() != members.size())
                throw ParseError(line.number, "repeated vertex");
            return result;
        }

        auto write_set(std::ostream & out, const VertexSet & s) -> void
        {
            bool first = true;
            for (auto v : s) {
                out << (first ? "" : " ") << v + 1;
                first = false;
            }
        }

        auto write_graph_lines(std::ostream & out, const Graph & g, const string & prefix) -> void
        {
            out << prefix << "p graph " << g.size() << " " << g.edge_count() << "\n";
            for (auto [u, v] : g.edges())
                out << prefix << "e " << u + 1 << " " << v + 1 << "\n";
        }

        // Splits lines into the graph part and keyword lines (h, ss, ...).
        struct Sections
        {
            vector<Line> graph;
            vector<Line> pattern;
            vector<Line> keyed;
        };

        auto split_sections(const vector<Line> & lines, const std::set<string> & keys) -> Sections
        {
            Sections result;
            for (auto & line : lines) {
                auto & head = line.tokens[0];
                if (head == "p" || head == "e")
                    result.graph.push_back(line);
                else if (head == "h" && keys.contains("h"))
                    result.pattern.push_back(line);
                else if (keys.contains(head))
                    result.keyed.push_back(line);
                else
                    throw ParseError(line.number, "unexpected line starting '" + head + "'");
            }
            return result;
        }
    }

    auto read_graph(std::istream & in) -> Graph
    {
        return parse_graph(tokenise(in));
    }

    auto write_graph(std::ostream & out, const Graph & g, const vector<string> & comments) -> void
    {
        for (auto & comment : comments)
            out << "c " << comment << "\n";
        if (g.has_labels())
            for (Vertex v = 0 ; v < g.size() ; ++v)
                out << "c v " << v + 1 << " " << g.label(v) << "\n";
        write_graph_lines(out, g, "");
    }

    auto read_instance(std::istream & in) -> ReconfigInstance
    {
        auto lines = tokenise(in);
        auto sections = split_sections(lines, { "h", "ss", "tt", "r" });
        ReconfigInstance result;
        result.host = parse_graph(sections.graph);
        if (sections.pattern.empty())
            throw ParseError(lines.empty() ? 0 : lines.back().number, "missing pattern ('h p graph ...' lines)");
        result.pattern = parse_graph(sections.pattern, 1);

        bool have_source = false, have_target = false, have_rule = false;
        for (auto & line : sections.keyed) {
            auto & key = line.tokens[0];
            if (key == "ss" || key == "tt") {
                bool & have = key == "ss" ? have_source : have_target;
                if (have)
                    throw ParseError(line.number, "repeated '" + key + "' line");
                have = true;
                (key == "ss" ? result.source : result.target) = parse_set(line, 1, result.host.size());
            }
            else {
                if (have_rule)
                    throw ParseError(line.number, "repeated 'r' line");
                have_rule = true;
                if (line.tokens.size() != 3 || (line.tokens[1] != "tj" && line.tokens[1] != "ts"))
                    throw ParseError(line.number, "expected 'r <tj|ts> <k>'");
                long k = integer(line, line.tokens[2], "k");
                if (k < 1)
                    throw ParseError(line.number, "k must be at least 1");
                result.rule = Rule(line.tokens[1] == "tj" ? RuleKind::Jump : RuleKind::Slide, int(k));
            }
        }
        int last = lines.empty() ? 0 : lines.back().number;
        if (! have_source)
            throw ParseError(last, "missing 'ss' line");
        if (! have_target)
            throw ParseError(last, "missing 'tt' line");
        if (! have_rule)
            throw ParseError(last, "missing 'r' line");
        return result;
    }

    auto write_instance(std::ostream & out, const ReconfigInstance & instance, const vector<string> & comments) -> void
    {
        write_graph(out, instance.host, comments);
        write_graph_lines(out, instance.pattern, "h ");
        out << "ss";
        for (auto v : instance.source)
            out << " " << v + 1;
        out << "\ntt";
        for (auto v : instance.target)
            out << " " << v + 1;
        out << "\nr " << to_string(instance.rule) << "\n";
    }

    auto read_sequence(std::istream & in) -> ReconfigSequence
    {
        auto lines = tokenise(in, true);
        size_t at = 0;
        while (at < lines.size() && lines[at].tokens.empty())
            ++at;
        if (at == lines.size())
            throw ParseError(0, "missing 's reconfig <steps> <set-size>' header");
        auto & header = lines[at];
        if (header.tokens.size() != 4 || header.tokens[0] != "s" || header.tokens[1] != "reconfig")
            throw ParseError(header.number, "expected 's reconfig <steps> <set-size>'");
        long steps = integer(header, header.tokens[2], "the step count");
        long size = integer(header, header.tokens[3], "the set size");
        if (steps < 0 || size < 0)
            throw ParseError(header.number, "negative count in header");

        ReconfigSequence result;
        for (++at ; at < lines.size() ; ++at) {
            auto & line = lines[at];
            if (line.tokens.empty() && (size != 0 || long(result.steps.size()) == steps))
                continue;
            if (long(result.steps.size()) == steps)
                throw ParseError(line.number, "more steps than the header announces");
            vector<Vertex> members;
            for (auto & token : line.tokens) {
                long v = integer(line, token, "a vertex");
                if (v < 1 || v > 1'000'000)
                    throw ParseError(line.number, "vertex " + token + " out of range");
                if (! members.empty() && v - 1 <= members.back())
                    throw ParseError(line.number, "vertices must be listed in strictly ascending order");
                members.push_back(int(v) - 1);
            }
            if (long(members.size()) != size)
                throw ParseError(line.number, "step has " + std::to_string(members.size()) + " vertices, expected "
                        + std::to_string(size));
            result.steps.emplace_back(std::move(members));
        }
        if (long(result.steps.size()) != steps)
            throw ParseError(lines.back().number, "header announces " + std::to_string(steps) + " steps, found "
                    + std::to_string(result.steps.size()));
        return result;
    }

    auto write_sequence(std::ostream & out, const ReconfigSequence & sequence) -> void
    {
        out << "s reconfig " << sequence.steps.size() << " " << (sequence.steps.empty() ? 0 : sequence.steps[0].size()) << "\n";
        for (auto & step : sequence.steps) {
            write_set(out, step);
            out << "\n";
        }
    }

    auto read_word_instance(std::istream & in) -> WordInstance
    {
        auto lines = tokenise(in);
        if (lines.size() < 4)
            throw ParseError(lines.empty() ? 0 : lines.back().number,
                    "a word file needs a header, the symbols, and two words");
        auto & header = lines[0];
        if (header.tokens.size() != 3 || header.tokens[0] != "w")
            throw ParseError(header.number, "expected 'w <symbols> <length>'");
        long sigma = integer(header, header.tokens[1], "the alphabet size");
        long n = integer(header, header.tokens[2], "the word length");
        if (sigma < 1 || n < 1)
            throw ParseError(header.number, "alphabet size and word length must be at least 1");

        WordInstance result;
        if (long(lines[1].tokens.size()) != sigma)
            throw ParseError(lines[1].number, "expected " + std::to_string(sigma) + " symbols");
        result.sigma = lines[1].tokens;
        std::set<string> distinct(result.sigma.begin(), result.sigma.end());
        if (distinct.size() != result.sigma.size())
            throw ParseError(lines[1].number, "repeated symbol");

        auto symbol = [&] (const Line & line, const string & name) {
            auto index = result.symbol_index(name);
            if (! index)
                throw ParseError(line.number, "unknown symbol '" + name + "'");
            return *index;
        };

        for (size_t i = 2 ; i + 2 < lines.size() ; ++i) {
            auto & line = lines[i];
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "expected a relation pair '<symbol> <symbol>'");
            result.relation.emplace(symbol(line, line.tokens[0]), symbol(line, line.tokens[1]));
        }

        bool single_characters = true;
        for (auto & s : result.sigma)
            single_characters = single_characters && s.size() == 1;

        auto word = [&] (const Line & line) {
            vector<string> names = line.tokens;
            if (long(names.size()) != n && names.size() == 1 && single_characters && long(names[0].size()) == n) {
                string joined = names[0];
                names.clear();
                for (char ch : joined)
                    names.emplace_back(1, ch);
            }
            if (long(names.size()) != n)
                throw ParseError(line.number, "expected a word of length " + std::to_string(n));
            vector<int> result_word;
            for (auto & name : names)
                result_word.push_back(symbol(line, name));
            return result_word;
        };
        result.source = word(lines[lines.size() - 2]);
        result.target = word(lines[lines.size() - 1]);

        try {
            result.validate();
        }
        catch (const InvalidInput & e) {
            throw ParseError(lines.back().number, e.what());
        }
        return result;
    }

    auto write_word_instance(std::ostream & out, const WordInstance & w) -> void
    {
        out << "w " << w.sigma.size() << " " << w.source.size() << "\n";
        for (size_t i = 0 ; i < w.sigma.size() ; ++i)
            out << (i ? " " : "") << w.sigma[i];
        out << "\n";
        for (auto [a, b] : w.relation)
            out << w.sigma[a] << " " << w.sigma[b] << "\n";
        for (auto * word : { &w.source, &w.target }) {
            for (size_t i = 0 ; i < word->size() ; ++i)
                out << (i ? " " : "") << w.sigma[(*word)[i]];
            out << "\n";
        }
    }

    auto read_mbb_source(std::istream & in) -> BipartiteSource
    {
        auto lines = tokenise(in);
        auto sections = split_sections(lines, { "a" });
        BipartiteSource result;
        result.graph = parse_graph(sections.graph);
        if (sections.keyed.size() != 1)
            throw ParseError(lines.empty() ? 0 : lines.back().number, "expected exactly one 'a <vertices>' line");
        result.side_a = parse_set(sections.keyed[0], 1, result.graph.size());
        return result;
    }

    auto read_isiso_source(std::istream & in) -> IsisoSource
    {
        auto lines = tokenise(in);
        auto sections = split_sections(lines, { "h" });
        IsisoSource result;
        result.host = parse_graph(sections.graph);
        if (sections.pattern.empty())
            throw ParseError(lines.empty() ? 0 : lines.back().number, "missing pattern ('h p graph ...' lines)");
        result.pattern = parse_graph(sections.pattern, 1);
        return result;
    }

    auto named_graph(const string & name) -> std::optional<Graph>
    {
        if (name.size() < 2)
            return std::nullopt;
        int n = 0;
        auto [end, error] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
        if (error != std::errc() || end != name.data() + name.size() || n < 1 || n > 64)
            return std::nullopt;
        switch (name[0]) {
            case 'K': return complete_graph(n);
            case 'P': return path_graph(n);
            case 'N': return null_graph(n);
            case 'C': if (n >= 3) return cycle_graph(n); else return std::nullopt;
            default: return std::nullopt;
        }
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidInput("cannot read '" + path + "'");
        std::ostringstream content;
        content << in.rdbuf();
        return content.str();
    }
}
