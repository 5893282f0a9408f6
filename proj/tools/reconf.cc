/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <reconf/analysis.hh>
#include <reconf/bruteforce.hh>
#include <reconf/errors.hh>
#include <reconf/formats.hh>
#include <reconf/isomorphism.hh>
#include <reconf/reductions.hh>
#include <reconf/rules.hh>
#include <reconf/xp.hh>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace reconf;

using std::cerr;
using std::cout;
using std::string;
using std::vector;

namespace
{
    struct Globals
    {
        std::size_t max_nodes = default_max_nodes;
        std::size_t max_states = default_max_states;
        int workers = 1;
    };

    auto one_indexed(const VertexSet & s) -> string
    {
        string result;
        for (auto v : s)
            result += (result.empty() ? "" : " ") + std::to_string(v + 1);
        return result;
    }

    template <typename Reader_>
    auto load(const string & path, Reader_ reader)
    {
        std::istringstream in(read_file(path));
        try {
            return reader(in);
        }
        catch (const ParseError & e) {
            throw InvalidInput(path + ": " + e.what());
        }
    }

    auto write_to(const string & path, const std::function<void (std::ostream &)> & writer) -> void
    {
        if (path.empty() || path == "-") {
            writer(cout);
            return;
        }
        std::ofstream out(path);
        if (! out)
            throw InvalidInput("cannot write '" + path + "'");
        writer(out);
        if (! out)
            throw InvalidInput("failed writing '" + path + "'");
    }

    auto unit_graph(const string & name) -> Graph
    {
        if (auto g = named_graph(name))
            return *g;
        return load(name, [] (std::istream & in) { return read_graph(in); });
    }

    auto elapsed_ms(std::chrono::steady_clock::time_point since) -> long
    {
        return long(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - since).count());
    }

    struct SolveArgs
    {
        string instance;
        string solver = "bfs";
        int mu = 0;
        string sequence_out;
    };

    auto cmd_solve(const Globals & globals, const SolveArgs & args) -> int
    {
        auto start = std::chrono::steady_clock::now();
        auto instance = load(args.instance, [] (std::istream & in) { return read_instance(in); });

        Solution solution;
        int mu = -1;
        if (args.solver == "xp") {
            mu = xp_parameter(instance);
            if (args.mu != 0 && args.mu != mu)
                throw InvalidInput("--mu " + std::to_string(args.mu) + " does not match |V(H)| - k = " + std::to_string(mu));
            solution = solve_xp(instance, backtracking_oracle(), XpOptions{ globals.max_nodes, globals.workers });
        }
        else {
            if (args.mu != 0)
                throw InvalidInput("--mu only applies to --solver xp");
            solution = solve_bfs(instance, SearchLimits{ globals.max_nodes, globals.workers });
        }

        if (solution.reachable) {
            // never emit an unchecked yes
            if (! solution.sequence || ! verify_sequence(instance, *solution.sequence))
                throw std::logic_error("solver returned an invalid sequence");
        }

        cout << "v1\n";
        cout << "command: solve\n";
        cout << "solver: " << solution.stats.solver << "\n";
        cout << "verdict: " << (solution.reachable ? "yes" : "no") << "\n";
        cout << "rule: " << to_string(instance.rule) << "\n";
        cout << "host-vertices: " << instance.host.size() << "\n";
        cout << "host-edges: " << instance.host.edge_count() << "\n";
        cout << "pattern-vertices: " << instance.pattern.size() << "\n";
        if (mu >= 0)
            cout << "mu: " << mu << "\n";
        cout << "nodes: " << solution.stats.nodes << "\n";
        cout << "edges: " << solution.stats.edges << "\n";
        cout << "expanded: " << solution.stats.expanded << "\n";
        cout << "elapsed-ms: " << elapsed_ms(start) << "\n";
        if (solution.reachable) {
            cout << "length: " << solution.sequence->length() << "\n";
            for (auto & step : solution.sequence->steps)
                cout << "step: " << one_indexed(step) << "\n";
            if (! args.sequence_out.empty())
                write_to(args.sequence_out, [&] (std::ostream & out) { write_sequence(out, *solution.sequence); });
        }
        return solution.reachable ? 0 : 1;
    }

    auto cmd_verify(const string & instance_path, const string & sequence_path) -> int
    {
        auto instance = load(instance_path, [] (std::istream & in) { return read_instance(in); });
        auto sequence = load(sequence_path, [] (std::istream & in) { return read_sequence(in); });
        auto check = verify_sequence(instance, sequence);

        cout << "v1\n";
        cout << "command: verify\n";
        cout << "verdict: " << (check ? "valid" : "invalid") << "\n";
        cout << "rule: " << to_string(instance.rule) << "\n";
        cout << "length: " << sequence.length() << "\n";
        if (! check) {
            cout << "failed-index: " << check.failed_index << "\n";
            cout << "reason: " << check.reason << "\n";
        }
        return check ? 0 : 1;
    }

    struct ReduceArgs
    {
        string kind;
        string source;
        string unit = "K1";
        int k = 0;
        string rule = "tj";
        int mu = 0;
        int b = 0;
        string output;
    };

    auto cmd_reduce(const ReduceArgs & args) -> int
    {
        GadgetOutput gadget;
        if (args.kind == "word") {
            auto w = load(args.source, [] (std::istream & in) { return read_word_instance(in); });
            auto f = unit_graph(args.unit);
            int k = args.k == 0 ? 2 * f.size() : args.k;
            gadget = reduce_word_to_isisor(w, f, k, args.rule == "ts" ? RuleKind::Slide : RuleKind::Jump);
        }
        else if (args.kind == "isiso") {
            auto source = load(args.source, [] (std::istream & in) { return read_isiso_source(in); });
            if (args.mu == 0)
                throw InvalidInput("reduce isiso needs --mu");
            gadget = reduce_isiso_to_isisor(source.host, source.pattern, args.mu);
        }
        else {
            auto source = load(args.source, [] (std::istream & in) { return read_mbb_source(in); });
            if (args.b == 0)
                throw InvalidInput("reduce mbb needs --b");
            gadget = reduce_mbb_to_isr(source.graph, source.side_a, args.b);
        }

        vector<string> comments{ "gadget " + args.kind };
        auto & p = gadget.parameters;
        for (auto [name, value] : { std::pair{ "t", p.t }, { "m", p.m }, { "c", p.c }, { "k", p.k }, { "mu", p.mu } })
            if (value)
                comments.push_back(string("param ") + name + " " + std::to_string(*value));

        write_to(args.output, [&] (std::ostream & out) { write_instance(out, gadget.instance, comments); });

        if (! args.output.empty() && args.output != "-") {
            cout << "v1\n";
            cout << "command: reduce\n";
            cout << "kind: " << args.kind << "\n";
            cout << "host-vertices: " << gadget.instance.host.size() << "\n";
            cout << "host-edges: " << gadget.instance.host.edge_count() << "\n";
            cout << "pattern-vertices: " << gadget.instance.pattern.size() << "\n";
            cout << "rule: " << to_string(gadget.instance.rule) << "\n";
            for (auto & c : comments)
                if (c.starts_with("param "))
                    cout << c.substr(6, c.find(' ', 6) - 6) << ": " << c.substr(c.find(' ', 6) + 1) << "\n";
            cout << "output: " << args.output << "\n";
        }
        return 0;
    }

    auto cmd_analyze(const string & path) -> int
    {
        auto g = load(path, [] (std::istream & in) { return read_graph(in); });
        auto yes_no = [] (bool b) { return b ? "true" : "false"; };
        auto holes = find_holes(g, Parity::Any, false);
        auto parts = components(g);

        cout << "v1\n";
        cout << "command: analyze\n";
        cout << "vertices: " << g.size() << "\n";
        cout << "edges: " << g.edge_count() << "\n";
        cout << "components: " << parts.size() << "\n";
        cout << "connected: " << yes_no(parts.size() <= 1) << "\n";
        cout << "bipartite: " << yes_no(is_bipartite(g)) << "\n";
        cout << "holes: " << holes.holes.size() << "\n";
        cout << "odd-holes: " << holes.odd << "\n";
        cout << "even-holes: " << holes.even << "\n";
        cout << "even-hole-free: " << yes_no(holes.even == 0) << "\n";
        cout << "odd-hole-free: " << yes_no(holes.odd == 0) << "\n";
        cout << "perfect: " << yes_no(is_perfect(g)) << "\n";
        if (parts.size() <= 1)
            cout << "diameter: " << diameter(g) << "\n";
        else
            cout << "diameter: infinite\n";
        return 0;
    }

    auto cmd_convert_ts(const string & instance_path, const string & sequence_path, const string & output) -> int
    {
        auto instance = load(instance_path, [] (std::istream & in) { return read_instance(in); });
        auto sequence = load(sequence_path, [] (std::istream & in) { return read_sequence(in); });
        if (instance.pattern.edge_count() != 0)
            throw InvalidInput("convert-ts needs an edgeless pattern (an independent set instance)");
        if (instance.rule.kind() != RuleKind::Slide)
            throw InvalidInput("convert-ts needs a k-TS instance");
        if (! sequence.steps.empty())
            if (auto check = verify_sequence(instance, sequence) ; ! check)
                throw InvalidInput("input sequence is invalid at step " + std::to_string(check.failed_index) + ": " + check.reason);

        auto converted = kts_sequence_to_ts(instance.host, sequence);
        if (! converted.steps.empty()) {
            auto single = instance;
            single.rule = Rule::slide(1);
            if (! verify_sequence(single, converted))
                throw std::logic_error("converted sequence failed verification");
        }

        write_to(output, [&] (std::ostream & out) { write_sequence(out, converted); });
        if (! output.empty() && output != "-") {
            cout << "v1\n";
            cout << "command: convert-ts\n";
            cout << "input-length: " << sequence.length() << "\n";
            cout << "output-length: " << converted.length() << "\n";
            cout << "output: " << output << "\n";
        }
        return 0;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Reconfiguration of induced subgraph isomorphic sets and independent sets under k-TJ / k-TS" };
    app.require_subcommand(1);

    Globals globals;
    app.add_option("--max-nodes", globals.max_nodes, "Cap on reconfiguration / compressed graph nodes")->capture_default_str();
    app.add_option("--max-states", globals.max_states, "Cap on word-reachability states")->capture_default_str();
    app.add_option("--workers", globals.workers, "Threads for pairwise edge tests")->check(CLI::PositiveNumber)->capture_default_str();

    SolveArgs solve;
    auto solve_cmd = app.add_subcommand("solve", "Decide reachability for an instance file");
    solve_cmd->add_option("instance", solve.instance)->required();
    solve_cmd->add_option("--solver", solve.solver)->check(CLI::IsMember({ "bfs", "xp" }))->capture_default_str();
    solve_cmd->add_option("--mu", solve.mu, "Expected |V(H)| - k for the xp solver")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--sequence-out", solve.sequence_out, "Write the sequence of a yes-answer here");

    string verify_instance, verify_sequence_path;
    auto verify_cmd = app.add_subcommand("verify", "Check a sequence file against an instance file");
    verify_cmd->add_option("instance", verify_instance)->required();
    verify_cmd->add_option("sequence", verify_sequence_path)->required();

    ReduceArgs reduce;
    auto reduce_cmd = app.add_subcommand("reduce", "Build a hardness gadget instance");
    reduce_cmd->add_option("kind", reduce.kind)->required()->check(CLI::IsMember({ "word", "isiso", "mbb" }));
    reduce_cmd->add_option("source", reduce.source)->required();
    reduce_cmd->add_option("--unit", reduce.unit, "Word gadget unit F: K<n>, P<n>, C<n>, N1, or a graph file")->capture_default_str();
    reduce_cmd->add_option("--k", reduce.k, "Word gadget budget (default 2|V(F)|)")->check(CLI::PositiveNumber);
    reduce_cmd->add_option("--rule", reduce.rule, "Word gadget rule")->check(CLI::IsMember({ "tj", "ts" }))->capture_default_str();
    reduce_cmd->add_option("--mu", reduce.mu, "ISIso gadget mu")->check(CLI::PositiveNumber);
    reduce_cmd->add_option("--b", reduce.b, "Biclique size")->check(CLI::PositiveNumber);
    reduce_cmd->add_option("-o,--output", reduce.output, "Instance file to write (default stdout)");

    string analyze_path;
    auto analyze_cmd = app.add_subcommand("analyze", "Report graph-class predicates");
    analyze_cmd->add_option("graph", analyze_path)->required();

    string convert_instance, convert_sequence, convert_output;
    auto convert_cmd = app.add_subcommand("convert-ts", "Split a k-TS sequence into single slides");
    convert_cmd->add_option("instance", convert_instance)->required();
    convert_cmd->add_option("sequence", convert_sequence)->required();
    convert_cmd->add_option("-o,--output", convert_output, "Sequence file to write (default stdout)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed())
            return cmd_solve(globals, solve);
        if (verify_cmd->parsed())
            return cmd_verify(verify_instance, verify_sequence_path);
        if (reduce_cmd->parsed())
            return cmd_reduce(reduce);
        if (analyze_cmd->parsed())
            return cmd_analyze(analyze_path);
        if (convert_cmd->parsed())
            return cmd_convert_ts(convert_instance, convert_sequence, convert_output);
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
