#include <sunfind/cli.hpp>

#include <sunfind/chordal.hpp>
#include <sunfind/graph.hpp>
#include <sunfind/oracles.hpp>
#include <sunfind/reductions.hpp>
#include <sunfind/sun.hpp>

#include "random.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace sunfind::cli {

namespace {
    struct InputError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    Graph read_graph_file(const std::string & path)
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InputError("cannot open " + path);
        std::ostringstream text;
        text << in.rdbuf();
        try {
            return parse_graph(text.str());
        }
        catch (const ParseError & e) {
            throw InputError(path + ": " + e.what());
        }
    }

    void write_file(const std::string & path, const std::string & contents)
    {
        std::ofstream out(path, std::ios::binary);
        if (! (out << contents))
            throw InputError("cannot write " + path);
    }

    std::string join(const std::vector<Vertex> & vs)
    {
        std::string s;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i)
                s += ' ';
            s += std::to_string(vs[i]);
        }
        return s;
    }

    struct Options {
        std::string graph_path;
        std::string output;
        int order = 0;
        int k = 4;
        int n = 0;
        int min_length = 7;
        std::size_t edges = 0;
        std::size_t samples = 0;
        std::uint64_t seed = 0;
        std::uint64_t budget = default_max_nodes;
        std::string oracle_kind;
    };

    int detect_sun(const Options & o, std::ostream & out)
    {
        auto g = read_graph_file(o.graph_path);
        SearchBudget budget{o.budget};
        auto result = o.order ? find_k_sun(g, o.order, budget) : find_any_sun(g, budget);
        out << format_search_result(result);
        return result.status == SearchStatus::indeterminate ? budget_exhausted : success;
    }

    int recognize(const Options & o, std::ostream & out)
    {
        auto g = read_graph_file(o.graph_path);
        auto simplicial = find_elimination_ordering(g, EliminationKind::simplicial);
        auto hole = find_hole(g);
        if (simplicial.has_value() == hole.has_value()) {
            out << "INCONSISTENT chordality: elimination and hole search disagree\n";
            return property_violation;
        }
        out << "CHORDAL " << (simplicial ? "yes" : "no") << '\n';
        if (simplicial)
            out << "SIMPLICIAL_ORDERING " << join(simplicial->order) << '\n';
        else
            out << "HOLE " << join(hole->cycle) << '\n';

        auto simple = find_elimination_ordering(g, EliminationKind::simple);
        out << "STRONGLY_CHORDAL " << (simple ? "yes" : "no") << '\n';
        if (simple) {
            out << "SIMPLE_ORDERING " << join(simple->order) << '\n';
            return success;
        }
        if (! simplicial)
            return success;

        // chordal but not strongly chordal: a sun must exist
        auto sun = find_any_sun(g, SearchBudget{o.budget});
        switch (sun.status) {
        case SearchStatus::found:
            out << "SUN_ORDER " << sun.witness->order() << '\n'
                << "SUN_HUB " << join(sun.witness->hub) << '\n'
                << "SUN_EARS " << join(sun.witness->ears) << '\n';
            return success;
        case SearchStatus::indeterminate:
            out << "SUN INDETERMINATE " << sun.nodes_used << '\n';
            return budget_exhausted;
        case SearchStatus::absent:
            out << "INCONSISTENT chordal graph without a simple elimination ordering has no sun\n";
            return property_violation;
        }
        return success;
    }

    void report_reduction(const ReductionInstance & inst, const Options & o, std::ostream & out)
    {
        out << "VERTICES " << inst.product.order() << '\n' << "EDGES " << inst.product.size() << '\n';
        if (o.output.empty())
            return;
        write_file(o.output + ".el", emit_graph(inst.product));
        write_file(o.output + ".labels", emit_labels(inst.labels));
        out << "GRAPH " << o.output << ".el\n" << "LABELS " << o.output << ".labels\n";
    }

    ReductionInstance checked_build_f(const Graph & g, int k)
    {
        try {
            return build_f(g, k);
        }
        catch (const TriangleError & e) {
            throw InputError(e.what());
        }
    }

    int reduce_f(const Options & o, std::ostream & out)
    {
        report_reduction(checked_build_f(read_graph_file(o.graph_path), o.k), o, out);
        return success;
    }

    int reduce_h(const Options & o, std::ostream & out)
    {
        report_reduction(build_h(read_graph_file(o.graph_path)), o, out);
        return success;
    }

    int verify_claim1(const Options & o, std::ostream & out)
    {
        detail::Rng rng(o.seed);
        std::size_t passed = 0, failed = 0, unknown = 0;
        auto max_edges = static_cast<std::uint64_t>(o.n) * static_cast<std::uint64_t>(o.n) / 4;
        for (std::size_t i = 0; i < o.samples; ++i) {
            auto instance_seed = rng();
            auto target = detail::draw_below(rng, max_edges + 1);
            auto g = random_triangle_free(o.n, target, instance_seed);
            auto inst = build_f(g, o.k);
            bool stable = has_stable_set(g, static_cast<std::size_t>(o.k));
            auto sun = find_any_sun(inst.product, SearchBudget{o.budget});

            std::string verdict;
            std::string detail;
            if (sun.status == SearchStatus::indeterminate) {
                verdict = "INDETERMINATE";
                ++unknown;
            }
            else if ((sun.status == SearchStatus::found) != stable) {
                verdict = "FAIL";
            }
            else {
                verdict = "PASS";
                if (sun.witness) {
                    try {
                        auto s = stable_set_from_witness(inst, *sun.witness);
                        detail = " stable_set " + join(s.members());
                    }
                    catch (const std::exception & e) {
                        verdict = "FAIL";
                        detail = std::string(" violation: ") + e.what();
                    }
                }
            }
            if (verdict == "PASS")
                ++passed;
            else if (verdict == "FAIL")
                ++failed;

            out << "instance " << i << " seed " << instance_seed << " edges " << g.size() << " stable_set_" << o.k << ' '
                << (stable ? "yes" : "no") << " sun " << (sun.status == SearchStatus::found ? "yes" : sun.status == SearchStatus::absent ? "no" : "unknown")
                << " nodes " << sun.nodes_used << ' ' << verdict << detail << '\n';
        }
        out << "SUMMARY pass " << passed << " fail " << failed << " indeterminate " << unknown << '\n';
        if (failed)
            return property_violation;
        return unknown ? budget_exhausted : success;
    }

    int verify_antihole(const Options & o, std::ostream & out, bool gadget)
    {
        auto g = read_graph_file(o.graph_path);
        Graph target = gadget ? checked_build_f(g, o.k).product : g;
        auto found = find_antihole_geq(target, o.min_length);
        if (! found) {
            out << "ANTIHOLE_GEQ_" << o.min_length << " absent\n";
            return success;
        }
        out << "ANTIHOLE_GEQ_" << o.min_length << " found\n"
            << "ANTIHOLE " << found->cycle.size() << '\n'
            << join(found->cycle) << '\n';
        return gadget ? property_violation : success;
    }

    int gen_trifree(const Options & o, std::ostream & out)
    {
        auto text = emit_graph(random_triangle_free(o.n, o.edges, o.seed));
        if (o.output.empty())
            out << text;
        else
            write_file(o.output, text);
        return success;
    }

    int oracle(const Options & o, std::ostream & out, bool k_given)
    {
        auto g = read_graph_file(o.graph_path);
        bool clique = o.oracle_kind == "clique";
        auto result = clique ? max_clique(g) : max_stable_set(g);
        out << "SIZE " << result.size << '\n'
            << "SET " << join(result.best.members()) << '\n'
            << "NODES " << result.nodes_explored << '\n';
        if (k_given) {
            auto k = static_cast<std::size_t>(o.k);
            bool has = clique ? has_clique(g, k) : has_stable_set(g, k);
            out << (clique ? "HAS_CLIQUE_" : "HAS_STABLE_SET_") << o.k << ' ' << (has ? "yes" : "no") << '\n';
        }
        return success;
    }
}

int run(std::span<const std::string> args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Sun detection, chordality recognition and sun reduction gadgets", "sunfind"};
    app.require_subcommand(1);
    Options o;

    auto add_graph = [&](CLI::App * sub) { sub->add_option("graph", o.graph_path, "Edge-list file")->required(); };
    auto add_budget = [&](CLI::App * sub) {
        sub->add_option("--budget", o.budget, "Search node cap")->check(CLI::Range(std::uint64_t{1}, std::uint64_t(-1)));
    };

    auto * detect = app.add_subcommand("detect-sun", "Search for an induced sun");
    add_graph(detect);
    detect->add_option("--order,-t", o.order, "Only look for suns of this order")->check(CLI::Range(3, 1 << 20));
    add_budget(detect);

    auto * recog = app.add_subcommand("recognize", "Chordal and strongly chordal verdicts with certificates");
    add_graph(recog);
    add_budget(recog);

    auto * rf = app.add_subcommand("reduce-f", "Build the stable-set gadget f(G, k) of a triangle-free graph");
    add_graph(rf);
    rf->add_option("-k", o.k, "Stable set size")->required()->check(CLI::Range(4, 1 << 16));
    rf->add_option("-o,--output", o.output, "Write <prefix>.el and <prefix>.labels");

    auto * rh = app.add_subcommand("reduce-h", "Build the clique gadget h(G)");
    add_graph(rh);
    rh->add_option("-o,--output", o.output, "Write <prefix>.el and <prefix>.labels");

    auto * claim = app.add_subcommand("verify-claim1", "Check: stable k-set in G <=> sun in f(G, k), on random triangle-free graphs");
    claim->add_option("--n", o.n, "Vertices per instance")->required()->check(CLI::Range(1, 64));
    claim->add_option("--samples", o.samples, "Number of instances")->required();
    claim->add_option("--seed", o.seed, "Random seed")->required();
    claim->add_option("-k", o.k, "Stable set size")->check(CLI::Range(4, 64));
    add_budget(claim);

    auto * anti = app.add_subcommand("verify-antihole", "Search for an antihole of length >= --min-length");
    add_graph(anti);
    auto * anti_k = anti->add_option("-k", o.k, "Check f(G, k) instead of the graph itself; an antihole is then a violation")
                        ->check(CLI::Range(4, 1 << 16));
    anti->add_option("--min-length", o.min_length, "Shortest antihole reported")->check(CLI::Range(5, 1 << 20));

    auto * gen = app.add_subcommand("gen-trifree", "Generate a random triangle-free graph");
    gen->add_option("--n", o.n, "Vertices")->required()->check(CLI::Range(1, 1 << 20));
    gen->add_option("--edges", o.edges, "Target edge count")->required();
    gen->add_option("--seed", o.seed, "Random seed")->required();
    gen->add_option("-o,--output", o.output, "Output file (default: stdout)");

    auto * orc = app.add_subcommand("oracle", "Exact maximum stable set or clique");
    orc->add_option("kind", o.oracle_kind, "stable-set or clique")->required()->check(CLI::IsMember({"stable-set", "clique"}));
    add_graph(orc);
    auto * orc_k = orc->add_option("-k", o.k, "Also decide whether a set of this size exists")->check(CLI::Range(0, 1 << 20));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? success : usage_error;
    }

    try {
        if (detect->parsed())
            return detect_sun(o, out);
        if (recog->parsed())
            return recognize(o, out);
        if (rf->parsed())
            return reduce_f(o, out);
        if (rh->parsed())
            return reduce_h(o, out);
        if (claim->parsed())
            return verify_claim1(o, out);
        if (anti->parsed())
            return verify_antihole(o, out, anti_k->count() > 0);
        if (gen->parsed())
            return gen_trifree(o, out);
        if (orc->parsed())
            return oracle(o, out, orc_k->count() > 0);
    }
    catch (const InputError & e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    catch (const TheoremViolation & e) {
        err << "violation: " << e.what() << '\n';
        return property_violation;
    }
    catch (const std::invalid_argument & e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace sunfind::cli
