#include "imprim/cli.hpp"

#include "imprim/catalog.hpp"
#include "imprim/classifier.hpp"
#include "imprim/codec.hpp"
#include "imprim/constructions.hpp"
#include "imprim/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace imprim {

namespace {
    struct Options
    {
        std::string input;
        std::string catalog;
        std::string output;
        std::string mode;
        std::string kind;
        std::string graph;
        long p = 0;
        long n = 0;
        long m = 0;
        std::size_t orbit = 0;
        std::size_t bound = default_bound;
        bool summary = false;
    };

    Json read_input(const std::string & path)
    {
        std::ifstream in(path);
        if (! in)
            throw SchemaError("", "cannot read input file '" + path + "'");
        std::stringstream text;
        text << in.rdbuf();
        return parse_json(text.str());
    }

    void emit(const Json & j, const Options & o, std::ostream & out)
    {
        auto text = canonical_dump(j) + "\n";
        if (o.output.empty()) {
            out << text;
            return;
        }
        std::ofstream file(o.output);
        if (! file)
            throw std::runtime_error("cannot write output file '" + o.output + "'");
        file << text;
    }

    SymmetricTriple load_triple(const Options & o)
    {
        if (! o.input.empty())
            return decode_triple(read_input(o.input));
        auto entry = catalog_lookup(o.catalog);
        if (! entry.triple)
            throw std::invalid_argument("catalog key '" + o.catalog + "' is not a triple");
        return *entry.triple;
    }

    int run_analysis(const Options & o, std::ostream & out, std::ostream & err)
    {
        auto triple = load_triple(o);
        long p = o.p;
        if (p == 0) {
            require_valid(triple);
            p = parameters(triple).p();
        }
        auto report = analyze_triple(triple, p, o.bound);
        auto mode = o.mode.empty() ? default_mode(p) : parse_mode(o.mode);
        report = classify(std::move(report), mode);
        emit(encode_report(report), o, out);
        if (o.summary) {
            auto shape = report.vbrl();
            err << "case " << report.matched_case << " [" << to_string(mode) << "]";
            if (shape)
                err << " (v,b,r,lambda)=(" << (*shape)[0] << "," << (*shape)[1] << "," << (*shape)[2] << ","
                    << (*shape)[3] << ")";
            err << " k=" << report.parameters.k << " m=" << report.parameters.m
                << " quotient_2at=" << (report.quotient_2at ? "true" : "false") << "\n";
        }
        return report.matched_case == "none" ? exit_no_case : exit_ok;
    }

    int run_construct(const Options & o, std::ostream & out)
    {
        if (! o.catalog.empty()) {
            auto entry = catalog_lookup(o.catalog);
            Json j{{"kind", entry.kind}};
            if (entry.triple)
                j["triple"] = encode_triple(*entry.triple);
            if (entry.design)
                j["design"] = encode_design(*entry.design);
            if (entry.graph)
                j["graph"] = encode_graph(*entry.graph);
            if (entry.group)
                j["group"] = encode_group(*entry.group);
            emit(j, o, out);
            return exit_ok;
        }

        if (o.kind == "chain") {
            emit({{"kind", "triple"}, {"triple", encode_triple(matched_cycle_chain(o.n))}}, o, out);
            return exit_ok;
        }
        if (o.kind == "affine") {
            auto built = affine_orbit_design(static_cast<unsigned>(o.n), static_cast<unsigned>(o.m));
            emit({{"kind", "design"}, {"design", encode_design(built.design)}, {"group", encode_group(built.group)}}, o, out);
            return exit_ok;
        }

        auto base = catalog_lookup(o.graph.empty() ? "k5" : o.graph);
        if (! base.graph)
            throw std::invalid_argument("--graph must name a catalog graph");
        SymmetricTriple t = [&] {
            if (o.kind == "arc-pair")
                return arc_pair_triple(*base.graph, *base.group);
            auto orbits = three_arc_orbits(*base.graph, *base.group);
            if (o.orbit >= orbits.size())
                throw std::invalid_argument("--orbit " + std::to_string(o.orbit) + " out of range; "
                    + std::to_string(orbits.size()) + " orbits");
            if (o.kind == "xi")
                return three_arc_triple(*base.graph, *base.group, orbits[o.orbit]);
            if (o.kind == "gamma2")
                return gamma2_triple(*base.graph, *base.group, orbits[o.orbit]);
            throw std::invalid_argument("unknown construction kind '" + o.kind + "'");
        }();
        emit({{"kind", "triple"}, {"triple", encode_triple(t)}}, o, out);
        return exit_ok;
    }

    int run_orbits(const Options & o, std::ostream & out)
    {
        std::optional<Graph> graph;
        std::optional<GeneratedGroup> group;
        if (! o.input.empty()) {
            auto j = read_input(o.input);
            if (! j.is_object() || ! j.contains("graph") || ! j.contains("group"))
                throw SchemaError("/", "expected an object with graph and group");
            graph = decode_graph(j["graph"], "/graph");
            group = decode_group(j["group"], "/group");
        }
        else {
            auto entry = catalog_lookup(o.catalog);
            if (! entry.graph)
                throw std::invalid_argument("catalog key '" + o.catalog + "' is not a graph");
            graph = entry.graph;
            group = entry.group;
        }
        emit({{"orbits", encode_orbits(three_arc_orbits(*graph, *group))}}, o, out);
        return exit_ok;
    }

    int run_catalog(const Options & o, std::ostream & out)
    {
        Json list = Json::array();
        for (const auto & info : catalog_listing())
            list.push_back({{"description", info.description}, {"key", info.key}, {"kind", info.kind}});
        emit({{"catalog", list}}, o, out);
        return exit_ok;
    }

    std::string catalog_help()
    {
        std::string text = "Catalog keys:\n";
        for (const auto & info : catalog_listing())
            text += "  " + info.key + " (" + info.kind + "): " + info.description + "\n";
        return text;
    }
}

int run_command(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Quotient-graph invariants and case classification of imprimitive symmetric triples"};
    app.footer(catalog_help());
    app.require_subcommand(1);
    Options o;

    auto add_source = [&](CLI::App * sub) {
        auto in = sub->add_option("--in", o.input, "input JSON file");
        auto cat = sub->add_option("--catalog", o.catalog, "catalog key");
        in->excludes(cat);
        cat->excludes(in);
    };
    auto add_common = [&](CLI::App * sub) {
        sub->add_option("--out", o.output, "write JSON here instead of standard output");
        sub->add_option("--bound", o.bound, "cap on enumerated group elements")->check(CLI::PositiveNumber);
    };

    auto analyze = app.add_subcommand("analyze", "analyze a triple and classify it (mode chosen from p)");
    auto classify_cmd = app.add_subcommand("classify", "analyze a triple and classify it in the given mode");
    for (auto sub : {analyze, classify_cmd}) {
        add_source(sub);
        add_common(sub);
        sub->add_option("--p", o.p, "odd prime p = v - k (defaults to v - k)");
        sub->add_option("--mode", o.mode, "theorem1, p3 or p5");
        sub->add_flag("--summary", o.summary, "one-line summary on standard error");
    }
    auto construct = app.add_subcommand("construct", "emit a catalog object or a construction");
    construct->add_option("--catalog", o.catalog, "catalog key");
    construct->add_option("--kind", o.kind, "arc-pair, xi, gamma2, chain or affine");
    construct->add_option("--graph", o.graph, "catalog graph for arc-pair, xi, gamma2 (default k5)");
    construct->add_option("--orbit", o.orbit, "index of the 3-arc orbit for xi and gamma2");
    construct->add_option("--n", o.n, "chain length, or field degree for affine");
    construct->add_option("--m", o.m, "affine design parameter m");
    add_common(construct);
    auto orbits = app.add_subcommand("orbits", "3-arc orbits of a graph under a group");
    add_source(orbits);
    add_common(orbits);
    auto catalog = app.add_subcommand("catalog", "list catalog keys");
    add_common(catalog);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n";
        return exit_malformed;
    }

    try {
        if (analyze->parsed() || classify_cmd->parsed() || orbits->parsed())
            if (o.input.empty() && o.catalog.empty())
                throw std::invalid_argument("one of --in or --catalog is required");
        if (construct->parsed() && o.catalog.empty() && o.kind.empty())
            throw std::invalid_argument("one of --catalog or --kind is required");

        if (analyze->parsed() || classify_cmd->parsed())
            return run_analysis(o, out, err);
        if (construct->parsed())
            return run_construct(o, out);
        if (orbits->parsed())
            return run_orbits(o, out);
        return run_catalog(o, out);
    }
    catch (const SchemaError & e) {
        err << "malformed input: " << e.what() << "\n";
        return exit_malformed;
    }
    catch (const ExceedsBound & e) {
        err << "bound exceeded: " << e.what() << "\n";
        return exit_bound;
    }
    catch (const TooLarge & e) {
        err << "bound exceeded: " << e.what() << "\n";
        return exit_bound;
    }
    catch (const Error & e) {
        err << "precondition violated: " << e.what() << "\n";
        return exit_precondition;
    }
    catch (const std::invalid_argument & e) {
        err << "malformed input: " << e.what() << "\n";
        return exit_malformed;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return exit_malformed;
    }
}

} // namespace imprim
