// Command line front end. Every subcommand prints one JSON document on
// standard output. Exit codes: 0 success, 1 domain failure (for example no
// embedding exists), 2 usage errors.
#include "sunit/analyze.hpp"
#include "sunit/diophantine.hpp"
#include "sunit/errors.hpp"
#include "sunit/graphcore.hpp"
#include "sunit/serialization.hpp"
#include "sunit/sintring.hpp"
#include "sunit/synthesis.hpp"
#include "sunit/unitgraph.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using sunit::Json;

Json json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw sunit::BadParameters("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    Json j = Json::parse(buf.str(), nullptr, false);
    if (j.is_discarded())
        throw sunit::BadParameters(path + " is not valid JSON");
    return j;
}

struct Options {
    bool pretty = false;
    std::string primes;
    std::string points;
    std::string graph_path;
    std::string rep_path;
    int variant = 0;
    int max_dim = 10;
    int bound = 8;
    int arity = 2;
    int limit = 40;

    void emit(const Json& j) const {
        std::cout << (pretty ? j.dump(2) : j.dump()) << '\n';
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, analyze and classify S-unit difference graphs"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--pretty", opt.pretty, "indent JSON output");

    auto* build = app.add_subcommand("build", "difference graph of a point set");
    build->add_option("--primes", opt.primes, "comma separated primes")->required();
    build->add_option("--points", opt.points, "comma separated rationals")->required();

    auto* represent = app.add_subcommand("represent", "construct a representation");
    represent->add_option("--graph", opt.graph_path, "graph file (JSON or edge list)")
        ->required();
    represent->add_option("--primes", opt.primes,
                          "target primes; omit to let the construction choose");
    represent->add_option("--variant", opt.variant, "index of an alternative output");

    auto* rescale = app.add_subcommand("rescale", "relabel a one-prime representation");
    rescale->add_option("--rep", opt.rep_path, "representation JSON file")->required();
    rescale->add_option("--primes", opt.primes, "target primes")->required();
    rescale->add_option("--variant", opt.variant, "index of an alternative output");

    auto* analyze = app.add_subcommand("analyze", "representability verdict");
    analyze->add_option("--graph", opt.graph_path, "graph file")->required();
    analyze->add_option("--primes", opt.primes, "primes")->required();

    auto* embed = app.add_subcommand("embed", "hypercube embedding");
    embed->add_option("--graph", opt.graph_path, "graph file")->required();
    embed->add_option("--max-dim", opt.max_dim, "largest dimension tried");

    auto* units = app.add_subcommand("units", "bounded S-unit equation solutions");
    units->add_option("--primes", opt.primes, "primes")->required();
    units->add_option("--bound", opt.bound, "exponent bound");
    units->add_option("--arity", opt.arity, "number of unit terms (2 or 3)");

    auto* canon = app.add_subcommand("canon", "canonical form of a point set");
    canon->add_option("--primes", opt.primes, "primes")->required();
    canon->add_option("--points", opt.points, "comma separated rationals")->required();

    auto* census = app.add_subcommand("census", "equivalence classes in a window");
    census->add_option("--graph", opt.graph_path, "graph file")->required();
    census->add_option("--primes", opt.primes, "primes")->required();
    census->add_option("--limit", opt.limit, "window upper end");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*build) {
            sunit::PrimeSet s = sunit::parse_primes(opt.primes);
            auto pts = sunit::parse_points(opt.points, s);
            opt.emit(sunit::graph_to_json(sunit::build_graph(s, pts)));
        } else if (*represent) {
            sunit::Graph g = sunit::read_graph_file(opt.graph_path);
            sunit::Representation rep{sunit::PrimeSet{}, {}, std::nullopt, std::nullopt};
            if (opt.primes.empty()) {
                rep = sunit::represent_any(g, opt.variant);
            } else {
                sunit::PrimeSet s = sunit::parse_primes(opt.primes);
                if (sunit::is_forest(g)) {
                    rep = sunit::represent_forest(g, s);
                } else if (auto emb = sunit::hypercube_embed(g, opt.max_dim)) {
                    rep = sunit::cubical_to_representation(g, *emb, s, opt.variant);
                } else {
                    throw sunit::Error(
                        "graph is neither a forest nor cubical; no construction"
                        " over the requested primes (omit --primes to let"
                        " represent choose its own)");
                }
            }
            opt.emit(sunit::representation_to_json(rep));
        } else if (*rescale) {
            sunit::Representation rep =
                sunit::representation_from_json(json_file(opt.rep_path));
            sunit::PrimeSet s = sunit::parse_primes(opt.primes);
            opt.emit(sunit::representation_to_json(
                sunit::rescale_representation(rep, s, opt.variant)));
        } else if (*analyze) {
            sunit::Graph g = sunit::read_graph_file(opt.graph_path);
            sunit::PrimeSet s = sunit::parse_primes(opt.primes);
            opt.emit(sunit::verdict_to_json(sunit::classify(g, s)));
        } else if (*embed) {
            sunit::Graph g = sunit::read_graph_file(opt.graph_path);
            auto emb = sunit::hypercube_embed(g, opt.max_dim);
            if (!emb) {
                std::cout << "null\n";
                return 1;
            }
            opt.emit(sunit::embedding_to_json(*emb));
        } else if (*units) {
            sunit::PrimeSet s = sunit::parse_primes(opt.primes);
            if (opt.arity < 2 || opt.arity > 3)
                throw sunit::BadParameters("--arity must be 2 or 3");
            sunit::UnitEquation eq;
            eq.coefficients.assign(opt.arity, sunit::BigRat(1));
            eq.s = s;
            eq.exponent_bound = opt.bound;
            opt.emit(sunit::solutions_to_json(sunit::solve_bounded(eq)));
        } else if (*canon) {
            sunit::PrimeSet s = sunit::parse_primes(opt.primes);
            auto pts = sunit::parse_points(opt.points, s);
            Json j = Json::array();
            for (const auto& pt : sunit::canonicalize(s, pts))
                j.push_back(pt.str());
            opt.emit(j);
        } else if (*census) {
            sunit::Graph g = sunit::read_graph_file(opt.graph_path);
            sunit::PrimeSet s = sunit::parse_primes(opt.primes);
            opt.emit(sunit::census_to_json(
                sunit::census_equivalence_classes(g, s, opt.limit)));
        }
    } catch (const sunit::BadParameters& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
