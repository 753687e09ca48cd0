// Command-line front end: decide and construct prime orientations, inspect
// stable modules, run the brute-force oracle and decide-vs-oracle sweeps, and
// generate the named graph families.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "primor/cli.hpp"

namespace {

int with_input(const std::string& path, const std::function<int(std::istream&)>& body) {
    if (path == "-") return body(std::cin);
    std::ifstream file(path);
    if (!file) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return primor::cli::kExitUsage;
    }
    return body(file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime orientation toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    primor::cli::OrientOptions orient_options;
    std::optional<std::uint64_t> budget;
    int sweep_n = 0;
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 0;
    primor::cli::GenSpec gen_spec;

    auto* check = app.add_subcommand("check", "decide primary orientability");
    check->add_option("input", input, "edge-list file, or - for stdin");

    auto* orient = app.add_subcommand("orient", "construct a certified prime orientation");
    orient->add_option("input", input, "edge-list file, or - for stdin");
    orient->add_flag("--dot", orient_options.dot, "emit DOT instead of the arc list");
    orient->add_flag("--certify", orient_options.certify, "re-verify the output and report");

    auto* modules = app.add_subcommand("modules", "list maximal stable modules with degrees");
    modules->add_option("input", input, "edge-list file, or - for stdin");

    auto* oracle = app.add_subcommand("oracle", "exhaustive prime-orientation search");
    oracle->add_option("input", input, "edge-list file, or - for stdin");
    oracle->add_option("--budget", budget, "stop after this many orientations");

    auto* sweep = app.add_subcommand("sweep", "compare decide against the oracle");
    sweep->add_option("--n", sweep_n, "vertex count")->required();
    sweep->add_option("--sample", sample, "sample this many graphs instead of all");
    sweep->add_option("--seed", seed, "sample seed");

    auto* gen = app.add_subcommand("gen", "emit a graph from a named family");
    gen->add_option("--family", gen_spec.family,
                    "complete|star|path|cycle|half_graph|erdos_renyi")
        ->required();
    gen->add_option("--n", gen_spec.n, "family size parameter")->required();
    gen->add_option("--p", gen_spec.p, "edge probability (erdos_renyi)");
    gen->add_option("--seed", gen_spec.seed, "seed (erdos_renyi)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : primor::cli::kExitUsage;
    }

    using namespace primor::cli;
    try {
        if (check->parsed())
            return with_input(input, [](std::istream& in) {
                return run_check(in, std::cout, std::cerr);
            });
        if (orient->parsed())
            return with_input(input, [&](std::istream& in) {
                return run_orient(in, std::cout, std::cerr, orient_options);
            });
        if (modules->parsed())
            return with_input(input, [](std::istream& in) {
                return run_modules(in, std::cout, std::cerr);
            });
        if (oracle->parsed())
            return with_input(input, [&](std::istream& in) {
                return run_oracle(in, std::cout, std::cerr, budget);
            });
        if (sweep->parsed()) return run_sweep(std::cout, std::cerr, sweep_n, sample, seed);
        if (gen->parsed()) return run_gen(std::cout, std::cerr, gen_spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
