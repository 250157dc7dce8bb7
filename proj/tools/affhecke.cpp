#include <CLI11.hpp>
#include <iostream>

#include "affhecke/commands.hpp"

using namespace affhecke;

int main(int argc, char** argv) {
    CLI::App app{"Affine Weyl groups, 0-Hecke algebras and Demazure operators over GF(p)"};
    app.require_subcommand(1);

    Config config;
    std::string type = "A";
    std::string format = "json";
    std::string cache;

    app.add_option("--type", type, "Lie type A-G")->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
    app.add_option("--rank", config.rank, "Rank of the finite root system")->check(CLI::PositiveNumber);
    app.add_option("--prime", config.prime, "Characteristic p of the coefficient field");
    app.add_option("--max-length", config.max_length, "Length truncation N");
    app.add_option("--cache", cache, "Cache directory (overrides AFFHECKE_CACHE)");
    app.add_option("--format", format, "json, dot or table");
    app.add_option("--seed", config.seed, "Seed for randomized suites");
    app.add_option("--samples", config.samples, "Random instances per randomized suite");
    app.add_option("--coord-bound", config.coord_bound, "Coordinate bound for coweight families");
    app.add_option("--max-elements", config.max_elements, "Element budget for enumeration");

    auto* enumerate = app.add_subcommand("enumerate", "List all elements of length <= N, grouped by length");
    auto* compute = app.add_subcommand("compute", "Evaluate an expression");
    std::vector<std::string> expression;
    compute->add_option("expression", expression, "Expression, e.g. \"len [0,1]\"")->required();
    auto* check = app.add_subcommand("check", "Run a property-check suite");
    std::string suite;
    check->add_option("suite", suite, "Suite name or 'all'")->required();
    auto* graph = app.add_subcommand("graph", "Bruhat Hasse diagram of the length <= N ball");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    CommandResult result;
    try {
        config.lie_type = type.at(0);
        if (!cache.empty()) config.cache = cache;
        config.format = parse_format(format);
        if (*enumerate) {
            result = cmd_enumerate(config);
        } else if (*compute) {
            std::string text;
            for (const auto& part : expression) text += (text.empty() ? "" : " ") + part;
            result = cmd_compute(config, text);
        } else if (*check) {
            result = cmd_check(config, suite);
        } else if (*graph) {
            result = cmd_graph(config);
        }
    } catch (const std::exception& e) {
        result = {kExitUsage, "", e.what()};
    }
    std::cout << result.output;
    if (!result.error.empty()) std::cerr << "affhecke: " << result.error << '\n';
    return result.exit_code;
}
