#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lawvere/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Diffusion on network sheaves of quantale-enriched categories"};
    app.require_subcommand(1);

    lawvere::RunConfig cfg;
    std::string output;
    double tolerance = 0;

    for (const char* name : {"validate", "flow", "sections", "verify", "des", "paths", "prefs"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--input,-i", cfg.input, "input JSON file");
        sub->add_option("--output,-o", output, "write JSON lines here instead of stdout");
        sub->add_option("--max-iter", cfg.max_iter, "flow iteration cap")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "seed for randomized checks");
        sub->add_option("--tolerance", tolerance, "comparison tolerance for real quantales")->check(CLI::PositiveNumber);
        sub->add_option("--schedule", cfg.schedule, "omega schedule")
            ->check(CLI::IsMember({"unweighted", "dijkstra", "synchronous"}));
        sub->add_option("--grid", cfg.grid, "grid resolution for residual oracles")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    auto* sub = app.get_subcommands().front();
    if (sub->count("--tolerance")) cfg.tolerance = tolerance;
    if (cfg.input.empty() && sub->get_name() != "verify") {
        std::cerr << "--input is required for " << sub->get_name() << "\n";
        return 2;
    }

    if (output.empty()) return lawvere::run_command(sub->get_name(), cfg, std::cout);
    std::ofstream out(output);
    if (!out) {
        std::cerr << "cannot write " << output << "\n";
        return 2;
    }
    return lawvere::run_command(sub->get_name(), cfg, out);
}
