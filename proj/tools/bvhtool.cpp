#include <iostream>

#include "CLI11.hpp"

#include "bvh/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"BV operators and the Lie structure of HH^1 for finite p-groups"};
    app.require_subcommand(1);

    bvh::RunConfig cfg;
    const std::vector<std::string> commands = {
        "info",   "cohomology",      "delta", "hh1-lie",
        "hh",     "extension-delta", "verify"};
    const std::map<std::string, std::string> help = {
        {"info", "group invariants and conjugacy structure"},
        {"cohomology", "dims of H^n(G, F_p) per degree"},
        {"delta", "Delta_g matrices per degree for central g"},
        {"hh1-lie", "HH^1 structure constants, solubility verdict, witnesses"},
        {"hh", "HH^n dims through the centraliser decomposition"},
        {"extension-delta", "degree-2 Delta against extension commutators"},
        {"verify", "full invariant suite; exit 0 iff everything passes"}};
    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("--group", cfg.groupSpec,
                        "catalog spec (e.g. dihedral:8) or @file.json")
            ->required();
        sub->add_option("--p", cfg.p, "prime modulus")->capture_default_str();
        sub->add_option("--max-degree", cfg.maxDegree, "top cohomology degree")
            ->check(CLI::Range(0, 5))
            ->capture_default_str();
        sub->add_option("--element", cfg.element,
                        "element label, or 'gamma' for the distinguished "
                        "central element of order p");
        sub->add_flag("--heavy", cfg.heavy, "multiply the work budget by 1000");
        sub->add_option("--format", cfg.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed for randomised checks")
            ->capture_default_str();
        sub->callback([&cfg, name] { cfg.command = name; });
    }

    CLI11_PARSE(app, argc, argv);
    return bvh::executeCommand(cfg, std::cout);
}
