#include "hodgescreen/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace hodge::cli;

    CLI::App app{"Invariants and conditional screening of declared Hodge data"};
    app.require_subcommand(1);
    Options opt;
    std::uint64_t seed = 0;
    app.add_flag("--json", opt.json, "Machine-readable JSON report");
    auto* seed_opt = app.add_option("--seed", seed, "Seed of the random evaluation point for trdeg");

    std::string file;
    auto* inv = app.add_subcommand("invariants", "dim g, dim F, hcodim and the grading of ad(mu)");
    inv->add_option("file", file, "Spec document")->required();
    auto* scr = app.add_subcommand("screen", "All verdicts for the declared structure");
    scr->add_option("file", file, "Spec document")->required();
    auto* trd = app.add_subcommand("trdeg", "Transcendence degree of the flag point");
    trd->add_option("file", file, "Spec document")->required();
    auto* lie = app.add_subcommand("lie-check", "Validate the declared Lie algebra");
    lie->add_option("file", file, "Spec document")->required();

    std::string op;
    std::vector<std::string> files;
    long k = 0;
    auto* hdg = app.add_subcommand("hodge", "Hodge numbers of dual, tensor, wedge, sym or twist");
    hdg->add_option("op", op, "dual | tensor | wedge | sym | twist")->required();
    hdg->add_option("files", files, "Spec documents")->required();
    auto* k_opt = hdg->add_option("--k", k, "Power for wedge/sym, m for twist by Q(m)");

    // options given after the subcommand are accepted as well
    for (auto* sub : {inv, scr, trd, lie, hdg}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_schema;
    }
    if (*seed_opt) opt.seed = seed;

    CommandResult res;
    if (*inv) res = cmd_invariants(file, opt);
    else if (*scr) res = cmd_screen(file, opt);
    else if (*trd) res = cmd_trdeg(file, opt);
    else if (*lie) res = cmd_lie_check(file, opt);
    else res = cmd_hodge(op, files, *k_opt ? std::optional<long>(k) : std::nullopt, opt);

    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}
