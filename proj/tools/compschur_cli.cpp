// compschur: products of complementary Schur functions over a rectangle.

#include <iostream>

#include <CLI11.hpp>

#include "compschur/commands.hpp"

int main(int argc, char** argv) {
    using namespace compschur;

    CLI::App app{"Littlewood-Richardson products of complementary Schur functions"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    std::string format = "text";
    app.add_option("--cache-dir", cfg.cache_dir, "Directory of deg<N>.lrcache files to read and update");
    app.add_option("--jobs,-j", cfg.jobs, "Worker threads")->capture_default_str();
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--out,-o", cfg.out, "Write the report here instead of standard output");

    auto* expand = app.add_subcommand("expand", "Expand s_lambda * s_mu in the Schur basis");
    expand->add_option("partitions", cfg.args, "Two partitions, e.g. 2-1 1")->required()->expected(2);

    auto* pairs = app.add_subcommand("pairs", "List the unordered complementary pairs of AxB");
    auto* witness = app.add_subcommand("witness", "Witness certificates for the self-complementary pairs of AxB");
    witness->add_option("--word", cfg.word, "Word over h,v selecting one pair");
    auto* verify = app.add_subcommand("verify-theorem", "Certify a witness for every (almost) self-complementary pair");
    auto* elim = app.add_subcommand("eliminate", "Run the witness elimination fixpoint");
    elim->add_flag("--require-unit-coeff", cfg.require_unit_coefficient, "Only accept witnesses with coefficient 1");
    auto* rank = app.add_subcommand("rank", "Certify full rank of the product matrix");
    rank->add_option("--prime", cfg.primes, "Modulus to try (repeatable)");
    for (auto* sub : {pairs, witness, verify, elim, rank})
        sub->add_option("rect", cfg.args, "Rectangle AxB")->required()->expected(1);
    app.add_subcommand("counterexamples", "Check the two failed generalisations");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (app.get_subcommands().empty()) {
        std::cerr << "error: no command given\n" << app.help();
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? Format::Json : Format::Text;
    return run(cfg, std::cout, std::cerr);
}
