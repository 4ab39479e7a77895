// Command-line front end: exact verification sweeps and reports.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cyclohodge/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"cyclohodge: exact character sums, class numbers and Hodge-center dimensions "
                 "for superelliptic Jacobians"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    cyclohodge::RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", cfg.out_path, "Write the report to this path instead of stdout");
    app.add_option("--jobs", cfg.jobs, "Worker threads for parameter sweeps")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed recorded in the report (reproducibility)");
    app.add_flag("--timings", cfg.timings, "Include wall-clock timing (breaks byte-determinism)");

    auto* center = app.add_subcommand("center", "Center-dimension report for one (p, r, n)");
    center->add_option("--p", cfg.p, "Prime p")->required();
    center->add_option("--r", cfg.r, "Exponent r (q = p^r)")->required();
    center->add_option("--n", cfg.n, "Degree n of f")->required();
    center->add_flag("--assume-large-galois", cfg.assume_large_galois,
                     "Assert the large-Galois-group hypothesis (recorded, not checked)");

    auto* table = app.add_subcommand("table", "Bulk table of center dimensions and bounds");
    table->add_option("--p-max", cfg.p_max, "Largest prime")->required();
    table->add_option("--r-max", cfg.r_max, "Largest exponent")->required();
    table->add_option("--n-max", cfg.n_max, "Largest degree")->required();

    auto* vf = app.add_subcommand("verify-fourier",
                                  "Exact coefficient/nonvanishing/reduction sweeps mod p^r");
    vf->add_option("--p", cfg.p, "Prime p")->required();
    vf->add_option("--r", cfg.r, "Exponent r")->required();
    vf->add_option("--n-max", cfg.n_max, "Sweep n = 2..n-max")->required();

    auto* vt = app.add_subcommand("verify-tower", "Trace relations and ranks down the tower");
    vt->add_option("--p", cfg.p, "Prime p")->required();
    vt->add_option("--r", cfg.r, "Exponent r")->required();
    vt->add_option("--n", cfg.n, "Degree n")->required();

    auto* cn = app.add_subcommand("classnum", "Class numbers and the class-number identities");
    cn->add_option("--p-max", cfg.p_max, "Check all primes p = 3 mod 4 with 3 < p <= p-max")
        ->required();
    cn->add_option("--n", cfg.n, "Degree n for the identity (default 2)");

    auto* ch = app.add_subcommand("characters", "Character table of (Z/qZ)^x");
    ch->add_option("--q", cfg.q, "Prime-power modulus")->required();
    ch->add_flag("--odd-only", cfg.odd_only, "Only characters with chi(-1) = -1");

    auto* ga = app.add_subcommand("gauss", "Exact Gauss sums and norm checks mod q");
    ga->add_option("--q", cfg.q, "Prime-power modulus")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    for (auto* sub : {center, table, vf, vt, cn, ch, ga})
        if (sub->parsed()) cfg.subcommand = sub->get_name();

    try {
        cyclohodge::VerificationReport report = cyclohodge::run(cfg);
        if (cfg.out_path.empty()) {
            std::cout << report.output;
        } else {
            std::ofstream out(cfg.out_path);
            if (!out) {
                std::cerr << "cannot open " << cfg.out_path << "\n";
                return 2;
            }
            out << report.output;
        }
        return report.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
