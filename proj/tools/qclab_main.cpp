#include <iostream>

#include <CLI11.hpp>

#include "qclab/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"qclab - numerical lab for quasiconformal and rho-harmonic maps"};
    app.require_subcommand(1);

    std::string out_dir = "out";
    int grid_n = 0;
    uint64_t seed = 12345;
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--grid", grid_n, "override grid resolution");
    app.add_option("--seed", seed, "seed for randomized property scenarios");

    std::string scenario_file;
    CLI::App* run = app.add_subcommand("run", "run one scenario file");
    run->add_option("scenario", scenario_file, "scenario file")->required();

    std::string suite_dir;
    CLI::App* suite = app.add_subcommand("suite", "run every *.scn scenario in a directory");
    suite->add_option("dir", suite_dir, "scenario directory")->required();

    std::string filter;
    CLI::App* catalog = app.add_subcommand("catalog", "list catalog entries");
    catalog->add_option("filter", filter, "substring filter");

    CLI11_PARSE(app, argc, argv);

    qclab::RunOptions opt;
    opt.out_dir = out_dir;
    opt.grid_override = grid_n;
    opt.seed = seed;

    try {
        if (run->parsed()) {
            qclab::Scenario s = qclab::Scenario::parse_file(scenario_file);
            qclab::RunResult rr = qclab::run_scenario(s, opt);
            if (!rr.ok) {
                std::cerr << "scenario '" << s.name << "' failed: " << rr.failure << "\n";
                return 1;
            }
            std::cout << rr.report_json;
            return 0;
        }
        if (suite->parsed()) {
            qclab::SuiteResult sr = qclab::run_suite(suite_dir, opt);
            for (const auto& e : sr.entries)
                std::cout << (e.ok ? "PASS " : "FAIL ") << e.file << "  " << e.detail << "\n";
            std::cout << (sr.all_ok() ? "suite: all passed" : "suite: failures present") << " ("
                      << sr.entries.size() << " scenarios)\n";
            return sr.all_ok() ? 0 : 1;
        }
        if (catalog->parsed()) {
            for (const std::string& line : qclab::list_catalog(filter)) std::cout << line << "\n";
            return 0;
        }
    } catch (const qclab::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
