#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli_commands.hpp"
#include "sepcore/error.hpp"

using namespace sepcore;
using namespace sepcore::cli;

namespace {

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch:
        case ErrorCode::InsufficientSamples:
        case ErrorCode::IncompatibleParameters:
        case ErrorCode::ConfigMismatch:
        case ErrorCode::InvalidArgument: return kInputError;
        default: return kNumericError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kronecker-core decomposition and separability tests"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: SEPCORE_THREADS, then all cores)");

    TestArgs targs;
    std::string stat_list;
    auto* test = app.add_subcommand("test", "test separability of a data file");
    test->add_option("--data", targs.data, "CSV with one vec(Y_i) per row")->required();
    test->add_option("--p1", targs.p1, "row dimension")->required();
    test->add_option("--p2", targs.p2, "column dimension")->required();
    test->add_option("--stat", stat_list, "comma-separated statistic kinds")->required();
    test->add_option("--calib", targs.calib, "mc or asymptotic");
    test->add_option("--dist", targs.dist, "null sampler: gaussian, gamma, t");
    test->add_option("--gamma-alpha", targs.gamma_alpha);
    test->add_option("--gamma-beta", targs.gamma_beta);
    test->add_option("--nu", targs.nu);
    test->add_option("--reps", targs.reps, "Monte Carlo replicates");
    test->add_option("--alpha", targs.alpha, "test level");
    test->add_option("--seed", targs.seed, "master seed");
    test->add_flag("--center", targs.center, "subtract the sample mean");
    test->add_flag("--row-major", targs.row_major, "rows list Y_i row by row");
    test->add_option("--root", targs.root, "cholesky or symmetric");
    test->add_option("--out", targs.out, "output path (default stdout)");

    SimulateArgs sargs;
    auto* simulate = app.add_subcommand("simulate", "write a synthetic data file");
    simulate->add_option("--p1", sargs.p1)->required();
    simulate->add_option("--p2", sargs.p2)->required();
    simulate->add_option("--n", sargs.n)->required();
    simulate->add_option("--seed", sargs.seed);
    simulate->add_option("--dist", sargs.dist);
    simulate->add_option("--gamma-alpha", sargs.gamma_alpha);
    simulate->add_option("--gamma-beta", sargs.gamma_beta);
    simulate->add_option("--nu", sargs.nu);
    simulate->add_option("--preset", sargs.preset, "core preset paper-C1 or paper-C2");
    simulate->add_option("--w", sargs.w, "shrinkage weight toward the identity core");
    simulate->add_option("--core-seed", sargs.core_seed);
    simulate->add_option("--separable", sargs.separable, "separable preset B1 or B2");
    simulate->add_option("--out", sargs.out);

    std::string config;
    auto* calibrate = app.add_subcommand("calibrate", "tabulate Monte Carlo critical values");
    calibrate->add_option("config", config, "TOML config")->required();
    auto* power = app.add_subcommand("power", "empirical power curves");
    power->add_option("config", config, "TOML config")->required();
    auto* null_dist = app.add_subcommand("null-dist", "null samples of transformed statistics");
    null_dist->add_option("config", config, "TOML config")->required();
    auto* diagnose = app.add_subcommand("diagnose", "MP, BBP and T3 diagnostics");
    diagnose->add_option("config", config, "TOML config")->required();
    std::string tw_table;
    auto* validate = app.add_subcommand("validate", "run the invariant suite");
    validate->add_option("--tw-table", tw_table, "check this TW1 table instead of the embedded one");
    for (auto* sub : {test, simulate, calibrate, power, null_dist, diagnose, validate}) {
        sub->add_option("--threads", threads, "worker threads");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return report_error(kInputError, "UsageError", e.what());
    }

    try {
        if (*test) {
            std::string item;
            for (char c : stat_list + ",") {
                if (c == ',') {
                    if (!item.empty()) targs.stats.push_back(item);
                    item.clear();
                } else if (c != ' ') {
                    item.push_back(c);
                }
            }
            targs.threads = threads;
            return cmd_test(targs);
        }
        if (*simulate) return cmd_simulate(sargs);
        if (*calibrate) return cmd_calibrate(config, threads);
        if (*power) return cmd_power(config, threads);
        if (*null_dist) return cmd_null_dist(config, threads);
        if (*diagnose) return cmd_diagnose(config, threads);
        if (*validate) return cmd_validate(tw_table.empty() ? std::nullopt : std::optional<std::string>(tw_table), threads);
    } catch (const CliError& e) {
        return report_error(e.code(), e.kind(), e.what());
    } catch (const Error& e) {
        return report_error(exit_code_for(e.code()), error_name(e.code()), e.what());
    } catch (const std::exception& e) {
        return report_error(kNumericError, "InternalError", e.what());
    }
    return kInputError;
}
