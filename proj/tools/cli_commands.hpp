#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepcore::cli {

enum ExitCode { kOk = 0, kFailed = 1, kInputError = 2, kNumericError = 3 };

class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& kind, const std::string& msg)
        : std::runtime_error(msg), code_(code), kind_(kind) {}
    int code() const { return code_; }
    const std::string& kind() const { return kind_; }

private:
    int code_;
    std::string kind_;
};

struct TestArgs {
    std::string data;
    int p1 = 0;
    int p2 = 0;
    std::vector<std::string> stats;
    std::string calib = "mc";
    std::string dist = "gaussian";
    double gamma_alpha = 4.0;
    double gamma_beta = 2.0;
    double nu = 6.0;
    int reps = 1000;
    double alpha = 0.05;
    std::uint64_t seed = 1;
    bool center = false;
    bool row_major = false;
    std::string root = "cholesky";
    std::string out;
    int threads = 0;
};

struct SimulateArgs {
    int p1 = 0;
    int p2 = 0;
    int n = 0;
    std::uint64_t seed = 1;
    std::string dist = "gaussian";
    double gamma_alpha = 4.0;
    double gamma_beta = 2.0;
    double nu = 6.0;
    std::string preset;     // core preset, empty for identity core
    double w = 1.0;
    std::uint64_t core_seed = 7;
    std::string separable;  // B1, B2 or empty for identity K
    std::string out;
};

int cmd_test(const TestArgs& a);
int cmd_simulate(const SimulateArgs& a);
int cmd_calibrate(const std::string& config, int threads);
int cmd_power(const std::string& config, int threads);
int cmd_null_dist(const std::string& config, int threads);
int cmd_diagnose(const std::string& config, int threads);
int cmd_validate(const std::optional<std::string>& tw_table, int threads);

// Writes an error object to stderr and returns the exit code to use.
int report_error(int code, const std::string& kind, const std::string& msg);

}  // namespace sepcore::cli
