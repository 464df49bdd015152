#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aoi/model.hpp"

namespace aoi::cli {

enum class Command { report, simulate, sweep, frontier, validate, figures };

enum class OutputFormat { csv, json };

// Everything a subcommand needs; built from flags and/or a JSON config file.
struct ExperimentSpec {
    Command command = Command::report;
    std::vector<Protocol> protocols{Protocol::SA};
    std::vector<int> n_list{10};
    int k = 5;
    int payload_bytes = 128;
    PhyConfig phy;
    std::optional<double> t_pk_override;  // normalized-unit runs
    std::optional<double> t_r_override;
    double tx_power = 1.0;
    double access_prob = 0.1;
    std::vector<double> prob_grid;    // sweep
    std::vector<double> budget_grid;  // frontier
    std::uint64_t seed = 7;
    std::int64_t rounds = 1000000;
    std::int64_t warmup = 1000;
    std::string preset;               // figures
    std::string out_dir;              // default: $AOIKIT_OUT_DIR or "."
    std::string out_file;             // report/simulate/sweep/frontier/validate
    OutputFormat format = OutputFormat::csv;
};

// Exit codes: 0 success, 1 usage error, 2 runtime failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnvVar = "AOIKIT_OUT_DIR";

// Resolve timing from overrides or PHY + payload.
TimingModel spec_timing(const ExperimentSpec& spec);

// Execute one spec; writes artifact files and prints a short summary to
// `out`. Returns an exit code.
int run(const ExperimentSpec& spec, std::ostream& out);

// Full argv interface used by the binary: parses flags (and --config JSON),
// then dispatches to run().
int main_with_args(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err);

// Merge a JSON config file into a spec (flags still take precedence; the
// caller parses flags after applying the file).
void apply_config_file(ExperimentSpec& spec, const std::string& path);

}  // namespace aoi::cli
