#pragma once

#include "serialize.hpp"

#include <nchospec/nchospec.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncho::cli {

/// Result of one subcommand: config echo, deterministic payload, warnings,
/// and (for curve-like commands) the raw points for plot output.
struct CommandResult {
    json config;
    json payload;
    std::vector<std::string> warnings;
    std::optional<CurveTrace> trace;
};

struct EncloseOpts {
    std::string sector;
    double alpha;
    double beta;
    std::uint64_t n;
    std::optional<std::uint64_t> N;  // fixed truncation; otherwise auto sizing
    double width_goal;
    std::uint64_t n_max;
    double tol;
};
CommandResult run_enclose(const EncloseOpts& opts);

struct SpectrumOpts {
    double alpha;
    double beta;
    std::size_t count;
    double width_goal;
};
CommandResult run_spectrum(const SpectrumOpts& opts);

struct GridOpts {
    std::string points;       // "a,b;a,b" (wins over ranges when nonempty)
    std::string alpha_range;  // "lo:hi:steps"
    std::string beta_range;
};
std::vector<Params> build_grid(const GridOpts& grid, std::vector<std::string>& warnings,
                               json& config);

struct CurveOpts {
    std::string sector;
    std::uint64_t n;
    double width_goal;
    std::uint64_t n_max;
    GridOpts grid;
};
CommandResult run_curve(const CurveOpts& opts);

struct GapOpts {
    double alpha;
    double beta;
    std::size_t n0;
};
CommandResult run_gap(const GapOpts& opts);

struct CrossingOpts {
    int branch;  // 1 or 2
    std::uint64_t n;
    double width_goal;
    std::uint64_t n_max;
    GridOpts grid;
};
CommandResult run_crossing(const CrossingOpts& opts);

struct GroundStateOpts {
    double alpha;
    double beta;
    double width_goal;
};
CommandResult run_groundstate(const GroundStateOpts& opts);

struct VerifyOpts {
    double alpha;
    double beta;
    double width_goal;
    std::size_t bands;
    std::uint64_t positivity_N;
};
CommandResult run_verify(const VerifyOpts& opts);

struct ReproOpts {
    std::string example;  // built-in case id; "6.2" is the only one
};
CommandResult run_repro(const ReproOpts& opts);

/// Fixed-width human table for the repro command; byte-stable across runs.
std::string repro_table(const json& payload);

} // namespace ncho::cli
