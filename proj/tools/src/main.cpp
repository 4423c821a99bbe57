#include "commands.hpp"
#include "grid.hpp"
#include "serialize.hpp"

#include <nchospec/nchospec.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

using ncho::cli::CommandResult;
using ncho::cli::Format;

// Exit codes: 0 success, 2 config error, 3 not certifiable, 4 I/O error,
// 5 index out of range, 1 anything else.
constexpr int exit_config = 2;
constexpr int exit_not_certifiable = 3;
constexpr int exit_io = 4;
constexpr int exit_index = 5;

void emit(const std::string& command, const CommandResult& result, Format format,
          const std::string& out_path) {
    using ncho::cli::json;
    switch (format) {
    case Format::Json: {
        const json env = ncho::cli::make_envelope(command, result.config, result.payload,
                                                  result.warnings);
        ncho::cli::write_output(out_path, env.dump(2) + "\n");
        break;
    }
    case Format::Csv:
        ncho::cli::write_output(out_path, ncho::cli::to_csv(result.payload));
        break;
    case Format::TsvPlot: {
        if (!result.trace.has_value()) {
            throw ncho::ConfigError("tsv-plot output is only available for the curve command");
        }
        if (out_path.empty()) {
            ncho::cli::write_output("", ncho::cli::plot_data_string(result.trace->points));
        } else {
            ncho::cli::emit_plot_data(result.trace->points,
                                      ncho::cli::resolve_out_path(out_path));
        }
        break;
    }
    }
    for (const std::string& w : result.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified spectral toolkit for matrix-coupled quantum harmonic oscillators"};
    app.require_subcommand(1);

    std::string format_name = "json";
    std::string out_path;
    app.add_option("--format", format_name, "output format: json, csv or tsv-plot")
        ->capture_default_str();
    app.add_option("--out", out_path,
                   "output file (relative paths resolve against NCHOSPEC_OUT_DIR); "
                   "stdout when omitted");

    std::function<CommandResult()> action;
    std::string command;
    bool repro_default_table = false;

    // enclose ----------------------------------------------------------------
    auto* enclose_cmd = app.add_subcommand("enclose", "certified eigenvalue enclosure");
    auto enclose_opts = std::make_shared<ncho::cli::EncloseOpts>();
    enclose_opts->width_goal = 1e-8;
    enclose_opts->n_max = 8192;
    enclose_opts->tol = 1e-12;
    enclose_cmd->add_option("--sector", enclose_opts->sector, "sector: +1, +2, -1, -2")
        ->required();
    enclose_cmd->add_option("--alpha", enclose_opts->alpha)->required();
    enclose_cmd->add_option("--beta", enclose_opts->beta)->required();
    enclose_cmd->add_option("--n", enclose_opts->n, "eigenvalue index (0-based)")->required();
    std::uint64_t fixed_N = 0;
    auto* fixed_N_opt = enclose_cmd->add_option("--N", fixed_N, "fixed truncation parameter");
    enclose_cmd->add_option("--width-goal", enclose_opts->width_goal,
                            "target interval width for automatic sizing")
        ->capture_default_str();
    enclose_cmd->add_option("--n-max", enclose_opts->n_max, "size budget for automatic sizing")
        ->capture_default_str();
    enclose_cmd->add_option("--tol", enclose_opts->tol, "bisection tolerance with --N")
        ->capture_default_str();
    enclose_cmd->callback([&, enclose_opts, fixed_N_opt] {
        if (fixed_N_opt->count() > 0) enclose_opts->N = fixed_N;
        command = "enclose";
        action = [enclose_opts] { return ncho::cli::run_enclose(*enclose_opts); };
    });

    // spectrum ---------------------------------------------------------------
    auto* spectrum_cmd = app.add_subcommand("spectrum", "merged spectrum of the four sectors");
    auto spectrum_opts = std::make_shared<ncho::cli::SpectrumOpts>();
    spectrum_opts->count = 8;
    spectrum_opts->width_goal = 1e-8;
    spectrum_cmd->add_option("--alpha", spectrum_opts->alpha)->required();
    spectrum_cmd->add_option("--beta", spectrum_opts->beta)->required();
    spectrum_cmd->add_option("--count", spectrum_opts->count)->capture_default_str();
    spectrum_cmd->add_option("--width-goal", spectrum_opts->width_goal)->capture_default_str();
    spectrum_cmd->callback([&, spectrum_opts] {
        command = "spectrum";
        action = [spectrum_opts] { return ncho::cli::run_spectrum(*spectrum_opts); };
    });

    // curve ------------------------------------------------------------------
    auto* curve_cmd = app.add_subcommand("curve", "trace an eigenvalue-curve over a grid");
    auto curve_opts = std::make_shared<ncho::cli::CurveOpts>();
    curve_opts->width_goal = 1e-8;
    curve_opts->n_max = 8192;
    curve_cmd->add_option("--sector", curve_opts->sector)->required();
    curve_cmd->add_option("--n", curve_opts->n)->required();
    curve_cmd->add_option("--width-goal", curve_opts->width_goal)->capture_default_str();
    curve_cmd->add_option("--n-max", curve_opts->n_max)->capture_default_str();
    curve_cmd->add_option("--points", curve_opts->grid.points, "explicit grid: a1,b1;a2,b2;...");
    curve_cmd->add_option("--alpha-range", curve_opts->grid.alpha_range, "lo:hi:steps");
    curve_cmd->add_option("--beta-range", curve_opts->grid.beta_range, "lo:hi:steps");
    curve_cmd->callback([&, curve_opts] {
        command = "curve";
        action = [curve_opts] { return ncho::cli::run_curve(*curve_opts); };
    });

    // gap --------------------------------------------------------------------
    auto* gap_cmd = app.add_subcommand(
        "gap", "sector gap certificate; with a grid and --n, a crossing report");
    auto gap_opts = std::make_shared<ncho::cli::GapOpts>();
    auto crossing_opts = std::make_shared<ncho::cli::CrossingOpts>();
    gap_opts->n0 = 10000;
    crossing_opts->branch = 1;
    crossing_opts->width_goal = 1e-8;
    crossing_opts->n_max = 8192;
    double gap_alpha = 0.0, gap_beta = 0.0;
    auto* gap_alpha_opt = gap_cmd->add_option("--alpha", gap_alpha);
    auto* gap_beta_opt = gap_cmd->add_option("--beta", gap_beta);
    gap_cmd->add_option("--n0", gap_opts->n0, "weight recursion depth")->capture_default_str();
    std::uint64_t crossing_n = 0;
    auto* crossing_n_opt =
        gap_cmd->add_option("--n", crossing_n, "curve index for a grid crossing report");
    gap_cmd->add_option("--branch", crossing_opts->branch, "branch for the crossing report")
        ->capture_default_str();
    gap_cmd->add_option("--width-goal", crossing_opts->width_goal)->capture_default_str();
    gap_cmd->add_option("--n-max", crossing_opts->n_max)->capture_default_str();
    gap_cmd->add_option("--points", crossing_opts->grid.points);
    gap_cmd->add_option("--alpha-range", crossing_opts->grid.alpha_range);
    gap_cmd->add_option("--beta-range", crossing_opts->grid.beta_range);
    gap_cmd->callback([&, gap_opts, crossing_opts, gap_alpha_opt, gap_beta_opt, crossing_n_opt] {
        const bool has_grid = !crossing_opts->grid.points.empty() ||
                              !crossing_opts->grid.alpha_range.empty();
        if (crossing_n_opt->count() > 0 || has_grid) {
            crossing_opts->n = crossing_n;
            command = "gap-crossing";
            action = [crossing_opts] { return ncho::cli::run_crossing(*crossing_opts); };
        } else {
            if (gap_alpha_opt->count() == 0 || gap_beta_opt->count() == 0) {
                throw CLI::ValidationError("gap", "--alpha and --beta are required");
            }
            gap_opts->alpha = gap_alpha;
            gap_opts->beta = gap_beta;
            command = "gap";
            action = [gap_opts] { return ncho::cli::run_gap(*gap_opts); };
        }
    });

    // groundstate --------------------------------------------------------------
    auto* ground_cmd = app.add_subcommand("groundstate", "ground level structure report");
    auto ground_opts = std::make_shared<ncho::cli::GroundStateOpts>();
    ground_opts->width_goal = 1e-8;
    ground_cmd->add_option("--alpha", ground_opts->alpha)->required();
    ground_cmd->add_option("--beta", ground_opts->beta)->required();
    ground_cmd->add_option("--width-goal", ground_opts->width_goal)->capture_default_str();
    ground_cmd->callback([&, ground_opts] {
        command = "groundstate";
        action = [ground_opts] { return ncho::cli::run_groundstate(*ground_opts); };
    });

    // verify -------------------------------------------------------------------
    auto* verify_cmd =
        app.add_subcommand("verify", "run the structural verification battery at one point");
    auto verify_opts = std::make_shared<ncho::cli::VerifyOpts>();
    verify_opts->width_goal = 1e-8;
    verify_opts->bands = 5;
    verify_opts->positivity_N = 200;
    verify_cmd->add_option("--alpha", verify_opts->alpha)->required();
    verify_cmd->add_option("--beta", verify_opts->beta)->required();
    verify_cmd->add_option("--width-goal", verify_opts->width_goal)->capture_default_str();
    verify_cmd->add_option("--bands", verify_opts->bands, "band checks to run (n = 1..bands)")
        ->capture_default_str();
    verify_cmd->add_option("--positivity-N", verify_opts->positivity_N)->capture_default_str();
    verify_cmd->callback([&, verify_opts] {
        command = "verify";
        action = [verify_opts] { return ncho::cli::run_verify(*verify_opts); };
    });

    // repro --------------------------------------------------------------------
    auto* repro_cmd = app.add_subcommand("repro", "run a built-in reproduction case");
    auto repro_opts = std::make_shared<ncho::cli::ReproOpts>();
    repro_opts->example = "6.2";
    repro_cmd->add_option("--example", repro_opts->example, "case id")->capture_default_str();
    repro_cmd->callback([&, repro_opts] {
        command = "repro";
        repro_default_table = true;
        action = [repro_opts] { return ncho::cli::run_repro(*repro_opts); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        const CommandResult result = action();
        if (repro_default_table && format_name == "json" &&
            app.get_option("--format")->count() == 0) {
            // Default repro output is the fixed table; it is byte-stable.
            ncho::cli::write_output(out_path, ncho::cli::repro_table(result.payload));
        } else {
            emit(command, result, ncho::cli::parse_format(format_name), out_path);
        }
        return 0;
    } catch (const ncho::ConfigError& e) {
        std::cerr << R"({"error":{"type":"config","message":")" << e.what() << "\"}}\n";
        return exit_config;
    } catch (const ncho::NotCertifiable& e) {
        std::cerr << R"({"error":{"type":"not-certifiable","message":")" << e.what() << "\"}}\n";
        return exit_not_certifiable;
    } catch (const ncho::IoError& e) {
        std::cerr << R"({"error":{"type":"io","message":")" << e.what() << "\"}}\n";
        return exit_io;
    } catch (const ncho::IndexOutOfRange& e) {
        std::cerr << R"({"error":{"type":"index-out-of-range","message":")" << e.what()
                  << "\"}}\n";
        return exit_index;
    } catch (const std::exception& e) {
        std::cerr << R"({"error":{"type":"internal","message":")" << e.what() << "\"}}\n";
        return 1;
    }
}
