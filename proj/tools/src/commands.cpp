#include "commands.hpp"

#include "grid.hpp"

#include <algorithm>
#include <cmath>

namespace ncho::cli {

namespace {

json enclosure_json(const Enclosure& e) {
    return json{{"sector", sector_label(e.sector)},
                {"n", e.index},
                {"N", e.N},
                {"lower", e.lower},
                {"upper", e.upper},
                {"width", e.width()},
                {"mid", e.mid()},
                {"cap", e.cap},
                {"certified", e.certified},
                {"bisection_tol", e.bisection_tol}};
}

json interval_json(const Interval& iv) {
    return json{{"lower", iv.lo}, {"upper", iv.hi}};
}

json grid_config(const std::vector<Params>& grid) {
    json points = json::array();
    for (const Params& p : grid) {
        points.push_back(json::array({p.alpha, p.beta}));
    }
    return points;
}

} // namespace

std::vector<Params> build_grid(const GridOpts& grid, std::vector<std::string>& warnings,
                               json& config) {
    std::vector<std::pair<double, double>> raw;
    if (!grid.points.empty()) {
        raw = parse_points(grid.points);
        config["points"] = grid.points;
    } else if (!grid.alpha_range.empty() && !grid.beta_range.empty()) {
        raw = cartesian(expand_range(parse_range(grid.alpha_range)),
                        expand_range(parse_range(grid.beta_range)));
        config["alpha_range"] = grid.alpha_range;
        config["beta_range"] = grid.beta_range;
    } else {
        throw ConfigError("need either --points or both --alpha-range and --beta-range");
    }
    return make_grid(raw, warnings);
}

CommandResult run_enclose(const EncloseOpts& opts) {
    const SectorId sector = parse_sector(opts.sector);
    const Params params(opts.alpha, opts.beta);

    CommandResult result;
    result.config = json{{"sector", opts.sector}, {"alpha", opts.alpha}, {"beta", opts.beta},
                         {"n", opts.n}};
    Enclosure e = [&] {
        if (opts.N.has_value()) {
            result.config["N"] = *opts.N;
            result.config["tol"] = opts.tol;
            return enclose(sector, params, opts.n, *opts.N, opts.tol);
        }
        result.config["width_goal"] = opts.width_goal;
        result.config["n_max"] = opts.n_max;
        return enclose_auto(sector, params, opts.n, opts.width_goal, opts.n_max);
    }();

    if (!e.certified) {
        result.warnings.push_back("enclosure is not certified: the interval is not guaranteed "
                                  "to contain the operator eigenvalue");
    }
    result.payload = enclosure_json(e);
    return result;
}

CommandResult run_spectrum(const SpectrumOpts& opts) {
    const Params params(opts.alpha, opts.beta);
    const MergedSpectrum spec = merged_spectrum(params, opts.count, opts.width_goal);

    json lines = json::array();
    for (const SpectrumLine& line : spec.lines) {
        lines.push_back(json{{"rank", line.global_rank},
                             {"sector", sector_label(line.sector)},
                             {"sector_index", line.sector_index},
                             {"lower", line.lower},
                             {"upper", line.upper},
                             {"mid", line.mid()},
                             {"overlaps_previous", line.overlaps_previous}});
    }
    json pairs = json::array();
    for (const auto& [i, j] : spec.degenerate_pairs) {
        pairs.push_back(json::array({i, j}));
    }

    CommandResult result;
    result.config = json{{"alpha", opts.alpha}, {"beta", opts.beta}, {"count", opts.count},
                         {"width_goal", opts.width_goal}};
    result.payload = json{{"lines", std::move(lines)}, {"degenerate_pairs", std::move(pairs)}};
    if (!spec.degenerate_pairs.empty()) {
        result.warnings.push_back("some certified intervals overlap; their relative order is a "
                                  "deterministic tie-break, not a proven ordering");
    }
    return result;
}

CommandResult run_curve(const CurveOpts& opts) {
    const SectorId sector = parse_sector(opts.sector);

    CommandResult result;
    result.config = json{{"sector", opts.sector}, {"n", opts.n},
                         {"width_goal", opts.width_goal}, {"n_max", opts.n_max}};
    const std::vector<Params> grid = build_grid(opts.grid, result.warnings, result.config);
    result.config["grid"] = grid_config(grid);

    CurveTrace trace = trace_curve(sector, opts.n, grid, opts.width_goal, opts.n_max);
    json points = json::array();
    for (const CurvePoint& p : trace.points) {
        points.push_back(json{{"alpha", p.params.alpha},
                              {"beta", p.params.beta},
                              {"N", p.enclosure.N},
                              {"lower", p.enclosure.lower},
                              {"upper", p.enclosure.upper},
                              {"mid", p.enclosure.mid()}});
    }
    for (std::size_t idx : trace.dropped) {
        result.warnings.push_back("dropped grid point " + std::to_string(idx) +
                                  ": not certifiable within the size budget");
    }
    result.payload = json{{"points", std::move(points)}, {"dropped", trace.dropped}};
    result.trace = std::move(trace);
    return result;
}

CommandResult run_gap(const GapOpts& opts) {
    const Params params(opts.alpha, opts.beta);
    const GapCertificate cert = gap_lower_bound(params, opts.n0);

    CommandResult result;
    result.config = json{{"alpha", opts.alpha}, {"beta", opts.beta}, {"n0", opts.n0}};
    result.payload = json{{"alpha", params.alpha},
                          {"beta", params.beta},
                          {"delta", cert.delta_value},
                          {"in_region", cert.in_region},
                          {"n0", cert.n0},
                          {"a_tail", cert.a_tail},
                          {"f_norm_bound", cert.f_norm_bound}};
    if (!cert.in_region) {
        result.warnings.push_back("parameters are outside the certified no-crossing region; "
                                  "the gap bound is not positive");
    }
    return result;
}

CommandResult run_crossing(const CrossingOpts& opts) {
    if (opts.branch != 1 && opts.branch != 2) {
        throw ConfigError("branch must be 1 or 2");
    }
    const Branch branch = opts.branch == 1 ? Branch::One : Branch::Two;

    CommandResult result;
    result.config = json{{"branch", opts.branch}, {"n", opts.n},
                         {"width_goal", opts.width_goal}, {"n_max", opts.n_max}};
    const std::vector<Params> grid = build_grid(opts.grid, result.warnings, result.config);
    result.config["grid"] = grid_config(grid);

    const std::vector<CrossingRow> rows =
        crossing_report(branch, opts.n, grid, opts.width_goal, opts.n_max);
    json out = json::array();
    for (const CrossingRow& row : rows) {
        json r{{"alpha", row.params.alpha},
               {"beta", row.params.beta},
               {"certified_no_crossing", row.certified_no_crossing},
               {"enclosures_ok", row.enclosures_ok},
               {"delta", row.delta_lower_bound}};
        if (row.enclosures_ok) {
            r["gap_lower"] = row.gap.lo;
            r["gap_upper"] = row.gap.hi;
        }
        out.push_back(std::move(r));
    }
    result.payload = json{{"rows", std::move(out)}};
    return result;
}

CommandResult run_groundstate(const GroundStateOpts& opts) {
    const Params params(opts.alpha, opts.beta);
    const GroundStateReport report = ground_state_report(params, opts.width_goal);

    CommandResult result;
    result.config = json{{"alpha", opts.alpha}, {"beta", opts.beta},
                         {"width_goal", opts.width_goal}};
    result.payload = json{{"e_plus", interval_json(report.e_plus)},
                          {"e_minus", interval_json(report.e_minus)},
                          {"even", report.even},
                          {"simple", report.simple},
                          {"sectors",
                           json{{"+1", enclosure_json(report.plus_one)},
                                {"+2", enclosure_json(report.plus_two)},
                                {"-1", enclosure_json(report.minus_one)},
                                {"-2", enclosure_json(report.minus_two)}}}};
    if (params.degenerate()) {
        result.warnings.push_back("alpha == beta: branch spectra coincide, the ground level is "
                                  "branch-degenerate by construction");
    }
    return result;
}

CommandResult run_verify(const VerifyOpts& opts) {
    const Params params(opts.alpha, opts.beta);

    CommandResult result;
    result.config = json{{"alpha", opts.alpha}, {"beta", opts.beta},
                         {"width_goal", opts.width_goal}, {"bands", opts.bands},
                         {"positivity_N", opts.positivity_N}};
    json checks = json::array();
    bool all_pass = true;
    auto add = [&](const std::string& name, bool pass, json detail) {
        json entry{{"name", name}, {"pass", pass}};
        for (auto& [k, v] : detail.items()) entry[k] = v;
        checks.push_back(std::move(entry));
        all_pass = all_pass && pass;
    };

    const GroundStateReport gs = ground_state_report(params, opts.width_goal);
    add("ground-even", gs.even,
        json{{"e_plus", interval_json(gs.e_plus)}, {"e_minus", interval_json(gs.e_minus)}});
    if (params.degenerate()) {
        const bool overlap =
            gs.plus_one.lower <= gs.plus_two.upper && gs.plus_two.lower <= gs.plus_one.upper;
        add("ground-branch-degenerate", overlap, json{});
    } else {
        add("ground-simple", gs.simple, json{});
    }

    for (std::size_t n = 1; n <= opts.bands; ++n) {
        const BandCheck band = pair_band_check(params, n, opts.width_goal);
        add("band-n" + std::to_string(n), band.holds,
            json{{"band_lower", band.band_lo}, {"band_upper", band.band_hi},
                 {"strict", band.strict}});
    }

    for (SectorId sector : all_sectors()) {
        const PositivityReport rep = positivity_report(sector, params, opts.positivity_N);
        add("positive-ground-" + sector_label(sector),
            rep.strictly_positive && rep.residual <= 1e-8,
            json{{"min_component", rep.min_component}, {"residual", rep.residual}});
    }

    const GapCertificate cert = gap_lower_bound(params);
    for (int branch = 1; branch <= 2; ++branch) {
        const std::vector<CrossingRow> rows =
            crossing_report(branch == 1 ? Branch::One : Branch::Two, 0, {params},
                            opts.width_goal);
        const CrossingRow& row = rows.front();
        bool pass = row.enclosures_ok && row.certified_no_crossing;
        if (pass && cert.in_region) {
            // The measured gap must respect the certificate up to interval widths.
            pass = row.gap.lo >= cert.delta_value - (row.gap.hi - row.gap.lo);
        }
        add("no-crossing-branch" + std::to_string(branch), pass,
            json{{"gap_lower", row.gap.lo}, {"delta", cert.delta_value}});
    }

    result.payload = json{{"checks", std::move(checks)}, {"all_pass", all_pass}};
    return result;
}

CommandResult run_repro(const ReproOpts& opts) {
    if (opts.example != "6.2") {
        throw ConfigError("unknown reproduction case '" + opts.example +
                          "' (available: 6.2)");
    }
    const Params params(1.0, 2.0);
    const SectorId sector{Parity::Plus, Branch::One};
    constexpr std::uint64_t N = 10;
    constexpr double tol = 1e-10;

    json rows = json::array();
    for (std::uint64_t n = 0; n <= 3; ++n) {
        const Enclosure e = enclose(sector, params, n, N, tol);
        rows.push_back(json{{"n", n},
                            {"lower", e.lower},
                            {"upper", e.upper},
                            {"certified", e.certified}});
    }

    CommandResult result;
    result.config = json{{"example", opts.example}};
    result.payload = json{{"case", opts.example},
                          {"alpha", params.alpha},
                          {"beta", params.beta},
                          {"N", N},
                          {"sector", sector_label(sector)},
                          {"bisection_tol", tol},
                          {"cap", certification_cap(sector, params, N)},
                          {"rows", std::move(rows)}};
    return result;
}

std::string repro_table(const json& payload) {
    std::string out;
    out += "nchospec repro case " + payload["case"].get<std::string>() + "\n";
    out += "alpha=" + fmt17(payload["alpha"].get<double>()) +
           " beta=" + fmt17(payload["beta"].get<double>()) +
           " N=" + std::to_string(payload["N"].get<std::uint64_t>()) +
           " sector=" + payload["sector"].get<std::string>() +
           " bisection_tol=" + fmt17(payload["bisection_tol"].get<double>()) + "\n";
    out += "cap = " + fmt17(payload["cap"].get<double>()) + "\n";
    out += "  n  certified  lower                    upper\n";
    for (const json& row : payload["rows"]) {
        const std::string lower = fmt17(row["lower"].get<double>());
        const std::string upper = fmt17(row["upper"].get<double>());
        std::string line = "  " + std::to_string(row["n"].get<std::uint64_t>());
        line += row["certified"].get<bool>() ? "  yes        " : "  no         ";
        line += lower;
        line.append(lower.size() < 25 ? 25 - lower.size() : 1, ' ');
        line += upper;
        out += line + "\n";
    }
    out += "uncertified rows bound the truncated matrix only, not the operator\n";
    return out;
}

} // namespace ncho::cli
