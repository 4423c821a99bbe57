#pragma once

#include <nchospec/analysis.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace ncho::cli {

using json = nlohmann::ordered_json;

/// Output formats supported by the tool.
enum class Format { Json, Csv, TsvPlot };

Format parse_format(const std::string& text);

/// Double formatted with 17 significant digits (round-trip exact).
std::string fmt17(double x);

/// Versioned envelope around a command payload. The payload is fully
/// deterministic for a fixed config; only the timestamp varies between runs.
json make_envelope(const std::string& command, json config, json payload,
                   const std::vector<std::string>& warnings);

/// Flatten a payload into CSV. Payloads with a row array become one line per
/// row; scalar payloads become a single line.
std::string to_csv(const json& payload);

/// Tab-separated plot data: alpha beta n lower upper midpoint, one row per
/// certified point, grid order. Throws IoError on write failure and
/// ConfigError when `points` is empty (no file is created).
void emit_plot_data(const std::vector<CurvePoint>& points, const std::string& path);

/// Same rows as emit_plot_data, as a string (used for stdout output).
std::string plot_data_string(const std::vector<CurvePoint>& points);

/// Resolve an output path against the NCHOSPEC_OUT_DIR environment variable
/// (applied to relative paths only).
std::string resolve_out_path(const std::string& path);

/// Write `text` to `path` (resolved), or to stdout when path is empty.
void write_output(const std::string& path, const std::string& text);

} // namespace ncho::cli
