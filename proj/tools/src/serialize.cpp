#include "serialize.hpp"

#include <nchospec/errors.hpp>
#include <nchospec/version.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace ncho::cli {

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "tsv-plot") return Format::TsvPlot;
    throw ConfigError("unknown output format '" + text + "' (expected json, csv or tsv-plot)");
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void csv_cell(std::string& out, const json& value) {
    if (value.is_number_float()) {
        out += fmt17(value.get<double>());
    } else if (value.is_string()) {
        out += value.get<std::string>();
    } else {
        out += value.dump();
    }
}

} // namespace

json make_envelope(const std::string& command, json config, json payload,
                   const std::vector<std::string>& warnings) {
    json env;
    env["tool"] = {{"name", "nchospec"}, {"version", ncho::version}};
    env["command"] = command;
    env["config"] = std::move(config);
    env["timestamp"] = utc_timestamp();
    env["warnings"] = warnings;
    env["payload"] = std::move(payload);
    return env;
}

std::string to_csv(const json& payload) {
    // A payload with exactly one array-of-objects member becomes a table of
    // its rows; everything else becomes a single-row table of scalars.
    const json* rows = nullptr;
    for (const auto& [key, value] : payload.items()) {
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            rows = &value;
            break;
        }
    }

    std::string out;
    if (rows != nullptr) {
        bool first = true;
        for (const auto& [key, value] : rows->front().items()) {
            if (!first) out += ',';
            out += key;
            first = false;
        }
        out += '\n';
        for (const json& row : *rows) {
            first = true;
            for (const auto& [key, value] : row.items()) {
                if (!first) out += ',';
                csv_cell(out, value);
                first = false;
            }
            out += '\n';
        }
        return out;
    }

    bool first = true;
    std::string header, line;
    for (const auto& [key, value] : payload.items()) {
        if (value.is_object() || value.is_array()) continue;
        if (!first) {
            header += ',';
            line += ',';
        }
        header += key;
        csv_cell(line, value);
        first = false;
    }
    return header + '\n' + line + '\n';
}

std::string plot_data_string(const std::vector<CurvePoint>& points) {
    if (points.empty()) {
        throw ConfigError("no certified points to emit");
    }
    std::string out = "alpha\tbeta\tn\tlower\tupper\tmidpoint\n";
    for (const CurvePoint& p : points) {
        out += fmt17(p.params.alpha);
        out += '\t';
        out += fmt17(p.params.beta);
        out += '\t';
        out += std::to_string(p.enclosure.index);
        out += '\t';
        out += fmt17(p.enclosure.lower);
        out += '\t';
        out += fmt17(p.enclosure.upper);
        out += '\t';
        out += fmt17(p.enclosure.mid());
        out += '\n';
    }
    return out;
}

void emit_plot_data(const std::vector<CurvePoint>& points, const std::string& path) {
    const std::string text = plot_data_string(points);  // validates before any I/O
    std::ofstream file(path);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    file << text;
    if (!file.good()) {
        throw IoError("write to '" + path + "' failed");
    }
}

std::string resolve_out_path(const std::string& path) {
    if (path.empty()) return path;
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    const char* base = std::getenv("NCHOSPEC_OUT_DIR");
    if (base == nullptr || *base == '\0') return path;
    return (std::filesystem::path(base) / p).string();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    const std::string resolved = resolve_out_path(path);
    std::ofstream file(resolved);
    if (!file) {
        throw IoError("cannot open '" + resolved + "' for writing");
    }
    file << text;
    if (!file.good()) {
        throw IoError("write to '" + resolved + "' failed");
    }
}

} // namespace ncho::cli
