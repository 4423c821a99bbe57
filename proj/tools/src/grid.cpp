#include "grid.hpp"

#include <nchospec/errors.hpp>

#include <cstdlib>
#include <sstream>

namespace ncho::cli {

namespace {

double parse_double(const std::string& text, const char* what) {
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') {
        throw ConfigError(std::string("cannot parse ") + what + " from '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

} // namespace

RangeSpec parse_range(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw ConfigError("range spec must be lo:hi:steps, got '" + text + "'");
    }
    RangeSpec r{parse_double(parts[0], "range lower end"),
                parse_double(parts[1], "range upper end"),
                static_cast<std::size_t>(std::strtoull(parts[2].c_str(), nullptr, 10))};
    if (r.steps < 1) {
        throw ConfigError("range needs at least one step: '" + text + "'");
    }
    if (r.steps > 1 && !(r.hi > r.lo)) {
        throw ConfigError("range upper end must exceed lower end: '" + text + "'");
    }
    return r;
}

std::vector<double> expand_range(const RangeSpec& range) {
    std::vector<double> values(range.steps);
    if (range.steps == 1) {
        values[0] = range.lo;
        return values;
    }
    const double step = (range.hi - range.lo) / static_cast<double>(range.steps - 1);
    for (std::size_t i = 0; i < range.steps; ++i) {
        values[i] = range.lo + step * static_cast<double>(i);
    }
    values.back() = range.hi;
    return values;
}

std::vector<std::pair<double, double>> parse_points(const std::string& text) {
    std::vector<std::pair<double, double>> points;
    for (const std::string& item : split(text, ';')) {
        if (item.empty()) continue;
        const auto coords = split(item, ',');
        if (coords.size() != 2) {
            throw ConfigError("point must be alpha,beta, got '" + item + "'");
        }
        points.emplace_back(parse_double(coords[0], "alpha"), parse_double(coords[1], "beta"));
    }
    if (points.empty()) {
        throw ConfigError("point list '" + text + "' is empty");
    }
    return points;
}

std::vector<Params> make_grid(const std::vector<std::pair<double, double>>& raw,
                              std::vector<std::string>& warnings) {
    std::vector<Params> grid;
    grid.reserve(raw.size());
    for (const auto& [a, b] : raw) {
        if (a > 0.0 && b > 0.0 && a * b > 1.0) {
            grid.emplace_back(a, b);
        } else {
            warnings.push_back("skipped inadmissible point alpha=" + std::to_string(a) +
                               " beta=" + std::to_string(b) + " (need alpha,beta>0, alpha*beta>1)");
        }
    }
    if (grid.empty()) {
        throw ConfigError("no admissible grid points (every point violates alpha*beta>1)");
    }
    return grid;
}

std::vector<std::pair<double, double>> cartesian(const std::vector<double>& alphas,
                                                 const std::vector<double>& betas) {
    std::vector<std::pair<double, double>> out;
    out.reserve(alphas.size() * betas.size());
    for (double a : alphas) {
        for (double b : betas) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

} // namespace ncho::cli
