#pragma once

#include <nchospec/params.hpp>

#include <string>
#include <vector>

namespace ncho::cli {

/// Inclusive range lo:hi:steps, parsed from the command line.
struct RangeSpec {
    double lo;
    double hi;
    std::size_t steps;
};

RangeSpec parse_range(const std::string& text);

/// Evenly spaced values of a range (steps == 1 yields just lo).
std::vector<double> expand_range(const RangeSpec& range);

/// Parse an explicit point list "a1,b1;a2,b2;...".
std::vector<std::pair<double, double>> parse_points(const std::string& text);

/// Build a validated parameter grid from raw (alpha, beta) pairs. Pairs that
/// violate the admissibility constraint are skipped, each with a warning.
std::vector<Params> make_grid(const std::vector<std::pair<double, double>>& raw,
                              std::vector<std::string>& warnings);

/// Cartesian product, alpha outer, beta inner.
std::vector<std::pair<double, double>> cartesian(const std::vector<double>& alphas,
                                                 const std::vector<double>& betas);

} // namespace ncho::cli
