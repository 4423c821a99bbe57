#include "nchospec/analysis.hpp"

#include "nchospec/eigensolve.hpp"
#include "nchospec/errors.hpp"
#include "nchospec/gapcert.hpp"
#include "nchospec/jacobi.hpp"
#include "nchospec/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

namespace ncho {

namespace {

constexpr double kGroundTol = 1e-12;

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double residual_norm(const SymTridiag& T, const std::vector<double>& v, double lambda) {
    const std::size_t n = T.dim();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = (T.diag[i] - lambda) * v[i];
        if (i > 0) r += T.offdiag[i - 1] * v[i - 1];
        if (i + 1 < n) r += T.offdiag[i] * v[i + 1];
        sum += r * r;
    }
    return std::sqrt(sum);
}

// Ground eigenvector with a trustworthy tail.
//
// Inverse iteration resolves components down to roughly 1e-12 of the peak;
// below that the values are rounding noise with arbitrary sign. The noise
// region is replaced by the decaying solution of the three-term recurrence,
// run backward from the last row (the stable direction) with explicit
// exponent tracking so the huge dynamic range cannot overflow. The two parts
// are matched at the last trustworthy component.
std::vector<double> stabilized_ground_vector(const SymTridiag& T, double lambda,
                                             double& residual_out) {
    const std::size_t n = T.dim();
    EigVector ev = eigenvector(T, lambda);
    std::vector<double> v = std::move(ev.components);

    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::abs(x));
    const double trust = 1e-12 * peak;

    std::size_t c = n - 1;
    while (c > 0 && std::abs(v[c]) < trust) --c;

    if (c + 1 < n) {
        std::vector<double> m(n, 0.0);
        std::vector<std::int64_t> ex(n, 0);
        auto renorm = [&](std::size_t j) {
            if (m[j] == 0.0) return;
            int e2 = 0;
            m[j] = std::frexp(m[j], &e2);
            ex[j] += e2;
        };
        m[n - 1] = 1.0;
        renorm(n - 1);
        // Row n-1 fixes the seed ratio; rows n-2..c+1 propagate it downward.
        m[n - 2] = -(T.diag[n - 1] - lambda) * m[n - 1] / T.offdiag[n - 2];
        ex[n - 2] = ex[n - 1];
        renorm(n - 2);
        for (std::size_t j = n - 2; j > c; --j) {
            const double above = std::ldexp(m[j + 1], static_cast<int>(ex[j + 1] - ex[j]));
            m[j - 1] = -((T.diag[j] - lambda) * m[j] + T.offdiag[j] * above) / T.offdiag[j - 1];
            ex[j - 1] = ex[j];
            renorm(j - 1);
        }
        for (std::size_t j = c + 1; j < n; ++j) {
            const std::int64_t shift = ex[j] - ex[c];
            const double q = v[c] * (m[j] / m[c]);
            v[j] = (shift > -1074) ? std::ldexp(q, static_cast<int>(shift)) : 0.0;
        }
    }

    const double nrm = norm2(v);
    for (double& x : v) x /= nrm;
    for (double x : v) {
        if (x != 0.0) {
            if (x < 0.0) {
                for (double& y : v) y = -y;
            }
            break;
        }
    }
    residual_out = residual_norm(T, v, lambda);
    return v;
}

} // namespace

MergedSpectrum merged_spectrum(const Params& params, std::size_t count,
                               double width_goal, std::uint64_t N_max) {
    if (count < 1) {
        throw ConfigError("merged spectrum needs count >= 1");
    }
    const std::size_t per_sector = (count + 3) / 4 + 2;

    std::vector<SpectrumLine> lines;
    lines.reserve(4 * per_sector);
    for (SectorId sector : all_sectors()) {
        std::uint64_t n_start = 0;
        for (std::size_t k = 0; k < per_sector; ++k) {
            const Enclosure e =
                enclose_auto(sector, params, k, width_goal, N_max, n_start);
            n_start = e.N;  // larger indices never certify at smaller N
            lines.push_back(SpectrumLine{e.lower, e.upper, sector, e.index, 0, false});
        }
    }

    std::sort(lines.begin(), lines.end(), [](const SpectrumLine& x, const SpectrumLine& y) {
        if (x.mid() != y.mid()) return x.mid() < y.mid();
        if (sector_order(x.sector) != sector_order(y.sector)) {
            return sector_order(x.sector) < sector_order(y.sector);
        }
        return x.sector_index < y.sector_index;
    });

    lines.resize(std::min(count, lines.size()));

    MergedSpectrum out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        lines[i].global_rank = i;
        lines[i].overlaps_previous =
            i > 0 && lines[i].interval().overlaps(lines[i - 1].interval());
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[j].lower > lines[i].upper) break;
            out.degenerate_pairs.emplace_back(i, j);
        }
    }
    out.lines = std::move(lines);
    return out;
}

GroundStateReport ground_state_report(const Params& params, double width_goal) {
    const Enclosure p1 = enclose_auto({Parity::Plus, Branch::One}, params, 0, width_goal);
    const Enclosure p2 = enclose_auto({Parity::Plus, Branch::Two}, params, 0, width_goal);
    const Enclosure m1 = enclose_auto({Parity::Minus, Branch::One}, params, 0, width_goal);
    const Enclosure m2 = enclose_auto({Parity::Minus, Branch::Two}, params, 0, width_goal);

    // Interval for min(x, y) given intervals for x and y.
    const Interval e_plus{std::min(p1.lower, p2.lower), std::min(p1.upper, p2.upper)};
    const Interval e_minus{std::min(m1.lower, m2.lower), std::min(m1.upper, m2.upper)};

    const bool even = e_plus.hi < e_minus.lo;
    const bool branch_disjoint = p1.upper < p2.lower || p2.upper < p1.lower;
    const bool simple = even && branch_disjoint;
    return GroundStateReport{e_plus, e_minus, even, simple, p1, p2, m1, m2};
}

BandCheck pair_band_check(const Params& params, std::size_t n, double width_goal) {
    if (n < 1) {
        throw ConfigError("band check needs n >= 1");
    }
    const MergedSpectrum spec = merged_spectrum(params, 2 * n, width_goal);
    const SpectrumLine& low = spec.lines.at(2 * n - 2);
    const SpectrumLine& high = spec.lines.at(2 * n - 1);

    const double ab = params.alpha * params.beta;
    const double s = std::sqrt((ab - 1.0) / ab);
    const double factor = static_cast<double>(n) - 0.5;
    const double band_lo = factor * std::min(params.alpha, params.beta) * s;
    const double band_hi = factor * std::max(params.alpha, params.beta) * s;

    // A violation is certified only when an enclosure lies entirely outside
    // the band; at alpha == beta the band is a single point and strict
    // containment is impossible for intervals of positive width.
    const bool holds = low.upper >= band_lo && high.lower <= band_hi;
    const bool strict = low.lower >= band_lo && high.upper <= band_hi;
    return BandCheck{n, band_lo, band_hi, low, high, holds, strict};
}

PositivityReport positivity_report(SectorId sector, const Params& params, std::uint64_t N) {
    if (N < 2) {
        throw ConfigError("positivity check needs N >= 2");
    }
    const SymTridiag T = build_truncation(sector, params, N);
    const EigenBracket ground = eigenvalue(T, 0, kGroundTol);

    double residual = 0.0;
    const std::vector<double> v = stabilized_ground_vector(T, ground.mid(), residual);
    if (residual > 1e-8) {
        throw NoConvergence("stabilized ground vector residual " + std::to_string(residual) +
                            " above 1e-8");
    }

    double min_comp = std::numeric_limits<double>::infinity();
    bool positive = true;
    for (double x : v) {
        min_comp = std::min(min_comp, x);
        positive = positive && x > 0.0;
    }
    return PositivityReport{positive, min_comp, residual, T.dim()};
}

bool positivity_check(SectorId sector, const Params& params, std::uint64_t N) {
    return positivity_report(sector, params, N).strictly_positive;
}

CurveTrace trace_curve(SectorId sector, std::uint64_t n, const std::vector<Params>& grid,
                       double width_goal, std::uint64_t N_max) {
    if (grid.empty()) {
        throw ConfigError("curve tracing needs a nonempty parameter grid");
    }
    CurveTrace trace;
    trace.points.reserve(grid.size());
    std::uint64_t warm_start = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        try {
            const Enclosure e = enclose_auto(sector, grid[i], n, width_goal, N_max, warm_start);
            warm_start = e.N;
            trace.points.push_back(CurvePoint{grid[i], e});
        } catch (const NotCertifiable&) {
            trace.dropped.push_back(i);
        }
    }
    return trace;
}

std::vector<CrossingRow> crossing_report(Branch branch, std::uint64_t n,
                                         const std::vector<Params>& grid,
                                         double width_goal, std::uint64_t N_max) {
    if (grid.empty()) {
        throw ConfigError("crossing report needs a nonempty parameter grid");
    }
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<CrossingRow> rows;
    rows.reserve(grid.size());
    for (const Params& p : grid) {
        const double delta = gap_lower_bound(p).delta_value;
        try {
            const Enclosure odd = enclose_auto({Parity::Minus, branch}, p, n, width_goal, N_max);
            const Enclosure even = enclose_auto({Parity::Plus, branch}, p, n, width_goal, N_max);
            const Interval gap{odd.lower - even.upper, odd.upper - even.lower};
            rows.push_back(CrossingRow{p, gap, gap.lo > 0.0, true, delta});
        } catch (const NotCertifiable&) {
            rows.push_back(CrossingRow{p, Interval{nan, nan}, false, false, delta});
        }
    }
    return rows;
}

} // namespace ncho
