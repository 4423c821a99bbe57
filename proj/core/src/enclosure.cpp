#include "nchospec/enclosure.hpp"

#include "nchospec/eigensolve.hpp"
#include "nchospec/errors.hpp"
#include "nchospec/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ncho {

namespace {

double nudge_down(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) {
        x = std::nextafter(x, -std::numeric_limits<double>::infinity());
    }
    return x;
}

double nudge_up(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) {
        x = std::nextafter(x, std::numeric_limits<double>::infinity());
    }
    return x;
}

// Bisection tolerance used when only a target interval width is given.
double tol_for_width(double width_goal) {
    return std::clamp(width_goal / 8.0, 1e-13, 1e-6);
}

} // namespace

double certification_cap(SectorId sector, const Params& params, std::uint64_t N) {
    double a = params.alpha;
    double b = params.beta;
    if (sector.branch == Branch::Two) std::swap(a, b);

    const double nn = static_cast<double>(N);
    const double c1 = (sector.parity == Parity::Plus ? 1.5 : 2.5) + 2.0 * nn;
    const double c2 = (sector.parity == Parity::Plus ? 3.5 : 4.5) + 2.0 * nn;
    // The alpha/beta roles exchange with the parity of N.
    const double m = (N % 2 == 0) ? std::min(c1 / a, c2 / b) : std::min(c1 / b, c2 / a);
    return 0.5 * (params.alpha * params.beta - 1.0) * m;
}

double corner_shift(SectorId sector, const Params& params, std::uint64_t N) {
    double a = params.alpha;
    double b = params.beta;
    if (sector.branch == Branch::Two) std::swap(a, b);
    const double weight = (N % 2 == 0) ? a : b;
    return 0.5 * weight * std::abs(offdiag_entry(sector.parity, N));
}

Enclosure enclose(SectorId sector, const Params& params, std::uint64_t n,
                  std::uint64_t N, double tol) {
    if (n > N) {
        throw IndexOutOfRange("eigenvalue index " + std::to_string(n) +
                              " exceeds truncation parameter " + std::to_string(N));
    }
    const double shift = corner_shift(sector, params, N);
    SymTridiag T = build_truncation(sector, params, N);

    const double corner = T.diag[N];
    T.diag[N] = corner + shift;
    const EigenBracket up = eigenvalue(T, static_cast<std::size_t>(n), tol);
    T.diag[N] = corner - shift;
    const EigenBracket down = eigenvalue(T, static_cast<std::size_t>(n), tol);

    const double lower = nudge_down(down.lo, 4);
    const double upper = nudge_up(up.hi, 4);
    const double cap = certification_cap(sector, params, N);
    // Conservative slack so the comparison itself cannot flip on rounding.
    const bool certified = upper <= cap - std::abs(cap) * 1e-13;
    return Enclosure{sector, n, lower, upper, N, cap, certified, tol};
}

Enclosure enclose_auto(SectorId sector, const Params& params, std::uint64_t n,
                       double width_goal, std::uint64_t N_max, std::uint64_t N_start) {
    if (!(width_goal > 0.0)) {
        throw ConfigError("width goal must be positive");
    }
    std::uint64_t N = std::max<std::uint64_t>(2 * n + 4, 16);
    N = std::max(N, N_start);
    if (N_max < N) {
        throw NotCertifiable("size budget N_max=" + std::to_string(N_max) +
                             " below the minimal truncation " + std::to_string(N));
    }
    const double tol = tol_for_width(width_goal);
    for (;;) {
        const Enclosure e = enclose(sector, params, n, N, tol);
        if (e.certified && e.width() <= width_goal) {
            return e;
        }
        if (N == N_max) break;
        N = std::min(N * 2, N_max);
    }
    throw NotCertifiable("no certified enclosure of width <= " + std::to_string(width_goal) +
                         " for sector " + sector_label(sector) + ", index " + std::to_string(n) +
                         " within N_max=" + std::to_string(N_max));
}

} // namespace ncho
