#pragma once

#include "nchospec/params.hpp"

#include <cstdint>

namespace ncho {

/// Two-sided interval for the n-th eigenvalue of a sector, derived from an
/// (N+1)-dimensional truncation with rank-one corner corrections.
///
/// `certified == true` means upper <= cap held (with a conservative relative
/// slack), so the interval is guaranteed to contain the true sector
/// eigenvalue. With the flag down the interval is a best effort only.
///
/// Intervals are reported at "double precision plus outward nudge" rigor:
/// bisection brackets are widened by 4 ulps on each side before being
/// reported, absorbing eigensolver rounding. This is not directed-rounding
/// interval arithmetic.
struct Enclosure {
    SectorId sector;
    std::uint64_t index;   // 0-based eigenvalue index within the sector
    double lower;
    double upper;
    std::uint64_t N;       // truncation parameter; matrix dimension is N+1
    double cap;            // certification threshold for this truncation
    bool certified;
    double bisection_tol;

    double width() const { return upper - lower; }
    double mid() const { return 0.5 * (lower + upper); }
};

/// Certification cap: truncated eigenvalues at or below this threshold
/// correspond to true sector eigenvalues. Grows linearly in N.
double certification_cap(SectorId sector, const Params& params, std::uint64_t N);

/// Magnitude of the rank-one corner correction added to (subtracted from)
/// the last diagonal entry to produce the upper (lower) bound matrix.
/// Strictly positive.
double corner_shift(SectorId sector, const Params& params, std::uint64_t N);

/// Enclosure of the n-th sector eigenvalue from the (N+1)-dimensional
/// truncation: lower from the -shift matrix, upper from the +shift matrix,
/// certified when upper clears the cap. Requires n <= N.
/// Throws IndexOutOfRange if n > N.
Enclosure enclose(SectorId sector, const Params& params, std::uint64_t n,
                  std::uint64_t N, double tol);

/// Grow N (doubling from max(2n+4, 16), or from N_start if larger) until the
/// enclosure is certified and no wider than width_goal.
/// Throws NotCertifiable if that never happens for N <= N_max.
Enclosure enclose_auto(SectorId sector, const Params& params, std::uint64_t n,
                       double width_goal, std::uint64_t N_max = 8192,
                       std::uint64_t N_start = 0);

} // namespace ncho
