#pragma once

#include "nchospec/enclosure.hpp"
#include "nchospec/params.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ncho {

/// Closed real interval.
struct Interval {
    double lo;
    double hi;

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool disjoint_below(const Interval& other) const { return hi < other.lo; }
    bool overlaps(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }
};

/// One line of the merged spectrum, with sector provenance.
///
/// Global ranks sort certified intervals by midpoint; when two intervals
/// overlap the rank order is a deterministic tie-break (sector order
/// +1, +2, -1, -2), not a proof of ordering, and the pair is flagged.
struct SpectrumLine {
    double lower;
    double upper;
    SectorId sector;
    std::uint64_t sector_index;
    std::size_t global_rank;
    bool overlaps_previous;

    Interval interval() const { return {lower, upper}; }
    double mid() const { return 0.5 * (lower + upper); }
};

/// Merged spectrum plus the flagged potentially-degenerate pairs.
struct MergedSpectrum {
    std::vector<SpectrumLine> lines;
    std::vector<std::pair<std::size_t, std::size_t>> degenerate_pairs;
};

/// Lowest `count` eigenvalue lines of the full operator, merged from
/// certified per-sector enclosures (indices 0 .. ceil(count/4)+1 in each of
/// the four sectors). Propagates NotCertifiable.
MergedSpectrum merged_spectrum(const Params& params, std::size_t count,
                               double width_goal, std::uint64_t N_max = 8192);

/// Ground-state structure report.
///
/// `even`:   the lowest even-parity interval lies strictly below the lowest
///           odd-parity interval.
/// `simple`: even, and the two even-branch ground intervals are disjoint
///           (at alpha == beta they coincide and the flag is false).
struct GroundStateReport {
    Interval e_plus;
    Interval e_minus;
    bool even;
    bool simple;
    Enclosure plus_one;
    Enclosure plus_two;
    Enclosure minus_one;
    Enclosure minus_two;
};

GroundStateReport ground_state_report(const Params& params, double width_goal);

/// Result of checking one eigenvalue pair against its closed-form band
///   [(n-1/2) min(a,b) s, (n-1/2) max(a,b) s],  s = sqrt((ab-1)/(ab)),
/// which must contain the (2n-1)-th and (2n)-th smallest eigenvalues
/// (1-based; global ranks 2n-2 and 2n-1 here).
///
/// `holds` is the certified-consistency verdict: false only when an
/// enclosure lies entirely outside the band, proving a violation. `strict`
/// additionally requires both enclosures entirely inside the band; it is
/// unattainable at alpha == beta, where the band degenerates to a point.
struct BandCheck {
    std::size_t n;
    double band_lo;
    double band_hi;
    SpectrumLine low_line;
    SpectrumLine high_line;
    bool holds;
    bool strict;
};

BandCheck pair_band_check(const Params& params, std::size_t n, double width_goal);

/// Ground-vector positivity of a truncation.
struct PositivityReport {
    bool strictly_positive;  // every component > 0 after sign normalization
    double min_component;
    double residual;         // ||T v - lambda v|| of the reported vector
    std::size_t dim;
};

/// Check that the ground eigenvector of the (N+1)-dimensional truncation is
/// strictly positive. Components below the inverse-iteration noise floor are
/// reconstructed with a scale-tracked backward recurrence, so reported signs
/// are meaningful down to the underflow threshold of double precision.
/// Requires N >= 2. Throws NoConvergence if the residual target is missed.
PositivityReport positivity_report(SectorId sector, const Params& params, std::uint64_t N);

/// positivity_report(...).strictly_positive with the residual gate applied.
bool positivity_check(SectorId sector, const Params& params, std::uint64_t N);

/// A certified point on an eigenvalue-curve.
struct CurvePoint {
    Params params;
    Enclosure enclosure;
};

/// Curve trace over a parameter grid; grid points whose enclosure could not
/// be certified within the size budget are omitted and listed in `dropped`.
struct CurveTrace {
    std::vector<CurvePoint> points;
    std::vector<std::size_t> dropped;  // indices into the input grid
};

/// Certified points of the n-th eigenvalue-curve of one sector, in grid
/// order. Consecutive points reuse the previous truncation size as the
/// starting guess.
CurveTrace trace_curve(SectorId sector, std::uint64_t n, const std::vector<Params>& grid,
                       double width_goal, std::uint64_t N_max = 8192);

/// Crossing analysis for the pair of curves (odd sector, even sector) of one
/// branch at one grid point.
struct CrossingRow {
    Params params;
    Interval gap;               // [lower(odd) - upper(even), upper(odd) - lower(even)]
    bool certified_no_crossing; // gap.lo > 0
    bool enclosures_ok;         // both enclosures certified within the budget
    double delta_lower_bound;   // certificate value for comparison
};

std::vector<CrossingRow> crossing_report(Branch branch, std::uint64_t n,
                                         const std::vector<Params>& grid,
                                         double width_goal, std::uint64_t N_max = 8192);

} // namespace ncho
