#pragma once

#include "nchospec/params.hpp"

#include <cstddef>
#include <vector>

namespace ncho {

/// Certified lower bound on the odd-even sector gap.
///
/// For admissible (alpha, beta) with sqrt(alpha*beta) > 1 + 1/(4*n0)^2, every
/// odd-sector eigenvalue exceeds the even-sector eigenvalue of the same index
/// and branch by at least `delta_value`. The bound rests on the weight
/// recursion run to n0 and the resulting coupling norm bound.
struct GapCertificate {
    Params params;
    double delta_value;    // certified gap lower bound; positive inside the region
    std::size_t n0;        // recursion depth backing the norm bound
    double a_tail;         // final recursion weight, must exceed 1
    double f_norm_bound;   // bound on the norm of the scaled coupling operator
    bool in_region;        // sqrt(alpha*beta) > 1 + 1/(4*n0)^2
};

/// Difference of consecutive off-diagonal magnitudes between the odd and
/// even sector matrices:
///   gamma(n) = sqrt((2n+2)(2n+3)) - sqrt((2n+1)(2n+2)).
/// Computed in cancellation-free form; strictly positive, strictly
/// decreasing, and gamma(n-1)^2 == 1 + 1/(2n + sqrt(4n^2-1))^2.
double coupling_gap(std::size_t n);

/// Weight sequence a_0 = 2, a_n = 2 - gamma(n-1)^2 / a_{n-1} for n = 1..n0.
/// Returns all n0+1 values. Throws RecursionCheckFailed (with the first
/// violating index) if any a_n <= 0 for n < n0 or a_n0 <= 1.
std::vector<double> splitting_weights(std::size_t n0);

/// Norm bound 1 + gamma(n0)^2 for the zero-diagonal coupling matrix, valid
/// once splitting_weights(n0) passes its checks. Also asserts
/// gamma(n0)^2 < 1 + 1/(4*n0)^2, so the result is below 2 + 1/(4*n0)^2.
double coupling_norm_bound(std::size_t n0);

/// Gap certificate with
///   delta_value = min{sqrt(alpha/beta), sqrt(beta/alpha)}
///                 * (sqrt(alpha*beta) - 1 - 1/(4*n0)^2).
/// The default n0 = 10000 gives the margin constant 1/1600000000.
GapCertificate gap_lower_bound(const Params& params, std::size_t n0 = 10000);

} // namespace ncho
