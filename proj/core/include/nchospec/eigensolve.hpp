#pragma once

#include "nchospec/params.hpp"
#include "nchospec/tridiag.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ncho {

/// Bisection bracket for the k-th smallest eigenvalue (0-based).
///
/// Contains the eigenvalue provably: the Sturm count at `lo` is <= index
/// and the count at `hi` is >= index+1.
struct EigenBracket {
    double lo;
    double hi;
    std::size_t index;

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
};

/// Unit eigenvector with its 2-norm residual ||T v - lambda v||.
struct EigVector {
    std::vector<double> components;
    double residual;
};

/// Number of eigenvalues of T strictly less than x, via the signed pivot
/// recursion d0 = diag0 - x, di = (diagi - x) - offdiag(i-1)^2 / d(i-1).
/// Zero pivots are replaced by -eps*scale so bisection stays well defined.
std::size_t sturm_count(const SymTridiag& T, double x);

/// Interval [min_i(diag_i - r_i), max_i(diag_i + r_i)] containing every
/// eigenvalue, with r_i the sum of the absolute adjacent off-diagonals.
std::pair<double, double> gershgorin_bounds(const SymTridiag& T);

/// Bracket of width <= tol around the k-th smallest eigenvalue, by bisection
/// on sturm_count starting from the Gershgorin interval. Deterministic.
/// Throws IndexOutOfRange if k >= dim(T).
EigenBracket eigenvalue(const SymTridiag& T, std::size_t k, double tol);

/// Unit eigenvector for an eigenvalue approximation `lambda`, via shifted
/// inverse iteration with partial-pivot tridiagonal solves. The sign is
/// normalized so the first nonzero component is positive.
/// Throws NoConvergence if the residual stays above 1e-8 after max_iter
/// iterations.
EigVector eigenvector(const SymTridiag& T, double lambda, unsigned max_iter = 50);

/// Three-term recurrence u_{n+1} = ((2*lambda - b(n)) u_n - a(n-1) u_{n-1}) / a(n)
/// with u_{-1} = 0, u_0 = 1, run against the unhalved sector entries.
/// Returns (u_0 .. u_N).
///
/// Exposed only as an independent cross-check of eigenvector directions at
/// small N: the recurrence amplifies rounding geometrically and is unusable
/// beyond roughly N = 40.
std::vector<double> forward_recurrence(SectorId sector, const Params& params,
                                       double lambda, std::uint64_t N);

} // namespace ncho
