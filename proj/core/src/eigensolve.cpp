#include "nchospec/eigensolve.hpp"

#include "nchospec/errors.hpp"
#include "nchospec/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ncho {

namespace {

double entry_scale(const SymTridiag& T) {
    double scale = 0.0;
    for (double d : T.diag) scale = std::max(scale, std::abs(d));
    for (double e : T.offdiag) scale = std::max(scale, std::abs(e));
    return std::max(scale, 1.0);
}

} // namespace

std::size_t sturm_count(const SymTridiag& T, double x) {
    const double tiny = -std::numeric_limits<double>::epsilon() * entry_scale(T);
    std::size_t count = 0;
    double pivot = T.diag[0] - x;
    if (pivot == 0.0) pivot = tiny;
    if (pivot < 0.0) ++count;
    for (std::size_t i = 1; i < T.dim(); ++i) {
        const double e = T.offdiag[i - 1];
        pivot = (T.diag[i] - x) - e * e / pivot;
        if (pivot == 0.0) pivot = tiny;
        if (pivot < 0.0) ++count;
    }
    return count;
}

std::pair<double, double> gershgorin_bounds(const SymTridiag& T) {
    const std::size_t n = T.dim();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(T.offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(T.offdiag[i]);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
    return {lo, hi};
}

EigenBracket eigenvalue(const SymTridiag& T, std::size_t k, double tol) {
    if (k >= T.dim()) {
        throw IndexOutOfRange("eigenvalue index " + std::to_string(k) +
                              " out of range for dimension " + std::to_string(T.dim()));
    }
    if (!(tol > 0.0)) {
        throw ConfigError("bisection tolerance must be positive");
    }

    auto [lo, hi] = gershgorin_bounds(T);
    // Widen until the bracket invariant holds at both ends: count(lo) <= k
    // and count(hi) >= k+1. One nudge suffices except in pathological cases.
    double margin = std::numeric_limits<double>::epsilon() * entry_scale(T) *
                    static_cast<double>(T.dim() + 1);
    lo -= margin;
    hi += margin;
    while (sturm_count(T, hi) < k + 1) {
        hi += margin;
        margin *= 2.0;
    }
    while (sturm_count(T, lo) > k) {
        lo -= margin;
        margin *= 2.0;
    }

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval no longer splittable
        if (sturm_count(T, mid) >= k + 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return EigenBracket{lo, hi, k};
}

namespace {

// Partial-pivot LU factorization of a shifted tridiagonal matrix, with the
// usual second superdiagonal fill-in, followed by the two triangular solves.
struct TridiagLU {
    std::vector<double> dl;   // multipliers
    std::vector<double> d;    // U main diagonal
    std::vector<double> du;   // U first superdiagonal
    std::vector<double> du2;  // U second superdiagonal
    std::vector<bool> swapped;
    double tiny;

    TridiagLU(const SymTridiag& T, double shift) {
        const std::size_t n = T.dim();
        dl = T.offdiag;
        du = T.offdiag;
        d.resize(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = T.diag[i] - shift;
        du2.assign(n >= 2 ? n - 2 : 0, 0.0);
        swapped.assign(n >= 1 ? n - 1 : 0, false);

        double scale = 1.0;
        for (double v : d) scale = std::max(scale, std::abs(v));
        for (double v : du) scale = std::max(scale, std::abs(v));
        tiny = std::numeric_limits<double>::epsilon() * scale;

        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(d[i]) >= std::abs(dl[i])) {
                if (d[i] == 0.0) d[i] = tiny;
                const double fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
            } else {
                const double fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                const double tmp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = tmp - fact * d[i + 1];
                if (i + 2 < n) {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                swapped[i] = true;
            }
        }
    }

    void solve(std::vector<double>& x) const {
        const std::size_t n = d.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (!swapped[i]) {
                x[i + 1] -= dl[i] * x[i];
            } else {
                std::swap(x[i], x[i + 1]);
                x[i + 1] -= dl[i] * x[i];
            }
        }
        auto piv = [&](std::size_t i) { return d[i] != 0.0 ? d[i] : tiny; };
        x[n - 1] /= piv(n - 1);
        if (n >= 2) {
            x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / piv(n - 2);
        }
        for (std::size_t j = n; j-- > 2;) {
            const std::size_t i = j - 2;
            if (i + 2 < n) {
                x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / piv(i);
            }
        }
    }
};

double apply_residual(const SymTridiag& T, const std::vector<double>& v, double lambda) {
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

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

void normalize_sign(std::vector<double>& v) {
    for (double x : v) {
        if (x != 0.0) {
            if (x < 0.0) {
                for (double& y : v) y = -y;
            }
            return;
        }
    }
}

} // namespace

EigVector eigenvector(const SymTridiag& T, double lambda, unsigned max_iter) {
    const std::size_t n = T.dim();
    constexpr double residual_target = 1e-8;

    TridiagLU lu(T, lambda);
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double residual = apply_residual(T, v, lambda);

    for (unsigned iter = 0; iter < max_iter; ++iter) {
        lu.solve(v);
        const double nrm = norm2(v);
        if (nrm == 0.0 || !std::isfinite(nrm)) {
            // Degenerate solve; restart from a shifted seed.
            for (std::size_t i = 0; i < n; ++i) {
                v[i] = 1.0 / static_cast<double>(i + 1);
            }
            continue;
        }
        for (double& x : v) x /= nrm;
        residual = apply_residual(T, v, lambda);
        if (residual <= residual_target) {
            normalize_sign(v);
            return EigVector{std::move(v), residual};
        }
    }
    throw NoConvergence("inverse iteration residual " + std::to_string(residual) +
                        " above 1e-8 after " + std::to_string(max_iter) + " iterations");
}

std::vector<double> forward_recurrence(SectorId sector, const Params& params,
                                       double lambda, std::uint64_t N) {
    std::vector<double> u(N + 1);
    u[0] = 1.0;
    double prev = 0.0;  // u_{-1}
    for (std::uint64_t n = 0; n < N; ++n) {
        const double a_n = offdiag_entry(sector.parity, n);
        const double b_n = diag_entry(sector, params, n);
        const double a_prev = (n == 0) ? 0.0 : offdiag_entry(sector.parity, n - 1);
        const double next = ((2.0 * lambda - b_n) * u[n] - a_prev * prev) / a_n;
        prev = u[n];
        u[n + 1] = next;
    }
    return u;
}

} // namespace ncho
