#include "nchospec/gapcert.hpp"

#include "nchospec/errors.hpp"

#include <cmath>
#include <string>

namespace ncho {

double coupling_gap(std::size_t n) {
    // Cancellation-free form of sqrt((2n+2)(2n+3)) - sqrt((2n+1)(2n+2)):
    // the radicands differ by 2(2n+2).
    const double m = static_cast<double>(n);
    const double hi = std::sqrt((2.0 * m + 2.0) * (2.0 * m + 3.0));
    const double lo = std::sqrt((2.0 * m + 1.0) * (2.0 * m + 2.0));
    return (4.0 * m + 4.0) / (hi + lo);
}

std::vector<double> splitting_weights(std::size_t n0) {
    if (n0 < 1) {
        throw ConfigError("recursion depth n0 must be at least 1");
    }
    std::vector<double> a(n0 + 1);
    a[0] = 2.0;
    for (std::size_t n = 1; n <= n0; ++n) {
        const double g = coupling_gap(n - 1);
        a[n] = 2.0 - g * g / a[n - 1];
        if (n < n0 && !(a[n] > 0.0)) {
            throw RecursionCheckFailed("weight a_" + std::to_string(n) + " not positive", n);
        }
    }
    if (!(a[n0] > 1.0)) {
        throw RecursionCheckFailed("final weight a_" + std::to_string(n0) + " not above 1", n0);
    }
    return a;
}

namespace {

constexpr std::size_t default_depth = 10000;

// The default-depth weight sequence is shared; computed once, never mutated.
const std::vector<double>& default_weights() {
    static const std::vector<double> w = splitting_weights(default_depth);
    return w;
}

double weight_tail(std::size_t n0) {
    if (n0 == default_depth) return default_weights().back();
    return splitting_weights(n0).back();
}

double norm_bound_checked(std::size_t n0) {
    const double g = coupling_gap(n0);
    const double g2 = g * g;
    const double margin = 1.0 / (16.0 * static_cast<double>(n0) * static_cast<double>(n0));
    if (!(g2 < 1.0 + margin)) {
        throw RecursionCheckFailed("gamma(n0)^2 not below 1 + 1/(4 n0)^2", n0);
    }
    return 1.0 + g2;
}

} // namespace

double coupling_norm_bound(std::size_t n0) {
    weight_tail(n0);  // side conditions must hold for the bound to apply
    return norm_bound_checked(n0);
}

GapCertificate gap_lower_bound(const Params& params, std::size_t n0) {
    const double a_tail = weight_tail(n0);
    const double norm_bound = norm_bound_checked(n0);

    const double margin = 1.0 / (16.0 * static_cast<double>(n0) * static_cast<double>(n0));
    const double root = std::sqrt(params.alpha * params.beta);
    const double ratio = std::min(std::sqrt(params.alpha / params.beta),
                                  std::sqrt(params.beta / params.alpha));
    const double delta = ratio * (root - 1.0 - margin);
    const bool in_region = root > 1.0 + margin;

    return GapCertificate{params, delta, n0, a_tail, norm_bound, in_region};
}

} // namespace ncho
