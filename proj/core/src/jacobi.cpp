#include "nchospec/jacobi.hpp"

#include <cmath>
#include <utility>

namespace ncho {

double offdiag_entry(Parity parity, std::uint64_t n) {
    // Products are formed in floating point so very large n cannot overflow
    // the integer range.
    const double m = static_cast<double>(n);
    if (parity == Parity::Plus) {
        return -std::sqrt((2.0 * m + 1.0) * (2.0 * m + 2.0));
    }
    return -std::sqrt((2.0 * m + 2.0) * (2.0 * m + 3.0));
}

double diag_entry(SectorId sector, const Params& params, std::uint64_t n) {
    const double base = (sector.parity == Parity::Plus ? 1.0 : 3.0) + 4.0 * static_cast<double>(n);
    double even_weight = params.alpha;
    double odd_weight = params.beta;
    if (sector.branch == Branch::Two) {
        std::swap(even_weight, odd_weight);
    }
    return (n % 2 == 0 ? even_weight : odd_weight) * base;
}

SymTridiag build_truncation(SectorId sector, const Params& params, std::uint64_t N) {
    std::vector<double> diag(N + 1);
    std::vector<double> offdiag(N);
    for (std::uint64_t i = 0; i <= N; ++i) {
        diag[i] = 0.5 * diag_entry(sector, params, i);
    }
    for (std::uint64_t i = 0; i < N; ++i) {
        offdiag[i] = 0.5 * offdiag_entry(sector.parity, i);
    }
    return SymTridiag(std::move(diag), std::move(offdiag));
}

} // namespace ncho
