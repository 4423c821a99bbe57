#pragma once

#include "nchospec/params.hpp"
#include "nchospec/tridiag.hpp"

#include <cstdint>

namespace ncho {

/// Off-diagonal entry of the semi-infinite sector matrix (before the global
/// 1/2 factor). Always strictly negative:
///   Plus  parity: -sqrt((2n+1)(2n+2))
///   Minus parity: -sqrt((2n+2)(2n+3))
double offdiag_entry(Parity parity, std::uint64_t n);

/// Diagonal entry of the semi-infinite sector matrix (before the global 1/2
/// factor): (1+4n) for Plus parity, (3+4n) for Minus, scaled by alpha at
/// even n and beta at odd n; branch Two exchanges alpha and beta.
double diag_entry(SectorId sector, const Params& params, std::uint64_t n);

/// (N+1)-dimensional truncation of the sector matrix. The global 1/2 factor
/// is applied here and nowhere else: diag[i] = diag_entry(i)/2 for
/// i = 0..N and offdiag[i] = offdiag_entry(i)/2 for i = 0..N-1.
SymTridiag build_truncation(SectorId sector, const Params& params, std::uint64_t N);

} // namespace ncho
