#pragma once

#include "nchospec/errors.hpp"

#include <array>
#include <string>
#include <string_view>

namespace ncho {

/// Oscillator parameter pair (alpha, beta).
///
/// Admissible parameters satisfy alpha > 0, beta > 0 and alpha*beta > 1.
/// alpha == beta is admissible but degenerate: the operator reduces to a
/// pair of identical harmonic oscillators and branch spectra coincide.
struct Params {
    double alpha;
    double beta;

    Params(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
        if (!(alpha > 0.0) || !(beta > 0.0) || !(alpha * beta > 1.0)) {
            throw ConfigError("invalid parameters: need alpha>0, beta>0, alpha*beta>1 (got alpha=" +
                              std::to_string(alpha_) + ", beta=" + std::to_string(beta_) + ")");
        }
    }

    /// True when the spectrum is branch-degenerate (alpha == beta).
    bool degenerate() const { return alpha == beta; }

    /// Same parameters with alpha and beta exchanged.
    Params swapped() const { return Params(beta, alpha); }
};

/// Parity of the invariant subspace: even (Plus) or odd (Minus).
enum class Parity { Plus, Minus };

/// Branch of the invariant subspace within a parity class.
enum class Branch { One, Two };

/// Label of one of the four invariant sectors: (parity, branch).
struct SectorId {
    Parity parity;
    Branch branch;

    bool operator==(const SectorId&) const = default;
};

/// All four sectors in canonical order: +1, +2, -1, -2.
inline constexpr std::array<SectorId, 4> all_sectors() {
    return {SectorId{Parity::Plus, Branch::One}, SectorId{Parity::Plus, Branch::Two},
            SectorId{Parity::Minus, Branch::One}, SectorId{Parity::Minus, Branch::Two}};
}

/// Canonical order used for deterministic tie-breaking: +1 < +2 < -1 < -2.
inline int sector_order(SectorId s) {
    int p = (s.parity == Parity::Plus) ? 0 : 2;
    return p + ((s.branch == Branch::One) ? 0 : 1);
}

/// Short sector label: "+1", "+2", "-1", "-2".
inline std::string sector_label(SectorId s) {
    std::string out(1, s.parity == Parity::Plus ? '+' : '-');
    out += (s.branch == Branch::One) ? '1' : '2';
    return out;
}

/// Parse a sector label of the form "+1", "+2", "-1", "-2".
inline SectorId parse_sector(std::string_view text) {
    if (text.size() == 2 && (text[0] == '+' || text[0] == '-') &&
        (text[1] == '1' || text[1] == '2')) {
        return SectorId{text[0] == '+' ? Parity::Plus : Parity::Minus,
                        text[1] == '1' ? Branch::One : Branch::Two};
    }
    throw ConfigError("invalid sector label '" + std::string(text) +
                      "' (expected one of +1, +2, -1, -2)");
}

} // namespace ncho
