#pragma once

#include "nchospec/errors.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace ncho {

/// Finite symmetric tridiagonal matrix.
///
/// `diag` holds the n main-diagonal entries, `offdiag` the n-1 entries of
/// the sub/super diagonal. diag.size() == offdiag.size() + 1 always holds.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> offdiag;

    SymTridiag(std::vector<double> d, std::vector<double> e)
        : diag(std::move(d)), offdiag(std::move(e)) {
        if (diag.empty() || diag.size() != offdiag.size() + 1) {
            throw ConfigError("malformed tridiagonal matrix: need diag.size() == offdiag.size()+1 >= 1");
        }
    }

    std::size_t dim() const { return diag.size(); }
};

} // namespace ncho
