#pragma once

#include <stdexcept>
#include <string>

namespace ncho {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Requested eigenvalue/line index does not exist for the given matrix size.
class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

/// Iterative eigenvector refinement did not reach the residual target.
class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

/// No certified enclosure of the requested width exists within the size budget.
class NotCertifiable : public Error {
public:
    explicit NotCertifiable(const std::string& what) : Error(what) {}
};

/// The norm-bound weight recursion violated one of its side conditions.
class RecursionCheckFailed : public Error {
public:
    RecursionCheckFailed(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}

    /// First index at which the check failed.
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Invalid user-facing configuration (bad flags, invalid parameters).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// File could not be written or read.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace ncho
