#ifndef MHG_ERRORS_HPP
#define MHG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mhg {

// Caller passed arguments outside an operation's domain.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A denominator Pochhammer factor (b_j + c) vanished.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// The partition table for (m, n) is too large to allocate.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mhg

#endif  // MHG_ERRORS_HPP
