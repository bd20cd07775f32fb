#ifndef FRAMECOMP_ERRORS_HPP
#define FRAMECOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace framecomp {

/// Raised when caller-supplied data violates a documented precondition
/// (bad lengths, negative norms, non-Hermitian input, ...).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal consistency check fails (constants not strictly
/// decreasing, eigensolver not converging, self-audit failure).
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace framecomp

#endif
