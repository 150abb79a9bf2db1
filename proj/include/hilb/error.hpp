#pragma once

#include <stdexcept>
#include <string>

namespace hilb {

/// Raised on invalid mathematical input (wrong degrees, non-Borel ideals,
/// polynomials that are not Hilbert polynomials, ...).  The CLI maps these
/// to exit code 2; anything else is an internal error (exit 1).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hilb
