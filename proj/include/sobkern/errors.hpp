#pragma once

#include <stdexcept>
#include <string>

namespace sobkern {

// Raised when an internal cross-check fails (e.g. a residue sum comes back
// with a non-negligible imaginary part, or an oracle disagrees with a closed
// form beyond tolerance). Maps to CLI exit code 3.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a numerical procedure cannot meet its contract (jitter ladder
// exhausted, quadrature tail bound unattainable). Maps to CLI exit code 4.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sobkern
