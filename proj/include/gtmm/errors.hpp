#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gtmm {

/// Element/spec shape mismatch (e.g. combining elements of different groups).
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration or verification budget was exceeded.  This is a distinct
/// outcome from a property violation: the verifier never answers "false"
/// because it ran out of budget.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation not defined for this input (e.g. DFT of a nonabelian group).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bound constraint that is already violated at omega = 2, which signals
/// an input that cannot come from a verified construction.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Probe counter for the exhaustive checkers.  `charge` throws once the
/// limit would be exceeded, leaving `used` untouched for reporting.
struct Budget {
    std::uint64_t limit = 1'000'000'000;
    std::uint64_t used = 0;

    void charge(std::uint64_t n, const char* what) {
        if (n > limit - used) {
            throw ResourceLimitError(std::string(what) + ": budget exceeded (needs " +
                                     std::to_string(n) + " more probes, " +
                                     std::to_string(limit - used) + " left of " +
                                     std::to_string(limit) + ")");
        }
        used += n;
    }
};

} // namespace gtmm
