#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlcasimir {

/// Netlist syntax or value error. `offset` is the byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset, std::vector<std::string> expected = {});

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Numerical procedure failed to meet its contract (quadrature budget,
/// undamped resonance, non-finite samples).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A physical invariant that must hold for passive inputs was violated.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace tlcasimir
