#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace flat2g {

using std::int64_t;

// Raised when an input spec (group string, cocycle file, nerve file, ...)
// fails to parse or validate. CLI maps this to exit code 1.
struct spec_error : std::runtime_error {
    explicit spec_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an enumeration would exceed the configured budget.
// CLI maps this to exit code 2.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure (e.g. a character that fails to be a
// homomorphism). Surfaced, never swallowed.
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

inline int64_t lcm64(int64_t a, int64_t b) { return std::lcm(a, b); }

// Floor modulus: result in [0, m).
inline int64_t mod_floor(int64_t k, int64_t m) {
    int64_t r = k % m;
    return r < 0 ? r + m : r;
}

}  // namespace flat2g
