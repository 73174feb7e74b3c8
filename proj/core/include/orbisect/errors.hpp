#pragma once

#include <stdexcept>
#include <string>

namespace orbisect {

// Malformed or inconsistent input: bad schema, invalid table, action that is
// not a homomorphism, out-of-range ids. CLI exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource bound was exceeded. Messages name the bound.
// CLI exit code 3.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A structural verification found a counterexample. Carries the detail in
// what(). CLI exit code 1.
struct CheckFailure : std::runtime_error {
  explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orbisect
