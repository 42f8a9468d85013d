#pragma once

#include <stdexcept>
#include <string>

namespace contactlab {

// Malformed input files (bad JSON, unknown keys, dangling identifiers).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A family that fails its structural invariants was passed to an operation
// that requires a valid one.
struct FamilyError : std::runtime_error {
  explicit FamilyError(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee that must hold on valid inputs failed; this signals
// an implementation bug or an invalid instance, never a recoverable state.
struct GuaranteeError : std::runtime_error {
  explicit GuaranteeError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap (e.g. the cycle enumeration limit) was exceeded.
struct LimitError : std::runtime_error {
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace contactlab
