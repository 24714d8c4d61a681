#pragma once

#include <stdexcept>
#include <string>

namespace ctxlab {

/// Thrown when a requested analysis would exceed the configured variable
/// budget of the feasibility engine. The CLI maps this to exit code 2.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ctxlab
