#pragma once

#include <optional>

#include "lietrees/core/errors.hpp"

namespace testutil {

// Code of the lietrees::Error raised by f, or nothing.
template <class F>
std::optional<lietrees::Errc> error_code(F&& f) {
  try {
    f();
  } catch (const lietrees::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testutil
