#pragma once

#include <cstddef>

namespace charlab {

inline constexpr std::size_t kDefaultMaxSymbolicVars = 8;

/// Largest variable count for which polynomials are expanded symbolically. Read from
/// CHARLAB_MAX_SYMBOLIC_VARS when set (clamped to the monomial capacity), else 8.
std::size_t max_symbolic_vars();

}  // namespace charlab
