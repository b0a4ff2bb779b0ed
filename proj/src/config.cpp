#include "charlab/config.hpp"

#include "charlab/laurent.hpp"

#include <cstdlib>
#include <string>

namespace charlab {

std::size_t max_symbolic_vars() {
  const char* env = std::getenv("CHARLAB_MAX_SYMBOLIC_VARS");
  if (env == nullptr || *env == '\0') return kDefaultMaxSymbolicVars;
  try {
    const long v = std::stol(env);
    if (v < 1) return kDefaultMaxSymbolicVars;
    return std::min<std::size_t>(static_cast<std::size_t>(v), kMaxVars);
  } catch (const std::exception&) {
    return kDefaultMaxSymbolicVars;
  }
}

}  // namespace charlab
