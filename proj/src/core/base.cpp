#include "core/base.hpp"

#include <cstdlib>

namespace idem {

static Guards make_default_guards() {
  Guards g;
  if (const char* env = std::getenv("IDEMSPEC_MAX_CARRIER")) {
    int v = std::atoi(env);
    if (v > 0) g.max_carrier = v < 64 ? v : 64;
  }
  return g;
}

Guards& guards() {
  static Guards g = make_default_guards();
  return g;
}

void require_carrier(int n, const std::string& what) {
  if (n < 0 || n > guards().max_carrier)
    throw GuardError(what + ": carrier size " + std::to_string(n) +
                     " exceeds bound " + std::to_string(guards().max_carrier));
}

void require_guard(bool ok, const std::string& what, int bound) {
  if (!ok)
    throw GuardError(what + ": exceeds bound " + std::to_string(bound));
}

}  // namespace idem
