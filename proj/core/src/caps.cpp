#include "eqsym/caps.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "eqsym/errors.hpp"

namespace eqsym {

int enumeration_cap() {
  static const int cap = [] {
    int value = 18;
    if (const char* env = std::getenv("EQSYM_MAX_N")) {
      try {
        value = std::stoi(env);
      } catch (const std::exception&) {
        // ignore malformed overrides
      }
    }
    return std::clamp(value, 1, 30);
  }();
  return cap;
}

void check_enumeration_cap(int n) {
  if (n < 0 || n > kMaxVars)
    throw CapExceeded("variable count " + std::to_string(n) + " outside [0, 64]");
  if (n > enumeration_cap())
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                      std::to_string(enumeration_cap()) + " (override with EQSYM_MAX_N)");
}

}  // namespace eqsym
