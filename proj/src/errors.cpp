#include "hompoly/errors.hpp"

#include <cstdlib>

namespace hompoly {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("HOMPOLY_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.max_subsets = v;
  }
  return b;
}

}  // namespace hompoly
