#include "ngg/limits.hpp"

#include <cstdlib>
#include <string>

namespace ngg {

int vertex_limit(int fallback) {
  static const int override_value = [] {
    const char* env = std::getenv("NGG_MAX_VERTICES");
    if (!env) return -1;
    try {
      int v = std::stoi(env);
      return v > 0 ? v : -1;
    } catch (...) {
      return -1;
    }
  }();
  return override_value > 0 ? override_value : fallback;
}

}  // namespace ngg
