#include "casimir/log.hpp"

#include <cstdlib>

namespace casimir::log {

Level parse_level(std::string_view name) {
  if (name == "quiet" || name == "0") return Level::quiet;
  if (name == "debug" || name == "2") return Level::debug;
  return Level::info;
}

Level level() {
  static const Level cached = [] {
    const char* env = std::getenv("CASIMIR_LOG");
    return env ? parse_level(env) : Level::info;
  }();
  return cached;
}

}  // namespace casimir::log
