#pragma once

#include <iostream>
#include <string_view>

namespace casimir::log {

// Verbosity is read once from CASIMIR_LOG: quiet | info | debug (default info).
enum class Level { quiet = 0, info = 1, debug = 2 };

Level level();
Level parse_level(std::string_view name);

template <class... Args>
void info(const Args&... args) {
  if (level() >= Level::info) (std::clog << ... << args) << '\n';
}

template <class... Args>
void debug(const Args&... args) {
  if (level() < Level::debug) return;
  std::clog << "[debug] ";
  (std::clog << ... << args) << '\n';
}

}  // namespace casimir::log
