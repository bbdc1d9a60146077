#include "sog/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace sog::log {

Level threshold() {
  static const Level level = [] {
    const char* env = std::getenv("SOGKIT_LOG");
    std::string v = env ? env : "";
    if (v == "error") return Level::Error;
    if (v == "info") return Level::Info;
    if (v == "debug") return Level::Debug;
    return Level::Warn;
  }();
  return level;
}

void write(Level level, const std::string& message) {
  if (level > threshold()) return;
  static std::mutex mutex;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::lock_guard lock(mutex);
  std::cerr << "sogkit " << names[static_cast<int>(level)] << ": " << message << '\n';
}

}  // namespace sog::log
