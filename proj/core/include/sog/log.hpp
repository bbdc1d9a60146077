#pragma once

#include <string>

namespace sog::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Threshold from SOGKIT_LOG (error, warn, info, debug); warn when unset.
Level threshold();
void write(Level level, const std::string& message);

inline void warn(const std::string& m) { write(Level::Warn, m); }
inline void info(const std::string& m) { write(Level::Info, m); }
inline void debug(const std::string& m) { write(Level::Debug, m); }

}  // namespace sog::log
