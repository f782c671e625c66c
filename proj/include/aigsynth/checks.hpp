#pragma once

#include <atomic>

namespace aigsynth {

// Expensive self-verification (oracle postconditions re-checked by SAT after
// every call). Off by default; test suites switch it on.
inline std::atomic<bool>& runtime_checks_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

inline bool runtime_checks_enabled() { return runtime_checks_flag().load(); }
inline void set_runtime_checks(bool on) { runtime_checks_flag().store(on); }

}  // namespace aigsynth
