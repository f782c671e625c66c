#pragma once

#include <chrono>

#include "aigsynth/errors.hpp"

namespace aigsynth {

// Wall-clock budget polled inside long-running loops.
class Deadline {
 public:
  Deadline() = default;  // unlimited

  static Deadline after_seconds(double seconds) {
    Deadline d;
    d.unlimited_ = false;
    d.end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds));
    return d;
  }

  bool expired() const {
    return !unlimited_ && std::chrono::steady_clock::now() >= end_;
  }

  void poll() const {
    if (expired()) throw timeout_error();
  }

 private:
  bool unlimited_ = true;
  std::chrono::steady_clock::time_point end_{};
};

}  // namespace aigsynth
