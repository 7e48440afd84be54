#pragma once

#include <chrono>
#include <limits>

namespace raf {

/// Wall-clock deadline shared by the exponential searches.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  static Budget unlimited() { return Budget(Clock::time_point::max()); }
  static Budget seconds(double s) {
    if (s <= 0 || s > 1e9) return unlimited();
    return Budget(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(s)));
  }

  bool expired() const { return deadline_ != Clock::time_point::max() && Clock::now() >= deadline_; }

 private:
  explicit Budget(Clock::time_point deadline) : deadline_(deadline) {}
  Clock::time_point deadline_;
};

}  // namespace raf
