#ifndef PATHCOV_RUN_STATS_HPP
#define PATHCOV_RUN_STATS_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>

namespace pathcov {

struct RunStats {
  std::string engine;
  /// "completed", "truncated" (item limit), "timeout" or "budget-exceeded".
  std::string status = "completed";
  std::uint64_t items_emitted = 0;
  double elapsed = 0.0;
  /// elapsed / items_emitted, 0 when nothing was emitted.
  double avg_period = 0.0;
  double max_period = 0.0;
  std::size_t peak_retained_paths = 0;
  std::size_t peak_memory_estimate = 0;

  bool completed() const { return status == "completed"; }
  std::string to_json() const;
};

/// Wall-clock recorder for an item stream: call item() after each emission.
class PeriodRecorder {
 public:
  using Clock = std::chrono::steady_clock;

  PeriodRecorder() : start_(Clock::now()), last_(start_) {}

  void item() {
    const auto now = Clock::now();
    max_period_ = std::max(max_period_, std::chrono::duration<double>(now - last_).count());
    last_ = now;
    ++items_;
  }

  std::uint64_t items() const { return items_; }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  Clock::time_point start() const { return start_; }

  /// Fills items, elapsed and the two periods.
  void finish(RunStats& stats) const;

 private:
  Clock::time_point start_;
  Clock::time_point last_;
  double max_period_ = 0.0;
  std::uint64_t items_ = 0;
};

}  // namespace pathcov

#endif  // PATHCOV_RUN_STATS_HPP
