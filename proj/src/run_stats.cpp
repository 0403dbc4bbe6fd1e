#include "pathcov/run_stats.hpp"

#include "json.hpp"

namespace pathcov {

std::string RunStats::to_json() const {
  nlohmann::json j{{"engine", engine},
                   {"status", status},
                   {"items_emitted", items_emitted},
                   {"elapsed", elapsed},
                   {"avg_period", avg_period},
                   {"max_period", max_period},
                   {"peak_retained_paths", peak_retained_paths},
                   {"peak_memory_estimate", peak_memory_estimate}};
  return j.dump();
}

void PeriodRecorder::finish(RunStats& stats) const {
  stats.items_emitted = items_;
  stats.elapsed = elapsed();
  stats.avg_period = items_ > 0 ? stats.elapsed / static_cast<double>(items_) : 0.0;
  stats.max_period = max_period_;
}

}  // namespace pathcov
