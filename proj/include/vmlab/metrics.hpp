#pragma once

#include <cstdint>

namespace vmlab {

/// Counters and phase timers for one run (or the mean of several).
/// Counts are exact and independent of the timing mode; the phase times stay
/// zero when fine-grained timing is disabled. exec_time_us is measured around
/// the whole run and is never derived from the phase sums.
struct Metrics {
  std::uint64_t dispatch_count = 0;
  std::uint64_t fetch_count = 0;
  double fetch_time_us = 0.0;
  double dispatch_time_us = 0.0;
  double exec_time_us = 0.0;
  std::uint32_t repetitions = 0;
};

enum class Phase { Fetch, Dispatch };

/// Adds `duration_us` to the named phase accumulator and `count_increment`
/// to the corresponding counter.
inline Metrics& record_phase(Metrics& metrics, Phase phase, double duration_us,
                             std::uint64_t count_increment) {
  if (phase == Phase::Fetch) {
    metrics.fetch_time_us += duration_us;
    metrics.fetch_count += count_increment;
  } else {
    metrics.dispatch_time_us += duration_us;
    metrics.dispatch_count += count_increment;
  }
  return metrics;
}

}  // namespace vmlab
