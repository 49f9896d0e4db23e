#pragma once

#include <cstdint>
#include <utility>

#include "vmlab/errors.hpp"

namespace vmlab {

/// Per-process CPU-time source. Readings are ticks since process start and
/// never decrease within a process. The backend is the finest process-CPU
/// clock available: POSIX CLOCK_PROCESS_CPUTIME_ID (nanosecond ticks) when
/// present, otherwise the C clock() at CLOCKS_PER_SEC.
class CpuClock {
 public:
  using Ticks = std::int64_t;

  CpuClock();

  /// Current process CPU time in ticks. Raises ClockUnavailable if the
  /// backend fails.
  Ticks read() const;

  Ticks ticks_per_second() const noexcept { return ticks_per_second_; }
  const char* backend_name() const noexcept { return backend_name_; }

 private:
  bool use_posix_;
  Ticks ticks_per_second_;
  const char* backend_name_;
};

/// ticks * 1,000,000 / resolution, as a real number.
inline double to_micros(CpuClock::Ticks ticks, CpuClock::Ticks ticks_per_second) {
  if (ticks_per_second <= 0) {
    throw RuntimeError(ErrorKind::ClockUnavailable, "non-positive clock resolution");
  }
  return static_cast<double>(ticks) * 1'000'000.0 / static_cast<double>(ticks_per_second);
}

/// (t2 - t1) - (t1 - t0): the measured interval with one clock-read overhead
/// subtracted.
inline CpuClock::Ticks corrected_delta(CpuClock::Ticks t0, CpuClock::Ticks t1,
                                       CpuClock::Ticks t2) {
  return (t2 - t1) - (t1 - t0);
}

/// Times `action` in microseconds with the double-read overhead correction.
/// May be slightly negative for sub-granularity actions; returned unclamped.
template <class Action>
double corrected_measure(const CpuClock& clock, Action&& action) {
  const CpuClock::Ticks t0 = clock.read();
  const CpuClock::Ticks t1 = clock.read();
  std::forward<Action>(action)();
  const CpuClock::Ticks t2 = clock.read();
  return to_micros(corrected_delta(t0, t1, t2), clock.ticks_per_second());
}

}  // namespace vmlab
