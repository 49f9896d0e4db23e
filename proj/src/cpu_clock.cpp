#include "vmlab/cpu_clock.hpp"

#include <ctime>

namespace vmlab {

namespace {

#if defined(CLOCK_PROCESS_CPUTIME_ID)
bool posix_cputime_works() {
  timespec ts{};
  return clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts) == 0;
}
#endif

}  // namespace

CpuClock::CpuClock() {
#if defined(CLOCK_PROCESS_CPUTIME_ID)
  if (posix_cputime_works()) {
    use_posix_ = true;
    ticks_per_second_ = 1'000'000'000;
    backend_name_ = "clock_gettime(CLOCK_PROCESS_CPUTIME_ID)";
    return;
  }
#endif
  use_posix_ = false;
  ticks_per_second_ = CLOCKS_PER_SEC;
  backend_name_ = "clock()";
}

CpuClock::Ticks CpuClock::read() const {
#if defined(CLOCK_PROCESS_CPUTIME_ID)
  if (use_posix_) {
    timespec ts{};
    if (clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts) != 0) {
      throw RuntimeError(ErrorKind::ClockUnavailable, "clock_gettime failed");
    }
    return static_cast<Ticks>(ts.tv_sec) * 1'000'000'000 + ts.tv_nsec;
  }
#endif
  const std::clock_t c = std::clock();
  if (c == static_cast<std::clock_t>(-1)) {
    throw RuntimeError(ErrorKind::ClockUnavailable, "clock() failed");
  }
  return static_cast<Ticks>(c);
}

}  // namespace vmlab
