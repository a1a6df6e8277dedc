#include "rpsl/exec/clock.hpp"

#include <stdexcept>
#include <thread>

namespace rpsl::exec {

void SimulatedClock::advance(std::int64_t ms) {
  if (ms < 0) throw std::invalid_argument("a clock cannot run backwards");
  now_ += ms;
}

std::int64_t SystemClock::now() const {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - origin_).count();
}

void SystemClock::wait(std::int64_t ms) {
  if (ms > 0) std::this_thread::sleep_for(std::chrono::milliseconds(ms));
}

}  // namespace rpsl::exec
