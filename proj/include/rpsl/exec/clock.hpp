#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

namespace rpsl::exec {

/// Millisecond time source. now() never decreases.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual std::int64_t now() const = 0;
  /// Lets `ms` milliseconds pass.
  virtual void wait(std::int64_t ms) = 0;
};

/// Time moves only when told to.
class SimulatedClock final : public Clock {
 public:
  explicit SimulatedClock(std::int64_t start_ms = 0) : now_(start_ms) {}
  std::int64_t now() const override { return now_.load(); }
  void wait(std::int64_t ms) override { advance(ms); }
  void advance(std::int64_t ms);

 private:
  std::atomic<std::int64_t> now_;
};

/// Steady wall-clock time, in ms since construction.
class SystemClock final : public Clock {
 public:
  SystemClock() : origin_(std::chrono::steady_clock::now()) {}
  std::int64_t now() const override;
  void wait(std::int64_t ms) override;

 private:
  std::chrono::steady_clock::time_point origin_;
};

}  // namespace rpsl::exec
