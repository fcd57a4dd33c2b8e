#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace sia::algebra {

/// A computation exceeded its step, degree or time budget. Surfaced to the
/// caller as a distinct outcome; results are never silently truncated.
struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

/// Cooperative cancellation was requested.
struct Cancelled : std::runtime_error {
  Cancelled() : std::runtime_error("cancelled") {}
};

/// Shared interruption state for one analysis: wall-clock deadline and
/// cancellation flag. Polled by long-running loops.
class Interrupt {
 public:
  using Clock = std::chrono::steady_clock;

  Interrupt() = default;
  explicit Interrupt(Clock::duration timeout) : deadline_(Clock::now() + timeout) {}

  void set_deadline(Clock::time_point t) { deadline_ = t; }
  void request_cancel() { cancel_.store(true, std::memory_order_relaxed); }
  bool cancel_requested() const { return cancel_.load(std::memory_order_relaxed); }

  /// Throws Cancelled or ResourceLimit.
  void poll() const {
    if (cancel_requested()) throw Cancelled();
    if (Clock::now() > deadline_) throw ResourceLimit("wall-clock timeout");
  }

 private:
  Clock::time_point deadline_ = Clock::time_point::max();
  std::atomic<bool> cancel_{false};
};

enum class PairSelection { Normal, Sugar };

struct GroebnerOptions {
  std::size_t max_steps = 1'000'000;
  unsigned max_degree = 64;
  const Interrupt* interrupt = nullptr;
  PairSelection selection = PairSelection::Normal;
};

}  // namespace sia::algebra
