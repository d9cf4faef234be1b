#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

namespace mogbench {

/// A value on the simulated clock, stored as integer microseconds.
///
/// The benchmark ledgers demand exact identities (t_OPO = t_a + t_g + t_l,
/// t_total recomputable from rounds) and byte-stable logs with 6 fractional
/// digits. Integer microseconds make all of that exact by construction;
/// doubles would drift in the low bits under summation.
class SimTime {
 public:
  constexpr SimTime() = default;

  static constexpr SimTime from_micros(std::int64_t us) { return SimTime(us); }

  static SimTime from_seconds(double s) {
    return SimTime(static_cast<std::int64_t>(std::llround(s * 1e6)));
  }

  constexpr std::int64_t micros() const { return micros_; }
  double seconds() const { return static_cast<double>(micros_) / 1e6; }

  constexpr SimTime operator+(SimTime other) const { return SimTime(micros_ + other.micros_); }
  constexpr SimTime operator-(SimTime other) const { return SimTime(micros_ - other.micros_); }
  constexpr SimTime& operator+=(SimTime other) {
    micros_ += other.micros_;
    return *this;
  }
  constexpr auto operator<=>(const SimTime&) const = default;

 private:
  constexpr explicit SimTime(std::int64_t us) : micros_(us) {}
  std::int64_t micros_ = 0;
};

/// Fixed "sss.ffffff" rendering used everywhere times appear in logs.
std::string format_seconds(SimTime t);

/// Exact inverse of format_seconds. Accepts any decimal with at most six
/// fractional digits.
SimTime parse_seconds_exact(const std::string& text);

}  // namespace mogbench
