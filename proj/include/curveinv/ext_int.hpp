#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace curveinv {

// An integer extended by +infinity. Used for orders and multiplicities,
// where the zero polynomial and common components give +inf and sums
// follow the usual conventions (x + inf = inf).
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtInt infinity() {
    ExtInt e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }
  // Undefined for infinity; callers check is_finite() first.
  constexpr std::int64_t value() const { return value_; }

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtInt(a.value_ + b.value_);
  }
  ExtInt& operator+=(ExtInt o) { return *this = *this + o; }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    return infinite_ ? std::string("inf") : std::to_string(value_);
  }
  friend std::ostream& operator<<(std::ostream& os, ExtInt e) {
    return os << e.to_string();
  }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

}  // namespace curveinv
