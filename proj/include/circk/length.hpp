#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace circk {

// A path length with a dedicated infinity for "no path". Addition saturates:
// inf + x = inf.
class Length {
 public:
  constexpr Length() = default;
  constexpr explicit Length(std::int64_t value) : value_(value) {}

  static constexpr Length infinity() { return Length(kInfinite); }

  constexpr bool finite() const { return value_ != kInfinite; }
  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr std::int64_t value() const { return value_; }

  friend constexpr Length operator+(Length a, Length b) {
    if (!a.finite() || !b.finite()) return infinity();
    if (a.value_ > kInfinite - 1 - b.value_) return infinity();
    return Length(a.value_ + b.value_);
  }

  friend constexpr auto operator<=>(Length, Length) = default;

  std::string to_string() const {
    return finite() ? std::to_string(value_) : std::string("inf");
  }

 private:
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();
  std::int64_t value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Length l) { return os << l.to_string(); }

}  // namespace circk
