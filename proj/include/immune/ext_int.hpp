#pragma once

#include <cassert>
#include <cstdint>
#include <ostream>
#include <string>

namespace immune {

/// Integer extended with a negative-infinity element. Addition absorbs
/// -inf, max treats it as the identity. Finite arithmetic is exact.
class ExtInt {
public:
  constexpr ExtInt() : finite_(true), value_(0) {}
  constexpr ExtInt(std::int64_t v) : finite_(true), value_(v) {}

  static constexpr ExtInt neg_inf() {
    ExtInt x;
    x.finite_ = false;
    x.value_ = 0;
    return x;
  }

  constexpr bool is_neg_inf() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }

  constexpr std::int64_t value() const {
    assert(finite_);
    return value_;
  }

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (!a.finite_ || !b.finite_) return neg_inf();
    return ExtInt(a.value_ + b.value_);
  }
  ExtInt& operator+=(ExtInt o) { return *this = *this + o; }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator!=(ExtInt a, ExtInt b) { return !(a == b); }
  friend constexpr bool operator<(ExtInt a, ExtInt b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend constexpr bool operator<=(ExtInt a, ExtInt b) { return !(b < a); }
  friend constexpr bool operator>=(ExtInt a, ExtInt b) { return !(a < b); }

  friend constexpr ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

  std::string str() const { return finite_ ? std::to_string(value_) : "-inf"; }

  friend std::ostream& operator<<(std::ostream& os, ExtInt x) { return os << x.str(); }

private:
  bool finite_;
  std::int64_t value_;
};

} // namespace immune
