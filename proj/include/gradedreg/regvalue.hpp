#pragma once

// Exact rational regularity values, including minus infinity for the zero module.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gradedreg {

class RegValue {
 public:
  /// Minus infinity.
  constexpr RegValue() = default;
  constexpr RegValue(std::int64_t num, std::int64_t den = 1) : finite_(true), num_(num), den_(den) { normalize(); }

  static constexpr RegValue minus_infinity() { return RegValue(); }

  constexpr bool is_finite() const noexcept { return finite_; }
  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  /// Smallest integer >= value; value must be finite.
  std::int64_t ceil() const {
    require_finite();
    std::int64_t q = num_ / den_;
    return (num_ % den_ != 0 && num_ > 0) ? q + 1 : q;
  }

  /// "p/q", integers as "p", minus infinity as "-inf".
  std::string str() const {
    if (!finite_) return "-inf";
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  static RegValue parse(const std::string& s) {
    if (s == "-inf") return {};
    auto slash = s.find('/');
    if (slash == std::string::npos) return RegValue(std::stoll(s));
    return RegValue(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }

  friend constexpr RegValue operator+(const RegValue& a, const RegValue& b) {
    if (!a.finite_ || !b.finite_) return {};
    return RegValue(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr RegValue operator-(const RegValue& a, const RegValue& b) { return a + RegValue(-b.num_, b.den_).keep(b); }

  friend constexpr bool operator==(const RegValue& a, const RegValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || (a.num_ == b.num_ && a.den_ == b.den_);
  }
  friend constexpr std::strong_ordering operator<=>(const RegValue& a, const RegValue& b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend constexpr RegValue max(const RegValue& a, const RegValue& b) { return a < b ? b : a; }

 private:
  constexpr void normalize() {
    if (den_ == 0) throw std::invalid_argument("RegValue with zero denominator");
    if (den_ < 0) {
      den_ = -den_;
      num_ = -num_;
    }
    auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  void require_finite() const {
    if (!finite_) throw std::domain_error("RegValue is minus infinity");
  }
  // Subtracting from minus infinity stays minus infinity; subtracting minus infinity is not defined.
  constexpr RegValue keep(const RegValue& b) const { return b.finite_ ? *this : RegValue(); }

  bool finite_ = false;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace gradedreg
