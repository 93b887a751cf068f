#pragma once

// Coefficient fields: GF(p) for a prime p, and the rationals.
//
// Fields are small value objects. Every container that stores scalars keeps a
// copy of its field so elements never need global state.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>

#include "error.hpp"

namespace gradedreg {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class PrimeField {
 public:
  using Elem = std::uint32_t;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31))
      throw error(errc::invalid_field, "characteristic " + std::to_string(p) + " is not a supported prime");
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1 % p_; }
  bool is_zero(Elem a) const noexcept { return a == 0; }
  bool is_one(Elem a) const noexcept { return a == 1; }

  Elem add(Elem a, Elem b) const noexcept {
    std::uint64_t s = std::uint64_t(a) + b;
    return Elem(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : Elem(std::uint64_t(a) + p_ - b); }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a & b;
    return Elem((std::uint64_t(a) * b) % p_);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p_;
    return Elem(t);
  }

  Elem from_integer(long long v) const noexcept {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    return Elem(m);
  }

  /// Parses an integer literal ("-12") or a fraction "a/b" with b invertible mod p.
  Elem parse(const std::string& text) const {
    auto slash = text.find('/');
    if (slash == std::string::npos) return from_big(text);
    Elem den = from_big(text.substr(slash + 1));
    if (den == 0) throw error(errc::parse_error, "denominator vanishes mod p in '" + text + "'");
    return mul(from_big(text.substr(0, slash)), inv(den));
  }

  std::string to_string(Elem a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  Elem from_big(const std::string& digits) const {
    try {
      boost::multiprecision::cpp_int v(digits);
      v %= p_;
      if (v < 0) v += p_;
      return Elem(v.convert_to<std::uint64_t>());
    } catch (const std::exception&) {
      throw error(errc::parse_error, "bad integer literal '" + digits + "'");
    }
  }

  std::uint32_t p_ = 2;
};

class RationalField {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  std::uint32_t characteristic() const noexcept { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }

  Elem from_integer(long long v) const { return Elem(v); }

  Elem parse(const std::string& text) const {
    try {
      auto slash = text.find('/');
      if (slash == std::string::npos) return Elem(boost::multiprecision::cpp_int(text));
      boost::multiprecision::cpp_int num(text.substr(0, slash)), den(text.substr(slash + 1));
      if (den == 0) throw error(errc::parse_error, "zero denominator in '" + text + "'");
      return Elem(num, den);
    } catch (const error&) {
      throw;
    } catch (const std::exception&) {
      throw error(errc::parse_error, "bad rational literal '" + text + "'");
    }
  }

  std::string to_string(const Elem& a) const { return a.str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Runtime description of the coefficient field: 0 for Q, otherwise a prime.
struct FieldSpec {
  std::uint32_t characteristic = 2;

  void validate() const {
    if (characteristic != 0 && !is_prime(characteristic))
      throw error(errc::invalid_field, "characteristic must be 0 or prime, got " + std::to_string(characteristic));
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Calls fn with a concrete field object chosen from the spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  spec.validate();
  if (spec.characteristic == 0) return fn(RationalField{});
  return fn(PrimeField{spec.characteristic});
}

}  // namespace gradedreg
