#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "qwe/error.hpp"

namespace qwe {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ArithmeticError("exact arithmetic overflow in addition");
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw ArithmeticError("exact arithmetic overflow in subtraction");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ArithmeticError("exact arithmetic overflow in multiplication");
  }
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::uint64_t unsigned_magnitude(std::int64_t a) {
  return a < 0 ? 0ull - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
}

}  // namespace detail

// Exact rational on checked 64-bit integers, always in lowest terms with a
// positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const { return Rational(detail::checked_neg(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    // gcd-aware addition keeps intermediates small.
    std::int64_t g = static_cast<std::int64_t>(std::gcd(detail::unsigned_magnitude(a.den_),
                                                        detail::unsigned_magnitude(b.den_)));
    std::int64_t bd = b.den_ / g;
    std::int64_t ad = a.den_ / g;
    std::int64_t num = detail::checked_add(detail::checked_mul(a.num_, bd),
                                           detail::checked_mul(b.num_, ad));
    std::int64_t den = detail::checked_mul(a.den_, bd);
    return Rational(num, den);
  }

  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-cancel before multiplying.
    std::int64_t g1 = static_cast<std::int64_t>(std::gcd(detail::unsigned_magnitude(a.num_),
                                                         detail::unsigned_magnitude(b.den_)));
    std::int64_t g2 = static_cast<std::int64_t>(std::gcd(detail::unsigned_magnitude(b.num_),
                                                         detail::unsigned_magnitude(a.den_)));
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    std::int64_t num = detail::checked_mul(a.num_ / g1, b.num_ / g2);
    std::int64_t den = detail::checked_mul(a.den_ / g2, b.den_ / g1);
    return Rational(num, den);
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw ArithmeticError("division by zero rational");
    return a * Rational(b.den_, b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return (a - b).sign() <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Lowest terms, "p/q"; integers render without the "/1".
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Parses "p" or "p/q".
  static Rational parse(const std::string& text);

 private:
  void normalize() {
    if (den_ == 0) throw ArithmeticError("rational with zero denominator");
    if (den_ < 0) {
      num_ = detail::checked_neg(num_);
      den_ = detail::checked_neg(den_);
    }
    std::uint64_t g = std::gcd(detail::unsigned_magnitude(num_), detail::unsigned_magnitude(den_));
    if (g > 1) {
      num_ /= static_cast<std::int64_t>(g);
      den_ /= static_cast<std::int64_t>(g);
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw ParseError("trailing characters in rational '" + text + "'");
      return Rational(v);
    }
    std::size_t used_n = 0, used_d = 0;
    std::int64_t n = std::stoll(text.substr(0, slash), &used_n);
    std::int64_t d = std::stoll(text.substr(slash + 1), &used_d);
    if (used_n != slash || used_d != text.size() - slash - 1) {
      throw ParseError("trailing characters in rational '" + text + "'");
    }
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ArithmeticError("rational out of 64-bit range: '" + text + "'");
  }
}

// Gaussian integer with checked arithmetic; the exact amplitude numerator type.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianInt conj() const { return {re, detail::checked_neg(im)}; }

  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {detail::checked_add(a.re, b.re), detail::checked_add(a.im, b.im)};
  }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {detail::checked_sub(a.re, b.re), detail::checked_sub(a.im, b.im)};
  }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {detail::checked_sub(detail::checked_mul(a.re, b.re), detail::checked_mul(a.im, b.im)),
            detail::checked_add(detail::checked_mul(a.re, b.im), detail::checked_mul(a.im, b.re))};
  }
  GaussianInt& operator+=(const GaussianInt& o) { return *this = *this + o; }

  // Multiplication by i^k.
  GaussianInt times_i_pow(unsigned k) const {
    switch (k & 3u) {
      case 0: return *this;
      case 1: return {detail::checked_neg(im), re};
      case 2: return {detail::checked_neg(re), detail::checked_neg(im)};
      default: return {im, detail::checked_neg(re)};
    }
  }

  std::int64_t norm_sq() const {
    return detail::checked_add(detail::checked_mul(re, re), detail::checked_mul(im, im));
  }

  friend bool operator==(const GaussianInt& a, const GaussianInt& b) = default;
};

}  // namespace qwe
