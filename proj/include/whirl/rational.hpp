#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace whirl {

/// Exact fraction over int64 with a positive, fully reduced denominator.
/// Comparisons cross-multiply in 128-bit arithmetic.
class Rational {
 public:
  constexpr Rational(std::int64_t value = 0) : num_(value), den_(1) {}  // NOLINT: implicit by intent
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend Rational operator/(const Rational& a, const Rational& b) { return {a.num_ * b.den_, a.den_ * b.num_}; }
  Rational operator-() const { return {-num_, den_}; }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) num_ = -num_, den_ = -den_;
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) num_ /= g, den_ /= g;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace whirl
