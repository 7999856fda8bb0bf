#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace dlap {

/// Exact rational number over 64-bit integers, always stored in lowest terms
/// with a positive denominator. Intermediate products are formed in 128 bits
/// and any result that does not fit back into 64 bits throws
/// std::overflow_error, so a value is either exact or absent.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Compares a/b against c/d for positive denominators without division.
std::strong_ordering compare_fractions(std::int64_t a, std::int64_t b, std::int64_t c,
                                       std::int64_t d) noexcept;

}  // namespace dlap
