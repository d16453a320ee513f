#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace radpi {

using BigInt = mpz_class;

/// Number of decimal digits in |x|; zero has one digit.
std::size_t decimal_digits(const BigInt& x);

/// 10^e.
BigInt pow10(unsigned long e);

/// 2^e.
BigInt pow2(unsigned long e);

/// Exact signed rational kept in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  BigRational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  BigRational(BigInt num, BigInt den);

  /// Parses "p", "-p" or "p/q".
  static BigRational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  int sign() const noexcept { return sgn(num_); }
  bool is_zero() const noexcept { return sgn(num_) == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  BigRational abs() const;
  BigRational reciprocal() const;

  /// "p" for integers, otherwise "p/q".
  std::string to_string() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

 private:
  struct Normalized {};
  BigRational(BigInt num, BigInt den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  BigInt num_;
  BigInt den_;
};

/// Greatest integer <= q.
BigInt rat_floor(const BigRational& q);

/// Exact complex integer re + im*i.
struct GaussianInt {
  BigInt re = 0;
  BigInt im = 0;

  GaussianInt conj() const { return {re, -im}; }

  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {BigInt(a.re + b.re), BigInt(a.im + b.im)};
  }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {BigInt(a.re * b.re - a.im * b.im), BigInt(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string to_string() const;
};

/// z^e by binary exponentiation; z^0 = 1.
GaussianInt gauss_pow(GaussianInt z, const BigInt& e);

}  // namespace radpi
