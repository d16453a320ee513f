#pragma once

#include <string>
#include <string_view>

#include "radpi/exact.hpp"

namespace radpi {

/// Guard digits carried by composite operations (default 10).
int guard_digits() noexcept;
void set_guard_digits(int g);

/// Decimal fixed-point real: mantissa * 10^-scale.
///
/// Every operation takes the precision of its result explicitly; the result
/// carries exactly that scale. Rounding is always toward zero.
class FixedReal {
 public:
  FixedReal() = default;
  FixedReal(BigInt mantissa, int scale);

  static FixedReal from_integer(const BigInt& value, int scale = 0);
  static FixedReal from_rational(const BigRational& q, int scale);
  /// Parses "-?d+(.d*)?"; the scale is the number of digits after the point.
  static FixedReal parse(std::string_view text);

  const BigInt& mantissa() const noexcept { return mantissa_; }
  int scale() const noexcept { return scale_; }

  int sign() const noexcept { return sgn(mantissa_); }
  bool is_zero() const noexcept { return sgn(mantissa_) == 0; }

  /// Same value at another scale, truncated toward zero when narrowing.
  FixedReal rescaled(int scale) const;
  FixedReal abs() const;
  BigInt floor() const;
  BigRational to_rational() const;
  double to_double() const;

  /// Canonical "-?d+.d{scale}" (no point when scale is 0).
  std::string to_string() const;

  FixedReal operator-() const { return FixedReal(BigInt(-mantissa_), scale_); }
  /// Exact sum/difference at the larger of the two scales.
  friend FixedReal operator+(const FixedReal& a, const FixedReal& b);
  friend FixedReal operator-(const FixedReal& a, const FixedReal& b);
  /// Exact multiple by an integer.
  friend FixedReal operator*(const FixedReal& a, const BigInt& k);
  friend FixedReal operator*(const BigInt& k, const FixedReal& a) { return a * k; }

  friend bool operator==(const FixedReal& a, const FixedReal& b);
  friend std::strong_ordering operator<=>(const FixedReal& a, const FixedReal& b);

 private:
  BigInt mantissa_ = 0;
  int scale_ = 0;
};

/// floor(sqrt(n)) by integer Newton iteration. A positive hint close to the
/// root shortens the iteration; any positive hint is accepted.
BigInt isqrt(const BigInt& n, const BigInt* hint = nullptr);

FixedReal fx_mul(const FixedReal& a, const FixedReal& b, int p);
FixedReal fx_div(const FixedReal& a, const FixedReal& b, int p);
/// Square root of the rescaled mantissa; `hint` is an optional estimate of the result.
FixedReal fx_sqrt(const FixedReal& x, int p, const FixedReal* hint = nullptr);
/// cos x for |x| <= 4.
FixedReal fx_cos(const FixedReal& x, int p);
/// Natural logarithm for x > 0.
FixedReal fx_ln(const FixedReal& x, int p);

/// floor(-log10|a - b|), or min(scale(a), scale(b)) when a == b. Never negative.
int fx_agree_digits(const FixedReal& a, const FixedReal& b);

/// Ceiling of digits * log2(10), the bit width that holds `digits` decimals.
long bits_for_digits(long digits);

}  // namespace radpi
