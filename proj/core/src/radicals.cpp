#include "radpi/radicals.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "radpi/error.hpp"

namespace radpi {

RadicalSequence::RadicalSequence(int precision) : precision_(precision) {
  if (precision < 0) throw Error(ErrorKind::usage, "RadicalSequence: negative precision");
  values_.emplace_back(BigInt(0), precision_);
}

const FixedReal& RadicalSequence::c(int n) {
  if (n < 0) throw Error(ErrorKind::usage, "RadicalSequence: negative index");
  const FixedReal two = FixedReal::from_integer(2, precision_);
  while (values_.size() <= static_cast<std::size_t>(n)) {
    const FixedReal& prev = values_.back();
    // c_{n-1} is within 4^-n of c_n, which makes it a good Newton seed.
    const FixedReal* hint = prev.is_zero() ? nullptr : &prev;
    values_.push_back(fx_sqrt(two + prev, precision_, hint));
  }
  return values_[static_cast<std::size_t>(n)];
}

FixedReal nested_c(int n, int p) {
  if (n < 0) throw Error(ErrorKind::usage, "nested_c: n must be nonnegative");
  if (p < 16) throw Error(ErrorKind::usage, "nested_c: precision must be at least 16");
  RadicalSequence seq(p);
  return seq.c(n);
}

int radical_working_precision(int n, int p) {
  // 2 - c_n ~ (pi/2^(n+1))^2 loses about 0.602 n digits.
  return p + guard_digits() + (n * 62) / 100 + 2;
}

FixedReal radical_ratio(RadicalSequence& seq, int n, int p) {
  if (n < 1) throw Error(ErrorKind::usage, "radical_ratio: n must be at least 1");
  const int w = seq.precision();
  const FixedReal two = FixedReal::from_integer(2, w);
  FixedReal gap = two - seq.c(n - 1);
  if (gap.sign() <= 0) {
    throw Error(ErrorKind::precision_exhausted,
                "radical_ratio: 2 - c_" + std::to_string(n - 1) + " vanished at precision " + std::to_string(w));
  }
  return fx_div(fx_sqrt(gap, w), seq.c(n), w).rescaled(p);
}

FixedReal radical_ratio(int n, int p) {
  if (n < 1) throw Error(ErrorKind::usage, "radical_ratio: n must be at least 1");
  RadicalSequence seq(radical_working_precision(n, p));
  return radical_ratio(seq, n, p);
}

namespace {

// floor(c_k / sqrt(2 - c_{k-1})) evaluated with p working digits, or nothing
// if the denominator underflows.
std::optional<BigInt> gamma_at(int k, int p) {
  RadicalSequence seq(p);
  const FixedReal two = FixedReal::from_integer(2, p);
  FixedReal gap = two - seq.c(k - 1);
  if (gap.sign() <= 0) return std::nullopt;
  FixedReal root = fx_sqrt(gap, p);
  if (root.is_zero()) return std::nullopt;
  return fx_div(seq.c(k), root, p).floor();
}

}  // namespace

BigInt gamma_k(int k) {
  if (k < 1) throw Error(ErrorKind::usage, "gamma_k: k must be at least 1");
  int p = std::max(2 * k, 64);
  for (;;) {
    auto lo = gamma_at(k, p);
    auto hi = gamma_at(k, p + 32);
    if (lo && hi && *lo == *hi) return *lo;
    p *= 2;
  }
}

}  // namespace radpi
