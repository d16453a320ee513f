#pragma once

#include <random>
#include <string>

#include <doctest.h>

#include "radpi/error.hpp"
#include "radpi/exact.hpp"
#include "radpi/fixed.hpp"

namespace radpi::test {

inline BigRational q(long num, long den = 1) { return BigRational(BigInt(num), BigInt(den)); }
inline BigRational q(int num) { return q(static_cast<long>(num)); }
inline BigRational q(const char* text) { return BigRational::parse(text); }
inline FixedReal fr(const char* text) { return FixedReal::parse(text); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Random integer with up to `digits` decimal digits, optionally signed.
inline BigInt random_int(int digits, bool allow_negative = true) {
  std::string s;
  const int n = static_cast<int>(uniform(1, digits));
  s.push_back(static_cast<char>('1' + uniform(0, 8)));
  for (int i = 1; i < n; ++i) s.push_back(static_cast<char>('0' + uniform(0, 9)));
  BigInt v(s);
  if (allow_negative && uniform(0, 1) == 1) v = -v;
  return v;
}

}  // namespace radpi::test

#define CHECK_ERROR_KIND(expr, expected_kind)                         \
  do {                                                                \
    bool thrown_ = false;                                             \
    try {                                                             \
      (void)(expr);                                                   \
    } catch (const ::radpi::Error& e_) {                              \
      thrown_ = true;                                                 \
      CHECK_MESSAGE(e_.kind() == (expected_kind), e_.what());         \
    }                                                                 \
    CHECK_MESSAGE(thrown_, "expected a radpi::Error from " #expr);    \
  } while (false)
