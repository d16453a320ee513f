#include "radpi/approx.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "radpi/error.hpp"
#include "radpi/radicals.hpp"
#include "radpi/series.hpp"

namespace radpi {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::usage, message);
}

int digits_of(const BigInt& x) { return static_cast<int>(decimal_digits(x)); }

FixedReal one(int p) { return FixedReal::from_integer(1, p); }

// v_1 .. v_k at precision p, keeping only the last `keep` values.
std::vector<FixedReal> v_trace(const BigInt& v1, int k, int p, int keep) {
  if (v1 < 2) throw Error(ErrorKind::usage, "v-iteration: v1 must be at least 2");
  if (k < 1) throw Error(ErrorKind::usage, "v-iteration: k must be at least 1");
  const FixedReal tiny(BigInt(100), p);  // 10^(-p+2)
  std::vector<FixedReal> tail;
  FixedReal v = FixedReal::from_integer(v1, p);
  for (int n = 1;; ++n) {
    if (n > k - keep) tail.push_back(v);
    if (n == k) break;
    if (v.abs() < tiny) {
      throw Error(ErrorKind::precision_exhausted,
                  "v-iteration: |v_" + std::to_string(n) + "| fell below 10^-" + std::to_string(p - 2));
    }
    FixedReal next = v - fx_div(one(p), v, p);
    v = FixedReal(BigInt(next.mantissa() / 2), p);
  }
  return tail;
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string ConvergenceReport::to_csv() const {
  std::ostringstream out;
  out << "iteration,digits,work,wall_ms\n";
  for (const auto& r : rows) out << r.iteration << ',' << r.digits << ',' << r.work << ',' << r.wall_ms << '\n';
  return out.str();
}

FixedReal v_iter_fixed(const BigInt& v1, int k, int p) {
  require(p >= 3, "v_iter_fixed: precision must be at least 3");
  return v_trace(v1, k, p, 1).back();
}

PiApprox pi_rational_single(int k) {
  require(k >= 2, "pi_rational_single: k must be at least 2");
  const BigInt gamma = gamma_k(k);
  const int d = digits_of(gamma);
  const int p = std::max(2 * k, 2 * d + guard_digits());
  FixedReal value = FixedReal::from_rational(BigRational(BigInt(4 * pow2(static_cast<unsigned long>(k - 1))), gamma), p);
  const int digits = pi_agree_digits(value, d);
  return {std::move(value), digits};
}

PiApprox pi_rational_double(int k, int p) {
  require(k >= 2, "pi_rational_double: k must be at least 2");
  const BigInt gamma = gamma_k(k);
  if (p == 0) p = std::max(2 * k, 2 * digits_of(gamma) + 2 * guard_digits());
  require(p >= 3, "pi_rational_double: precision must be at least 3");
  const FixedReal vk = v_iter_fixed(gamma, k, p);
  const FixedReal head = FixedReal::from_rational(BigRational(pow2(static_cast<unsigned long>(k - 1)), gamma), p);
  const FixedReal tail = vk - one(p);
  FixedReal value = (head * BigInt(4)) + FixedReal(BigInt(tail.mantissa() * 2), p);
  const int digits = pi_agree_digits(value, 2 * digits_of(gamma));
  return {std::move(value), digits};
}

FixedReal pi_cos_hint(int k, int p) {
  require(k >= 2, "pi_cos_hint: k must be at least 2");
  require(p >= 1, "pi_cos_hint: precision must be positive");
  const int w = p + guard_digits();
  const FixedReal a = FixedReal::from_rational(BigRational(pow2(static_cast<unsigned long>(k)), gamma_k(k)), w);
  return ((a + fx_cos(a, w)) * BigInt(2)).rescaled(p);
}

ConvergenceReport pi_cubic(int iterations, const FixedReal& seed, int schedule_factor, int initial_precision) {
  require(iterations >= 1 && iterations <= 12, "pi_cubic: iterations must be in 1..12");
  require(schedule_factor >= 3, "pi_cubic: schedule factor must be at least 3");
  require(initial_precision >= 1, "pi_cubic: initial precision must be positive");
  if (seed.abs() > FixedReal::from_integer(4)) {
    throw Error(ErrorKind::domain, "pi_cubic: seed " + seed.to_string() + " is outside [-4, 4]");
  }

  ConvergenceReport report;
  FixedReal a = seed;
  // A seed finer than the schedule start keeps its own digits plus guard digits.
  long w = seed.scale() >= initial_precision ? seed.scale() + guard_digits() : initial_precision;
  int best = -1;
  int stalled = 0;
  int hint = 64;
  for (int n = 1; n <= iterations; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const int wi = static_cast<int>(w);
    if (a.abs() > FixedReal::from_integer(4)) {
      throw Error(ErrorKind::divergence, "pi_cubic: iterate left the range of the cosine");
    }
    a = (a + fx_cos(a, wi)).rescaled(wi);
    const std::int64_t ms = elapsed_ms(start);
    const int digits = pi_agree_digits(a * BigInt(2), std::min(wi, hint));
    report.rows.push_back({n, digits, w, ms});
    if (digits > best) {
      best = digits;
      stalled = 0;
    } else if (++stalled == 3) {
      throw Error(ErrorKind::divergence, "pi_cubic: no improvement in 3 iterations");
    }
    hint = 3 * digits + 32;
    w *= schedule_factor;
  }
  report.value = a * BigInt(2);
  return report;
}

RadicalApprox nested_radical_via_v(int k, int n, int p) {
  require(n >= 1 && k > n, "nested_radical_via_v: need k > n >= 1");
  const BigInt gamma = gamma_k(k);
  if (p == 0) p = digits_of(gamma) + 2 * guard_digits();
  require(p >= 16, "nested_radical_via_v: precision must be at least 16");
  const auto tail = v_trace(gamma, k, p, n + 1);
  FixedReal value = fx_div(tail.back(), tail.front(), p);
  FixedReal reference = radical_ratio(n + 1, p);
  const int digits = fx_agree_digits(value, reference);
  return {std::move(value), std::move(reference), digits};
}

RadicalApprox sqrt2_via_v(int k, int p) {
  require(k >= 2, "sqrt2_via_v: k must be at least 2");
  RadicalApprox r = nested_radical_via_v(k, 1, p);
  const int w = r.value.scale();
  r.value = r.value + one(w);
  r.reference = fx_sqrt(FixedReal::from_integer(2, w), w);
  r.digits = fx_agree_digits(r.value, r.reference);
  return r;
}

PiApprox pi_radical_sum(int k, int terms, int p, RadicalSumMode mode) {
  require(k >= 2, "pi_radical_sum: k must be at least 2");
  require(terms >= 1, "pi_radical_sum: terms must be at least 1");
  require(p >= 16, "pi_radical_sum: precision must be at least 16");
  const BigInt scale = pow2(static_cast<unsigned long>(k));
  const int w = p + guard_digits() + digits_of(scale);
  RadicalSequence seq(radical_working_precision(k + terms, w));
  FixedReal sum(BigInt(0), w);
  for (int n = k; n < k + terms; ++n) {
    const FixedReal ratio = radical_ratio(seq, n, w);
    sum = sum + (mode == RadicalSumMode::arctan ? arctan_fast(ratio.to_rational(), w).value : ratio);
  }
  FixedReal value = (sum * scale).rescaled(p);
  const int digits = pi_agree_digits(value, p);
  return {std::move(value), digits};
}

PiApprox pi_two_term(int k, int p) {
  require(k >= 2, "pi_two_term: k must be at least 2");
  require(p >= 100, "pi_two_term: precision must be at least 100");
  const BigInt gamma = gamma_k(k);
  const BigInt mult = pow2(static_cast<unsigned long>(k - 1));
  const int w = p + guard_digits() + digits_of(mult);
  const FixedReal vk = v_iter_fixed(gamma, k, w);
  const FixedReal x = fx_div(vk - one(w), vk + one(w), w);
  const FixedReal head = arctan_fast(BigRational(BigInt(1), gamma), w).value * mult;
  const FixedReal tail = x.is_zero() ? FixedReal(BigInt(0), w) : arctan_fast(x.to_rational(), w).value;
  FixedReal value = ((head + tail) * BigInt(4)).rescaled(p);
  const int digits = pi_agree_digits(value, p);
  return {std::move(value), digits};
}

}  // namespace radpi
