#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radpi/exact.hpp"
#include "radpi/fixed.hpp"

namespace radpi {

/// An approximation of pi and its count of correct digits.
struct PiApprox {
  FixedReal value;
  int digits = 0;
};

/// A radical computed two ways.
struct RadicalApprox {
  FixedReal value;
  FixedReal reference;
  int digits = 0;
};

struct ConvergenceRow {
  int iteration = 0;
  int digits = 0;
  long work = 0;  ///< terms or working precision
  std::int64_t wall_ms = 0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  /// The last approximation of pi.
  FixedReal value;

  /// "iteration,digits,work,wall_ms" and one line per row.
  std::string to_csv() const;
};

/// 4 * 2^(k-1) / gamma_k.
PiApprox pi_rational_single(int k);

/// 4 * (2^(k-1) / gamma_k + (v_k - 1) / 2), v_k at precision p.
/// p = 0 picks twice the digits of gamma_k plus guard digits.
PiApprox pi_rational_double(int k, int p = 0);

/// v <- (v - 1/v) / 2 applied k - 1 times at precision p.
FixedReal v_iter_fixed(const BigInt& v1, int k, int p);

/// 2 * (a + cos a) with a = 2^k / gamma_k.
FixedReal pi_cos_hint(int k, int p);

/// a <- a + cos a from `seed`, multiplying the working precision by
/// `schedule_factor` each step. Digits are those of 2a against pi. Seeds
/// near pi/2 converge; others end in a divergence error.
ConvergenceReport pi_cubic(int iterations, const FixedReal& seed, int schedule_factor = 5,
                           int initial_precision = 10);

/// v_k / v_{k-n} against sqrt(2 - c_n) / c_{n+1}. p = 0 sizes it from gamma_k.
RadicalApprox nested_radical_via_v(int k, int n, int p = 0);

/// 1 + v_k / v_{k-1} against sqrt(2).
RadicalApprox sqrt2_via_v(int k, int p = 0);

enum class RadicalSumMode { arctan, bare };

/// 2^k * sum_{n=k}^{k+terms-1} arctan(sqrt(2 - c_{n-1}) / c_n). The bare mode
/// drops the arctangent, which is only the limit form.
PiApprox pi_radical_sum(int k, int terms, int p, RadicalSumMode mode = RadicalSumMode::arctan);

/// 4 * (2^(k-1) arctan(1/gamma_k) + arctan((v_k - 1)/(v_k + 1))) to p digits.
PiApprox pi_two_term(int k, int p);

}  // namespace radpi
