#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "radpi/exact.hpp"
#include "radpi/fixed.hpp"
#include "radpi/machin.hpp"

namespace radpi {

enum class EngineKind { maclaurin, euler, accelerated };

/// Short names used on the command line: mse, ese, ase.
std::string_view engine_name(EngineKind kind);
std::optional<EngineKind> parse_engine(std::string_view name);

struct ArctanResult {
  FixedReal value;
  std::size_t terms_used = 0;
};

/// x - x^3/3 + x^5/5 - ... for |x| <= 1. A nonzero `max_terms` returns the
/// partial sum after that many terms instead of running to precision.
ArctanResult arctan_maclaurin(const BigRational& x, int p, std::size_t max_terms = 0);

/// Euler's series sum_n 2^(2n) (n!)^2 / (2n+1)! * x^(2n+1) / (1+x^2)^(n+1).
ArctanResult arctan_euler(const BigRational& x, int p, std::size_t max_terms = 0);

/// 2 sum_{n>=1} 1/(2n-1) * g_n / (g_n^2 + h_n^2) with the g/h recursion.
ArctanResult arctan_fast(const BigRational& x, int p, std::size_t max_terms = 0);

ArctanResult arctan_with(EngineKind kind, const BigRational& x, int p, std::size_t max_terms = 0);

/// Engine handle that remembers how many terms its last evaluation used.
class SeriesEngine {
 public:
  explicit SeriesEngine(EngineKind kind) : kind_(kind) {}

  EngineKind kind() const noexcept { return kind_; }
  std::size_t terms_used() const noexcept { return terms_used_; }

  FixedReal arctan(const BigRational& x, int p);

 private:
  EngineKind kind_;
  std::size_t terms_used_ = 0;
};

/// g_n(x), h_n(x) of the accelerated series, advanced with the recursion
///   g_n = g_{n-1} (1 - 4/x^2) + 4 h_{n-1} / x
///   h_n = h_{n-1} (1 - 4/x^2) - 4 g_{n-1} / x
/// in fixed point. The engine itself sums the same terms through the
/// reciprocal 1/(g_n + i h_n); this type is the direct form.
struct GHState {
  FixedReal g;
  FixedReal h;
  int n = 1;

  static GHState initial(const BigRational& x, int p);
  GHState next(const BigRational& x, int p) const;
  /// g / (g^2 + h^2) at precision p.
  FixedReal term(int p) const;
};

/// 4 * sum_j A_j arctan(x_j) at precision p.
FixedReal eval_pi(const MachinFormula& f, int p, EngineKind engine);

/// pi to p digits, cross-checked between Machin's formula (Euler series) and
/// the generated k = 4 formula (accelerated series). Results are cached.
FixedReal pi_reference(int p);

/// Throws ErrorKind::inconsistency unless a and b agree to p digits.
void check_reference_agreement(const FixedReal& a, const FixedReal& b, int p);

/// Correct digits of x as an approximation of pi. `hint` is the expected
/// count and only sizes the first reference request.
int pi_agree_digits(const FixedReal& x, int hint = 0);

}  // namespace radpi
