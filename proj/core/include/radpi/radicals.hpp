#pragma once

#include <deque>

#include "radpi/exact.hpp"
#include "radpi/fixed.hpp"

namespace radpi {

/// The nested radicals c_0 = 0, c_n = sqrt(2 + c_{n-1}) at a fixed precision,
/// extended on demand and memoized.
class RadicalSequence {
 public:
  explicit RadicalSequence(int precision);

  int precision() const noexcept { return precision_; }
  /// Number of terms computed so far.
  std::size_t size() const noexcept { return values_.size(); }

  const FixedReal& c(int n);

 private:
  int precision_;
  std::deque<FixedReal> values_;
};

/// c_n to precision p (p >= 16).
FixedReal nested_c(int n, int p);

/// gamma_k = floor(c_k / sqrt(2 - c_{k-1})), exact, with adaptive precision.
BigInt gamma_k(int k);

/// sqrt(2 - c_{n-1}) / c_n at precision p.
FixedReal radical_ratio(int n, int p);

/// Same, drawing the radicals from an existing sequence. The sequence must
/// carry enough extra digits to absorb the cancellation in 2 - c_{n-1}.
FixedReal radical_ratio(RadicalSequence& seq, int n, int p);

/// Working precision for radicals up to index n so that 2 - c_n keeps p digits.
int radical_working_precision(int n, int p);

}  // namespace radpi
