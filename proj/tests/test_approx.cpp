#include "support.hpp"

#include "radpi/approx.hpp"
#include "radpi/radicals.hpp"
#include "radpi/series.hpp"

using namespace radpi;
using radpi::test::fr;
using radpi::test::q;

namespace {

FixedReal pi_error(const FixedReal& x) { return (x - pi_reference(x.scale() + 10)).abs(); }

}  // namespace

TEST_SUITE("approx") {
  TEST_CASE("single rational approximation") {
    const PiApprox k2 = pi_rational_single(2);
    CHECK(k2.value == FixedReal::from_integer(4, k2.value.scale()));
    CHECK(k2.digits == 0);
    CHECK_ERROR_KIND(pi_rational_single(1), ErrorKind::usage);
  }

  TEST_CASE("single-term digits grow about 0.3 per unit of k") {
    // Least-squares slope of digits against k over k = 100..1000.
    double sk = 0, sd = 0, skk = 0, skd = 0;
    int n = 0;
    for (int k = 100; k <= 1000; k += 100) {
      const double d = pi_rational_single(k).digits;
      sk += k;
      sd += d;
      skk += double(k) * k;
      skd += k * d;
      ++n;
    }
    const double slope = (n * skd - sk * sd) / (n * skk - sk * sk);
    CHECK(slope > 0.25);
    CHECK(slope < 0.35);
  }

  TEST_CASE("double rational approximation doubles the digits") {
    CHECK(pi_rational_double(20).digits > pi_rational_single(20).digits);
    for (int k : {500, 1000}) {
      const int single = pi_rational_single(k).digits;
      const int twice = pi_rational_double(k).digits;
      CHECK_MESSAGE(twice >= 2 * single - 4, "k = " << k << ": " << single << " -> " << twice);
    }
  }

  TEST_CASE("fixed-precision v-iteration") {
    CHECK(fx_agree_digits(v_iter_fixed(5, 3, 30), FixedReal::from_rational(q(119, 120), 30)) >= 28);
    CHECK(v_iter_fixed(5, 3, 30).to_string().substr(0, 10) == "0.99166666");
    CHECK(fx_agree_digits(v_iter_fixed(10, 4, 40), FixedReal::from_rational(q(72697201, 74455920), 40)) >= 38);
    CHECK(v_iter_fixed(7, 1, 20) == FixedReal::from_integer(7, 20));
    // 5, 12/5, 119/120, -239/28560: the fourth iterate is below 10^-1.
    CHECK_ERROR_KIND(v_iter_fixed(5, 5, 3), ErrorKind::precision_exhausted);
    CHECK_ERROR_KIND(v_iter_fixed(1, 5, 30), ErrorKind::usage);
    CHECK_ERROR_KIND(v_iter_fixed(5, 0, 30), ErrorKind::usage);
  }

  TEST_CASE("cosine hint") {
    CHECK(pi_error(pi_cos_hint(10, 60)) < pi_error(pi_rational_single(10).value.rescaled(60)));
    // When gamma_{k+1} = 2 gamma_k the hint is the same number, so improvement is strict only otherwise.
    for (int k = 5; k < 20; ++k) {
      const FixedReal next = pi_error(pi_cos_hint(k + 1, 80));
      const FixedReal here = pi_error(pi_cos_hint(k, 80));
      CHECK_MESSAGE(next <= here, "k = " << k);
      if (gamma_k(k + 1) != 2 * gamma_k(k)) CHECK_MESSAGE(next < here, "k = " << k);
    }
    CHECK((pi_cos_hint(2, 30) - pi_reference(30)).abs() < fr("0.5"));
    CHECK_ERROR_KIND(pi_cos_hint(1, 30), ErrorKind::usage);
  }

  TEST_CASE("cubic iteration") {
    const ConvergenceReport r = pi_cubic(5, fr("1.572963"), 5);
    REQUIRE(r.rows.size() == 5);
    // Exact-arithmetic digit counts for this seed and schedule (independent oracle).
    const int expected[] = {8, 26, 81, 246, 741};
    for (int i = 0; i < 5; ++i) {
      CHECK(r.rows[i].iteration == i + 1);
      CHECK(r.rows[i].digits == expected[i]);
    }
    CHECK(r.rows[0].work == 10);
    CHECK(r.rows[4].work == 6250);
    for (std::size_t i = 2; i + 1 < r.rows.size(); ++i) {
      const double ratio = double(r.rows[i + 1].digits) / r.rows[i].digits;
      CHECK(ratio >= 2.5);
      CHECK(ratio <= 3.5);
    }
    for (std::size_t i = 1; i + 1 < r.rows.size(); ++i) {
      CHECK(r.rows[i + 1].digits >= 3 * r.rows[i].digits - 2);
    }
    CHECK(pi_agree_digits(r.value) == r.rows.back().digits);
  }

  TEST_CASE("cubic iteration options and failures") {
    const FixedReal pi = pi_reference(120);
    const FixedReal half(BigInt(pi.mantissa() / 2), pi.scale());
    CHECK(pi_cubic(1, half.rescaled(100)).rows[0].digits >= 100);
    const ConvergenceReport f3 = pi_cubic(4, fr("1.572963"), 3);
    CHECK(f3.rows[3].work == 270);
    CHECK(f3.rows[3].digits > f3.rows[2].digits);
    CHECK_ERROR_KIND(pi_cubic(5, fr("-2")), ErrorKind::divergence);
    CHECK_ERROR_KIND(pi_cubic(5, fr("4.5")), ErrorKind::domain);
    CHECK_ERROR_KIND(pi_cubic(13, fr("1.57")), ErrorKind::usage);
    CHECK_ERROR_KIND(pi_cubic(3, fr("1.57"), 2), ErrorKind::usage);
  }

  TEST_CASE("convergence report CSV") {
    ConvergenceReport r;
    r.rows = {{1, 8, 10, 0}, {2, 26, 50, 3}};
    CHECK(r.to_csv() == "iteration,digits,work,wall_ms\n1,8,10,0\n2,26,50,3\n");
  }

  TEST_CASE("nested radicals from the v-iteration") {
    const RadicalApprox small = nested_radical_via_v(20, 2);
    CHECK(small.digits > 0);
    CHECK(small.reference == radical_ratio(3, small.reference.scale()));
    int previous = -1;
    for (int k : {20, 50, 100}) {
      const int digits = nested_radical_via_v(k, 2, 80).digits;
      CHECK(digits >= previous);
      previous = digits;
    }
    CHECK_ERROR_KIND(nested_radical_via_v(3, 5), ErrorKind::usage);
    CHECK_ERROR_KIND(nested_radical_via_v(3, 0), ErrorKind::usage);
  }

  TEST_CASE("square root of 2 from the v-iteration") {
    const RadicalApprox r = sqrt2_via_v(100);
    CHECK(r.digits >= 20);
    const FixedReal frac = r.value - FixedReal::from_integer(1, r.value.scale());
    CHECK(frac > fr("0.41"));
    CHECK(frac < fr("0.42"));
    CHECK(r.reference.to_string().substr(0, 21) == "1.4142135623730950488");
    CHECK_ERROR_KIND(sqrt2_via_v(1), ErrorKind::usage);
  }

  TEST_CASE("radical arctangent sums") {
    const FixedReal pi = pi_reference(70);
    FixedReal previous = FixedReal::from_integer(0, 50);
    for (int terms = 1; terms <= 10; ++terms) {
      const FixedReal s = pi_radical_sum(2, terms, 50).value;
      CHECK(s > previous);
      CHECK(s < pi);
      previous = s;
    }
    const PiApprox half = pi_radical_sum(2, 1, 50);
    const FixedReal half_pi(BigInt(pi.mantissa() / 2), pi.scale());
    CHECK(fx_agree_digits(half.value, half_pi) >= 46);
    CHECK(pi_radical_sum(2, 40, 30).digits >= 10);
    // The bare ratio tan(t) overshoots t but tends to it as k grows.
    const FixedReal bare = pi_radical_sum(20, 1, 30, RadicalSumMode::bare).value;
    CHECK(bare > pi_radical_sum(20, 1, 30).value);
    CHECK(fx_agree_digits(bare, half_pi) >= 10);
    CHECK_ERROR_KIND(pi_radical_sum(2, 0, 50), ErrorKind::usage);
  }

  TEST_CASE("two-term arbitrary precision") {
    const PiApprox r = pi_two_term(10, 1000);
    CHECK(r.digits >= 1000);
    CHECK(r.value.scale() == 1000);
    for (int p : {200, 400, 800}) {
      const int d = pi_two_term(50, p).digits;
      CHECK(d >= p);
      CHECK(d <= p + 20);
    }
    CHECK_ERROR_KIND(pi_two_term(10, 50), ErrorKind::usage);
  }
}
