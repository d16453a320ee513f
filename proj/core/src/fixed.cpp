#include "radpi/fixed.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>

#include "radpi/error.hpp"

namespace radpi {
namespace {

std::atomic<int> g_guard_digits{10};

// m * 10^delta, truncated toward zero when delta < 0.
BigInt shift_decimal(const BigInt& m, long delta) {
  if (delta == 0) return m;
  if (delta > 0) return BigInt(m * pow10(static_cast<unsigned long>(delta)));
  BigInt r;
  BigInt d = pow10(static_cast<unsigned long>(-delta));
  mpz_tdiv_q(r.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
  return r;
}

// Mantissas of a and b brought to the common scale max(sa, sb).
std::pair<BigInt, BigInt> aligned(const FixedReal& a, const FixedReal& b) {
  int s = std::max(a.scale(), b.scale());
  return {shift_decimal(a.mantissa(), s - a.scale()), shift_decimal(b.mantissa(), s - b.scale())};
}

void check_scale(int p, const char* op) {
  if (p < 0) throw Error(ErrorKind::usage, std::string(op) + ": negative precision");
}

// atanh(z) = z + z^3/3 + z^5/5 + ... for |z| < 1, at scale q.
FixedReal atanh_series(const FixedReal& z, int q) {
  const BigInt unit = pow10(static_cast<unsigned long>(q));
  BigInt zm = z.rescaled(q).mantissa();
  BigInt z2 = zm * zm;
  mpz_tdiv_q(z2.get_mpz_t(), z2.get_mpz_t(), unit.get_mpz_t());
  BigInt power = zm;
  BigInt sum = 0;
  for (unsigned long n = 0; sgn(power) != 0; ++n) {
    BigInt term;
    mpz_tdiv_q_ui(term.get_mpz_t(), power.get_mpz_t(), 2 * n + 1);
    sum += term;
    power *= z2;
    mpz_tdiv_q(power.get_mpz_t(), power.get_mpz_t(), unit.get_mpz_t());
  }
  return FixedReal(std::move(sum), q);
}

}  // namespace

int guard_digits() noexcept { return g_guard_digits.load(std::memory_order_relaxed); }

void set_guard_digits(int g) {
  if (g < 0) throw Error(ErrorKind::usage, "guard digits must be nonnegative");
  g_guard_digits.store(g, std::memory_order_relaxed);
}

long bits_for_digits(long digits) {
  return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.321928094887362)) + 1;
}

FixedReal::FixedReal(BigInt mantissa, int scale) : mantissa_(std::move(mantissa)), scale_(scale) {
  check_scale(scale, "FixedReal");
}

FixedReal FixedReal::from_integer(const BigInt& value, int scale) {
  return FixedReal(shift_decimal(value, scale), scale);
}

FixedReal FixedReal::from_rational(const BigRational& q, int scale) {
  check_scale(scale, "from_rational");
  BigInt n = q.num() * pow10(static_cast<unsigned long>(scale));
  BigInt r;
  mpz_tdiv_q(r.get_mpz_t(), n.get_mpz_t(), q.den().get_mpz_t());
  return FixedReal(std::move(r), scale);
}

FixedReal FixedReal::parse(std::string_view text) {
  auto fail = [&] { return Error(ErrorKind::malformed, "not a decimal number: '" + std::string(text) + "'"); };
  std::string digits;
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  int scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++scale;
    } else {
      throw fail();
    }
  }
  if (!seen_digit) throw fail();
  BigInt m(digits, 10);
  if (negative) m = -m;
  return FixedReal(std::move(m), scale);
}

FixedReal FixedReal::rescaled(int scale) const {
  check_scale(scale, "rescaled");
  return FixedReal(shift_decimal(mantissa_, static_cast<long>(scale) - scale_), scale);
}

FixedReal FixedReal::abs() const { return FixedReal(BigInt(::abs(mantissa_)), scale_); }

BigInt FixedReal::floor() const {
  BigInt r;
  BigInt d = pow10(static_cast<unsigned long>(scale_));
  mpz_fdiv_q(r.get_mpz_t(), mantissa_.get_mpz_t(), d.get_mpz_t());
  return r;
}

BigRational FixedReal::to_rational() const {
  return BigRational(mantissa_, pow10(static_cast<unsigned long>(scale_)));
}

double FixedReal::to_double() const {
  int s = std::min(scale_, 30);
  BigInt m = shift_decimal(mantissa_, static_cast<long>(s) - scale_);
  return m.get_d() / std::pow(10.0, s);
}

std::string FixedReal::to_string() const {
  std::string digits = BigInt(::abs(mantissa_)).get_str();
  if (digits.size() <= static_cast<std::size_t>(scale_)) {
    digits.insert(0, static_cast<std::size_t>(scale_) + 1 - digits.size(), '0');
  }
  if (scale_ > 0) digits.insert(digits.size() - static_cast<std::size_t>(scale_), 1, '.');
  if (sgn(mantissa_) < 0) digits.insert(0, 1, '-');
  return digits;
}

FixedReal operator+(const FixedReal& a, const FixedReal& b) {
  auto [x, y] = aligned(a, b);
  return FixedReal(BigInt(x + y), std::max(a.scale_, b.scale_));
}

FixedReal operator-(const FixedReal& a, const FixedReal& b) {
  auto [x, y] = aligned(a, b);
  return FixedReal(BigInt(x - y), std::max(a.scale_, b.scale_));
}

FixedReal operator*(const FixedReal& a, const BigInt& k) { return FixedReal(BigInt(a.mantissa_ * k), a.scale_); }

bool operator==(const FixedReal& a, const FixedReal& b) {
  auto [x, y] = aligned(a, b);
  return x == y;
}

std::strong_ordering operator<=>(const FixedReal& a, const FixedReal& b) {
  auto [x, y] = aligned(a, b);
  int c = cmp(x, y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt isqrt(const BigInt& n, const BigInt* hint) {
  if (sgn(n) < 0) throw Error(ErrorKind::domain, "isqrt: negative argument");
  if (sgn(n) == 0) return 0;
  BigInt x;
  if (hint != nullptr && sgn(*hint) > 0) {
    x = *hint;
  } else {
    // Seed from the leading 53 bits: n ~ d * 2^e with d in [0.5, 1).
    long e = 0;
    double d = mpz_get_d_2exp(&e, n.get_mpz_t());
    if (e & 1) {
      d *= 2.0;
      --e;
    }
    long half = e / 2;
    auto top = static_cast<std::uint64_t>(std::sqrt(d) * 9007199254740992.0);  // * 2^53
    x = BigInt(static_cast<unsigned long>(top));
    if (half >= 53) {
      x <<= static_cast<mp_bitcnt_t>(half - 53);
    } else {
      x >>= static_cast<mp_bitcnt_t>(53 - half);
    }
    if (sgn(x) == 0) x = 1;
  }
  // One step from any positive seed lands at or above floor(sqrt(n)); from
  // there the iteration decreases monotonically to the floor.
  BigInt q = n / x;
  x = (x + q) >> 1;
  for (;;) {
    q = n / x;
    BigInt y = (x + q) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  return x;
}

FixedReal fx_mul(const FixedReal& a, const FixedReal& b, int p) {
  check_scale(p, "fx_mul");
  BigInt m = a.mantissa() * b.mantissa();
  return FixedReal(shift_decimal(m, static_cast<long>(p) - a.scale() - b.scale()), p);
}

FixedReal fx_div(const FixedReal& a, const FixedReal& b, int p) {
  check_scale(p, "fx_div");
  if (b.is_zero()) throw Error(ErrorKind::division_by_zero, "fx_div: division by zero");
  // a/b * 10^p = a.m * 10^(p + sb - sa) / b.m, truncated exactly.
  long e = static_cast<long>(p) + b.scale() - a.scale();
  BigInt num = a.mantissa();
  BigInt den = b.mantissa();
  if (e >= 0) {
    num *= pow10(static_cast<unsigned long>(e));
  } else {
    den *= pow10(static_cast<unsigned long>(-e));
  }
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return FixedReal(std::move(q), p);
}

FixedReal fx_sqrt(const FixedReal& x, int p, const FixedReal* hint) {
  check_scale(p, "fx_sqrt");
  if (x.sign() < 0) throw Error(ErrorKind::domain, "fx_sqrt: negative argument");
  BigInt n = shift_decimal(x.mantissa(), 2L * p - x.scale());
  if (hint != nullptr) {
    BigInt h = hint->rescaled(p).mantissa();
    return FixedReal(isqrt(n, &h), p);
  }
  return FixedReal(isqrt(n), p);
}

FixedReal fx_cos(const FixedReal& x, int p) {
  check_scale(p, "fx_cos");
  BigInt ax = ::abs(x.mantissa());
  if (ax > BigInt(4 * pow10(static_cast<unsigned long>(x.scale())))) {
    throw Error(ErrorKind::domain, "fx_cos: |x| > 4 is outside the supported range");
  }
  // Binary fixed point internally. The argument is halved r times, the series
  // gives u = 1 - cos(x / 2^r), and u <- 2u(2 - u) undoes each halving.
  const long target_bits = bits_for_digits(p + guard_digits()) + 8;
  const long halvings = std::clamp(static_cast<long>(std::sqrt(static_cast<double>(target_bits)) / 2.0), 0L, 4096L);
  const long w = target_bits + 2 * halvings + 48;
  const auto wb = static_cast<mp_bitcnt_t>(w);

  BigInt y = ax << static_cast<mp_bitcnt_t>(w - halvings);
  BigInt tens = pow10(static_cast<unsigned long>(x.scale()));
  mpz_tdiv_q(y.get_mpz_t(), y.get_mpz_t(), tens.get_mpz_t());
  BigInt y2 = y * y;
  y2 >>= wb;

  BigInt term = y2 >> 1;
  BigInt u = term;
  for (unsigned long n = 1; sgn(term) != 0; ++n) {
    term *= y2;
    term >>= wb;
    mpz_tdiv_q_ui(term.get_mpz_t(), term.get_mpz_t(), (2 * n + 1) * (2 * n + 2));
    if (n % 2 == 1) {
      u -= term;
    } else {
      u += term;
    }
  }
  for (long i = 0; i < halvings; ++i) {
    BigInt sq = u * u;
    sq >>= static_cast<mp_bitcnt_t>(w - 1);
    u <<= 2;
    u -= sq;
  }
  BigInt v = pow2(static_cast<unsigned long>(w)) - u;
  v *= pow10(static_cast<unsigned long>(p));
  mpz_tdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), wb);
  return FixedReal(std::move(v), p);
}

FixedReal fx_ln(const FixedReal& x, int p) {
  check_scale(p, "fx_ln");
  if (x.sign() <= 0) throw Error(ErrorKind::domain, "fx_ln: argument must be positive");
  const int q = p + guard_digits() + 5;
  // x = y * 10^e with y in [1, 10).
  const long nd = static_cast<long>(decimal_digits(x.mantissa()));
  const long e = nd - 1 - x.scale();
  FixedReal y(shift_decimal(x.mantissa(), q - nd + 1), q);
  FixedReal one = FixedReal::from_integer(1, q);
  FixedReal ln_y = atanh_series(fx_div(y - one, y + one, q), q) * BigInt(2);
  FixedReal result = ln_y;
  if (e != 0) {
    FixedReal ln10 = atanh_series(FixedReal::from_rational(BigRational(9, 11), q), q) * BigInt(2);
    result = result + ln10 * BigInt(e);
  }
  return result.rescaled(p);
}

int fx_agree_digits(const FixedReal& a, const FixedReal& b) {
  auto [x, y] = aligned(a, b);
  const long s = std::max(a.scale(), b.scale());
  BigInt d = ::abs(BigInt(x - y));
  if (sgn(d) == 0) return std::min(a.scale(), b.scale());
  const long nd = static_cast<long>(decimal_digits(d));
  long digits = s - nd;
  if (d == pow10(static_cast<unsigned long>(nd - 1))) ++digits;
  return static_cast<int>(std::max(0L, digits));
}

}  // namespace radpi
