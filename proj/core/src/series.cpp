#include "radpi/series.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "radpi/error.hpp"

namespace radpi {
namespace {

// Binary fixed point with `bits` fraction bits, sized for p + G decimals.
// `eps` is 10^-(p+G) in that representation: the truncation threshold.
struct Workspace {
  long bits;
  mp_bitcnt_t shift;
  BigInt eps;
};

Workspace make_workspace(int p) {
  const int d = p + guard_digits();
  const long bits = bits_for_digits(d) + 32;
  BigInt eps = pow2(static_cast<unsigned long>(bits)) / pow10(static_cast<unsigned long>(d));
  return {bits, static_cast<mp_bitcnt_t>(bits), std::move(eps)};
}

FixedReal to_decimal(const BigInt& scaled, const Workspace& ws, int p) {
  BigInt v = scaled * pow10(static_cast<unsigned long>(p));
  mpz_tdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), ws.shift);
  return FixedReal(std::move(v), p);
}

// Scaled a/b.
BigInt scaled_quotient(const BigInt& a, const BigInt& b, const Workspace& ws) {
  BigInt v = a << ws.shift;
  mpz_tdiv_q(v.get_mpz_t(), v.get_mpz_t(), b.get_mpz_t());
  return v;
}

// Exact updates cost O(W * size) per step, the scaled-constant path a full W x W product.
bool is_small(const BigInt& a, const BigInt& b, const Workspace& ws) {
  const std::size_t limit = std::max<std::size_t>(256, static_cast<std::size_t>(ws.bits) / 16);
  return mpz_sizeinbase(a.get_mpz_t(), 2) + mpz_sizeinbase(b.get_mpz_t(), 2) <= limit;
}

// Multiplies a scaled value by num/den. Short ratios stay exact integer
// operations (linear cost); long ones are rounded to a scaled constant once.
class RatioMultiplier {
 public:
  RatioMultiplier(const BigInt& num, const BigInt& den, const Workspace& ws) : shift_(ws.shift) {
    exact_ = is_small(num, den, ws);
    if (exact_) {
      num_ = num;
      den_ = den;
    } else {
      fixed_ = scaled_quotient(num, den, ws);
    }
  }

  // v <- v * (num/den) * (mul/div)
  void apply(BigInt& v, unsigned long mul = 1, unsigned long div = 1) const {
    if (exact_) {
      if (mul != 1) {
        BigInt n = num_ * mul;
        v *= n;
      } else {
        v *= num_;
      }
      if (div != 1) {
        BigInt d = den_ * div;
        mpz_tdiv_q(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
      } else {
        mpz_tdiv_q(v.get_mpz_t(), v.get_mpz_t(), den_.get_mpz_t());
      }
    } else {
      v *= fixed_;
      mpz_tdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), shift_);
      if (mul != 1) v *= mul;
      if (div != 1) mpz_tdiv_q_ui(v.get_mpz_t(), v.get_mpz_t(), div);
    }
  }

 private:
  bool exact_ = true;
  mp_bitcnt_t shift_;
  BigInt num_, den_, fixed_;
};

// Multiplies a scaled complex value by (P + iQ)/D.
class ComplexMultiplier {
 public:
  ComplexMultiplier(const BigInt& p, const BigInt& q, const BigInt& d, const Workspace& ws) : shift_(ws.shift) {
    exact_ = is_small(p, d, ws) && is_small(q, d, ws);
    if (exact_) {
      p_ = p;
      q_ = q;
      d_ = d;
    } else {
      p_ = scaled_quotient(p, d, ws);
      q_ = scaled_quotient(q, d, ws);
    }
  }

  void apply(BigInt& re, BigInt& im) const {
    BigInt r = re * p_ - im * q_;
    BigInt i = re * q_ + im * p_;
    if (exact_) {
      mpz_tdiv_q(re.get_mpz_t(), r.get_mpz_t(), d_.get_mpz_t());
      mpz_tdiv_q(im.get_mpz_t(), i.get_mpz_t(), d_.get_mpz_t());
    } else {
      mpz_tdiv_q_2exp(re.get_mpz_t(), r.get_mpz_t(), shift_);
      mpz_tdiv_q_2exp(im.get_mpz_t(), i.get_mpz_t(), shift_);
    }
  }

 private:
  bool exact_ = true;
  mp_bitcnt_t shift_;
  BigInt p_, q_, d_;
};

bool below(const BigInt& v, unsigned long div, const BigInt& eps) {
  BigInt a = ::abs(v);
  if (div != 1) mpz_tdiv_q_ui(a.get_mpz_t(), a.get_mpz_t(), div);
  return a < eps;
}

void check_precision(int p, const char* op) {
  if (p < 0) throw Error(ErrorKind::usage, std::string(op) + ": negative precision");
}

}  // namespace

std::string_view engine_name(EngineKind kind) {
  switch (kind) {
    case EngineKind::maclaurin: return "mse";
    case EngineKind::euler: return "ese";
    case EngineKind::accelerated: return "ase";
  }
  return "?";
}

std::optional<EngineKind> parse_engine(std::string_view name) {
  if (name == "mse" || name == "maclaurin") return EngineKind::maclaurin;
  if (name == "ese" || name == "euler") return EngineKind::euler;
  if (name == "ase" || name == "accelerated") return EngineKind::accelerated;
  return std::nullopt;
}

ArctanResult arctan_maclaurin(const BigRational& x, int p, std::size_t max_terms) {
  check_precision(p, "arctan_maclaurin");
  if (x.abs() > BigRational(1)) throw Error(ErrorKind::domain, "arctan_maclaurin: |x| > 1");
  if (x.is_zero()) return {FixedReal(BigInt(0), p), 1};
  if (x.abs() == BigRational(1) && max_terms == 0) {
    throw Error(ErrorKind::precision_exhausted,
                "arctan_maclaurin: at |x| = 1 the series needs ~10^p terms; use a term cap or another engine");
  }
  const Workspace ws = make_workspace(p);
  const BigInt& a = x.num();
  const BigInt& b = x.den();
  BigInt power = scaled_quotient(a, b, ws);
  const RatioMultiplier x2(BigInt(a * a), BigInt(b * b), ws);

  BigInt sum = 0;
  std::size_t terms = 0;
  for (unsigned long n = 0;; ++n) {
    BigInt term;
    mpz_tdiv_q_ui(term.get_mpz_t(), power.get_mpz_t(), 2 * n + 1);
    if (n % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    ++terms;
    if (max_terms != 0 && terms >= max_terms) break;
    x2.apply(power);
    if (below(power, 2 * n + 3, ws.eps)) break;
  }
  return {to_decimal(sum, ws, p), terms};
}

ArctanResult arctan_euler(const BigRational& x, int p, std::size_t max_terms) {
  check_precision(p, "arctan_euler");
  if (x.is_zero()) return {FixedReal(BigInt(0), p), 1};
  const Workspace ws = make_workspace(p);
  const BigInt& a = x.num();
  const BigInt& b = x.den();
  const BigInt a2 = a * a;
  const BigInt s = a2 + b * b;
  // First term x / (1 + x^2) = ab / (a^2 + b^2); ratio (2n+2)/(2n+3) * x^2/(1+x^2).
  BigInt term = scaled_quotient(BigInt(a * b), s, ws);
  const RatioMultiplier ratio(a2, s, ws);

  BigInt sum = 0;
  std::size_t terms = 0;
  for (unsigned long n = 0;; ++n) {
    sum += term;
    ++terms;
    if (max_terms != 0 && terms >= max_terms) break;
    ratio.apply(term, 2 * n + 2, 2 * n + 3);
    if (below(term, 1, ws.eps)) break;
  }
  return {to_decimal(sum, ws, p), terms};
}

ArctanResult arctan_fast(const BigRational& x, int p, std::size_t max_terms) {
  check_precision(p, "arctan_fast");
  if (x.is_zero()) throw Error(ErrorKind::domain, "arctan_fast: x = 0 (g_1 = 2/x undefined)");
  const Workspace ws = make_workspace(p);
  const BigInt& a = x.num();
  const BigInt& b = x.den();
  const BigInt a2 = a * a;
  const BigInt b2 = b * b;
  const BigInt d0 = a2 + 4 * b2;
  // u_n = 1 / (g_n + i h_n). From g_1 + i h_1 = 2/x + i,
  //   u_1 = (2ab - i a^2) / (a^2 + 4b^2),
  // and each step of the g/h recursion multiplies g + i h by (1 - 2i/x)^2, so
  //   u_n = u_{n-1} * a^2 (a^2 - 4b^2 + 4iab) / (a^2 + 4b^2)^2.
  // The series term g_n / (g_n^2 + h_n^2) is Re(u_n).
  BigInt re = scaled_quotient(BigInt(2 * a * b), d0, ws);
  BigInt im = scaled_quotient(BigInt(-a2), d0, ws);
  const ComplexMultiplier step(BigInt(a2 * (a2 - 4 * b2)), BigInt(4 * a2 * a * b), BigInt(d0 * d0), ws);

  BigInt sum = 0;
  std::size_t terms = 0;
  int quiet = 0;
  for (unsigned long n = 1;; ++n) {
    const unsigned long odd = 2 * n - 1;
    if (below(re, odd, ws.eps) && below(im, odd, ws.eps)) {
      if (++quiet == 2) break;
    } else {
      quiet = 0;
    }
    BigInt term;
    mpz_tdiv_q_ui(term.get_mpz_t(), re.get_mpz_t(), odd);
    sum += term;
    ++terms;
    if (max_terms != 0 && terms >= max_terms) break;
    step.apply(re, im);
  }
  sum *= 2;
  return {to_decimal(sum, ws, p), terms};
}

ArctanResult arctan_with(EngineKind kind, const BigRational& x, int p, std::size_t max_terms) {
  switch (kind) {
    case EngineKind::maclaurin: return arctan_maclaurin(x, p, max_terms);
    case EngineKind::euler: return arctan_euler(x, p, max_terms);
    case EngineKind::accelerated: return arctan_fast(x, p, max_terms);
  }
  throw Error(ErrorKind::usage, "unknown series engine");
}

FixedReal SeriesEngine::arctan(const BigRational& x, int p) {
  ArctanResult r = arctan_with(kind_, x, p);
  terms_used_ = r.terms_used;
  return std::move(r.value);
}

GHState GHState::initial(const BigRational& x, int p) {
  if (x.is_zero()) throw Error(ErrorKind::domain, "GHState: x = 0");
  return {FixedReal::from_rational(BigRational(2) / x, p), FixedReal::from_integer(1, p), 1};
}

GHState GHState::next(const BigRational& x, int p) const {
  const FixedReal c = FixedReal::from_rational(BigRational(1) - BigRational(4) / (x * x), p);
  const FixedReal d = FixedReal::from_rational(BigRational(4) / x, p);
  return {fx_mul(g, c, p) + fx_mul(h, d, p), fx_mul(h, c, p) - fx_mul(g, d, p), n + 1};
}

FixedReal GHState::term(int p) const {
  return fx_div(g, fx_mul(g, g, p) + fx_mul(h, h, p), p);
}

FixedReal eval_pi(const MachinFormula& f, int p, EngineKind engine) {
  check_precision(p, "eval_pi");
  if (f.terms.empty()) throw Error(ErrorKind::malformed, "eval_pi: formula has no terms");
  std::size_t widest = 1;
  for (const auto& t : f.terms) widest = std::max(widest, decimal_digits(t.coeff));
  const int work = p + guard_digits() + static_cast<int>(widest);
  FixedReal total(BigInt(0), work);
  for (const auto& t : f.terms) {
    total = total + arctan_with(engine, t.arg, work).value * t.coeff;
  }
  return (total * BigInt(4)).rescaled(p);
}

void check_reference_agreement(const FixedReal& a, const FixedReal& b, int p) {
  const int agree = fx_agree_digits(a, b);
  if (agree < p) {
    throw Error(ErrorKind::inconsistency, "pi reference: the two formulas agree to only " + std::to_string(agree) +
                                              " of " + std::to_string(p) + " digits");
  }
}

FixedReal pi_reference(int p) {
  if (p < 16) throw Error(ErrorKind::usage, "pi_reference: precision must be at least 16");
  static std::mutex mutex;
  static std::optional<FixedReal> cached;
  std::lock_guard<std::mutex> lock(mutex);
  if (cached && cached->scale() >= p + guard_digits()) return cached->rescaled(p);

  const int work = p + guard_digits();
  FixedReal machin = eval_pi(machin_formula(), work, EngineKind::euler);
  FixedReal generated = eval_pi(two_term_formula(4), work, EngineKind::accelerated);
  check_reference_agreement(machin, generated, p);
  cached = machin;
  return machin.rescaled(p);
}

int pi_agree_digits(const FixedReal& x, int hint) {
  int q = std::max(64, hint + 16);
  for (;;) {
    const int d = fx_agree_digits(x, pi_reference(q));
    if (d < q - 4 || q >= x.scale() + 8) return d;
    q *= 2;
  }
}

}  // namespace radpi
