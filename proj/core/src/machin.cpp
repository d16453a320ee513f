#include "radpi/machin.hpp"

#include <algorithm>
#include <sstream>

#include "radpi/error.hpp"
#include "radpi/radicals.hpp"
#include "radpi/series.hpp"

namespace radpi {
namespace {

struct ComplexRational {
  BigRational re;
  BigRational im;
};

ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
  const BigRational norm = b.re * b.re + b.im * b.im;
  if (norm.is_zero()) throw Error(ErrorKind::division_by_zero, "complex division by zero");
  const ComplexRational n = a * ComplexRational{b.re, -b.im};
  return {n.re / norm, n.im / norm};
}

FormulaTerm make_term(BigInt coeff, BigRational arg) {
  if (arg.sign() < 0) {
    coeff = -coeff;
    arg = -arg;
  }
  return {std::move(coeff), std::move(arg)};
}

void require_k(int k, int lo, const char* op) {
  if (k < lo) throw Error(ErrorKind::usage, std::string(op) + ": k must be at least " + std::to_string(lo));
}

// pi/4 to p digits from Machin's formula and the Euler series, independent of pi_reference.
FixedReal quarter_pi(int p) {
  const FixedReal a = arctan_euler(BigRational(BigInt(1), BigInt(5)), p).value * BigInt(4);
  const FixedReal b = arctan_euler(BigRational(BigInt(1), BigInt(239)), p).value;
  return a - b;
}

}  // namespace

const char* to_string(GenerationPath path) {
  switch (path) {
    case GenerationPath::input: return "input";
    case GenerationPath::v_iteration: return "v_iteration";
    case GenerationPath::kappa_lambda: return "kappa_lambda";
    case GenerationPath::direct: return "direct";
    case GenerationPath::template_expansion: return "template_expansion";
  }
  return "?";
}

MachinFormula machin_formula() {
  MachinFormula f;
  f.terms = {{4, BigRational(BigInt(1), BigInt(5))}, {-1, BigRational(BigInt(1), BigInt(239))}};
  f.provenance = {3, 0, GenerationPath::input};
  return f;
}

MachinFormula hermann_formula() {
  MachinFormula f;
  f.terms = {{2, BigRational(BigInt(1), BigInt(2))}, {-1, BigRational(BigInt(1), BigInt(7))}};
  f.provenance = {2, 0, GenerationPath::input};
  return f;
}

BigRational beta_direct(const BigInt& alpha, int k) {
  if (k < 2 || k > 8) throw Error(ErrorKind::usage, "beta_direct: k must be in 2..8");
  ComplexRational w = ComplexRational{BigRational(alpha), BigRational(1)} /
                      ComplexRational{BigRational(alpha), BigRational(-1)};
  for (int i = 1; i < k; ++i) w = w * w;
  const ComplexRational z{w.re, w.im - BigRational(1)};
  const ComplexRational q = ComplexRational{BigRational(2), BigRational(0)} / z;
  const BigRational im = q.im - BigRational(1);
  if (!im.is_zero()) {
    throw Error(ErrorKind::inconsistency, "beta_direct: imaginary part " + im.to_string() + " is not zero");
  }
  return q.re;
}

std::vector<KappaLambdaState> kappa_lambda_states(const BigInt& alpha, int k) {
  require_k(k, 1, "kappa_lambda_states");
  const BigInt a2 = alpha * alpha;
  std::vector<KappaLambdaState> out;
  out.push_back({BigRational(BigInt(a2 - 1), BigInt(a2 + 1)), BigRational(BigInt(2 * alpha), BigInt(a2 + 1)), 1});
  for (int n = 2; n <= k; ++n) {
    const auto& s = out.back();
    out.push_back({s.kappa * s.kappa - s.lambda * s.lambda, BigRational(2) * s.kappa * s.lambda, n});
  }
  return out;
}

BigRational kappa_lambda_iter(const BigInt& alpha, int k) {
  require_k(k, 2, "kappa_lambda_iter");
  const auto states = kappa_lambda_states(alpha, k);
  const auto& s = states.back();
  const BigRational denom = BigRational(1) - s.lambda;
  if (denom.is_zero()) throw Error(ErrorKind::inconsistency, "kappa_lambda_iter: lambda_k = 1");
  return s.kappa / denom;
}

BigRational v_iter_exact(const BigInt& alpha, int k) {
  require_k(k, 1, "v_iter_exact");
  if (alpha < 2) throw Error(ErrorKind::usage, "v_iter_exact: alpha must be at least 2");
  BigRational v(alpha);
  for (int n = 2; n <= k; ++n) {
    if (v.is_zero()) throw Error(ErrorKind::division_by_zero, "v_iter_exact: v reached 0");
    v = (v - v.reciprocal()) / BigRational(2);
  }
  return v;
}

BigRational theta_from_v(const BigRational& v) {
  if (v == BigRational(1)) throw Error(ErrorKind::domain, "theta_from_v: pole at v = 1");
  return (v + BigRational(1)) / (v - BigRational(1));
}

MachinFormula two_term_formula(int k) {
  require_k(k, 2, "two_term_formula");
  const BigInt gamma = gamma_k(k);
  const BigRational theta = theta_from_v(v_iter_exact(gamma, k));
  MachinFormula f;
  f.terms.push_back(make_term(pow2(static_cast<unsigned long>(k - 1)), BigRational(BigInt(1), gamma)));
  f.terms.push_back(make_term(1, theta.reciprocal()));
  f.provenance = {k, 0, GenerationPath::v_iteration};
  const ValidationReport report = validate(f);
  if (!report.valid) {
    throw Error(ErrorKind::validation, "two_term_formula(" + std::to_string(k) + "): " + report.failure);
  }
  f.validated = true;
  return f;
}

MachinFormula expand_template(int k, int M) {
  require_k(k, 2, "expand_template");
  if (M < 0) throw Error(ErrorKind::usage, "expand_template: M must be non-negative");
  const BigInt gamma = gamma_k(k);
  BigRational theta = theta_from_v(v_iter_exact(gamma, k));

  MachinFormula f;
  f.provenance = {k, M, GenerationPath::template_expansion};
  f.terms.push_back(make_term(pow2(static_cast<unsigned long>(k - 1)), BigRational(BigInt(1), gamma)));
  for (int m = 1; m <= M; ++m) {
    if (theta.is_integer()) {
      f.terms.push_back(make_term(1, theta.reciprocal()));
      f.exact = true;
      break;
    }
    if (theta >= BigRational(0) && theta < BigRational(1)) {
      throw Error(ErrorKind::domain, "expand_template: residual " + theta.to_string() + " lies in [0, 1)");
    }
    const BigInt fl = rat_floor(theta);
    f.terms.push_back(make_term(1, BigRational(fl).reciprocal()));
    theta = (BigRational(1) + BigRational(fl) * theta) / (BigRational(fl) - theta);
  }
  if (!f.exact) {
    f.terms.push_back(make_term(1, theta.reciprocal()));
    f.exact = theta.is_integer();
  }
  const ValidationReport report = validate(f);
  if (!report.valid) {
    throw Error(ErrorKind::validation, "expand_template(" + std::to_string(k) + ", " + std::to_string(M) +
                                           "): " + report.failure);
  }
  f.validated = true;
  return f;
}

ValidationReport validate(const MachinFormula& f) {
  if (f.terms.empty()) throw Error(ErrorKind::malformed, "formula has no terms");
  ValidationReport r;
  GaussianInt product{1, 0};
  BigInt norm = 1;
  std::size_t widest = 1;
  for (const auto& t : f.terms) {
    if (t.arg.is_zero()) throw Error(ErrorKind::malformed, "formula has a zero arctangent argument");
    const BigInt& p = t.arg.num();
    const BigInt& q = t.arg.den();
    if (t.coeff > 0) {
      product = product * gauss_pow({q, p}, t.coeff);
    } else if (t.coeff < 0) {
      const BigInt e = -t.coeff;
      if (!mpz_fits_ulong_p(e.get_mpz_t())) throw Error(ErrorKind::domain, "coefficient too large to validate");
      product = product * gauss_pow({q, BigInt(-p)}, e);
      BigInt qn;
      const BigInt base = q * q + p * p;
      mpz_pow_ui(qn.get_mpz_t(), base.get_mpz_t(), mpz_get_ui(e.get_mpz_t()));
      norm *= qn;
    }
    widest = std::max(widest, decimal_digits(t.coeff));
  }
  r.product_re = BigRational(product.re, norm);
  r.product_im = BigRational(product.im, norm);
  r.relation_holds = product.re == product.im && product.re > 0;

  const int digits = 50;
  const int work = digits + guard_digits() + static_cast<int>(widest);
  FixedReal sum(BigInt(0), work);
  for (const auto& t : f.terms) sum = sum + arctan_euler(t.arg, work).value * t.coeff;
  r.numeric_ok = fx_agree_digits(sum.rescaled(digits + 2), quarter_pi(work).rescaled(digits + 2)) >= digits;

  r.valid = r.relation_holds && r.numeric_ok;
  if (!r.relation_holds) {
    r.failure = "Gaussian product is not a positive multiple of 1+i";
  } else if (!r.numeric_ok) {
    r.failure = "sum differs from pi/4 within 50 digits";
  }
  return r;
}

bool validate_formula(const MachinFormula& f) { return validate(f).valid; }

LehmerMeasure lehmer_measure(const MachinFormula& f) {
  if (f.terms.empty()) throw Error(ErrorKind::malformed, "formula has no terms");
  const int work = 45;
  const FixedReal ln10 = fx_ln(FixedReal::from_integer(10), work);
  LehmerMeasure m{FixedReal(BigInt(0), work), true};
  for (const auto& t : f.terms) {
    if (t.arg.is_zero()) throw Error(ErrorKind::malformed, "formula has a zero arctangent argument");
    const BigRational b = t.arg.abs().reciprocal();
    if (b <= BigRational(1)) {
      throw Error(ErrorKind::domain, "Lehmer measure is singular: |1/x| = " + b.to_string() + " is not above 1");
    }
    if (!b.is_integer()) m.all_integer = false;
    const FixedReal ln_b =
        fx_ln(FixedReal::from_integer(b.num()), work) - fx_ln(FixedReal::from_integer(b.den()), work);
    const FixedReal log10_b = fx_div(ln_b, ln10, work);
    m.value = m.value + fx_div(FixedReal::from_integer(1, work), log10_b, work);
  }
  m.value = m.value.rescaled(30);
  return m;
}

FixedReal theta_trig(int k, int p) {
  require_k(k, 2, "theta_trig");
  if (p < 1) throw Error(ErrorKind::usage, "theta_trig: precision must be positive");
  const int work = p + guard_digits() + 10;
  const BigInt gamma = gamma_k(k);
  const BigInt mult = pow2(static_cast<unsigned long>(k - 1));
  const int phi_work = work + static_cast<int>(decimal_digits(mult));
  // arctan(2 gamma / (gamma^2 - 1)) = 2 arctan(1 / gamma) for gamma > 1.
  const BigRational x(BigInt(2 * gamma), BigInt(gamma * gamma - 1));
  const FixedReal big_phi = (arctan_euler(x, phi_work).value * mult).rescaled(work);
  const FixedReal pi = pi_reference(std::max(work, 16));
  const FixedReal half_pi(BigInt(pi.mantissa() / 2), pi.scale());
  const FixedReal cos_phi = fx_cos(big_phi, work);
  const FixedReal sin_phi = fx_cos((half_pi - big_phi).rescaled(work), work);
  const FixedReal denom = FixedReal::from_integer(1, work) - sin_phi;
  if (denom.abs() < FixedReal(BigInt(1), p)) {
    throw Error(ErrorKind::precision_exhausted, "theta_trig: 1 - sin(Phi) vanishes at this precision");
  }
  return fx_div(cos_phi, denom, work).rescaled(p);
}

std::string render_text(const MachinFormula& f) {
  std::ostringstream out;
  out << "π/4 =";
  bool first = true;
  for (const auto& t : f.terms) {
    const bool negative = t.coeff < 0;
    const BigInt mag = abs(t.coeff);
    if (first) {
      out << (negative ? " −" : " ");
    } else {
      out << (negative ? " − " : " + ");
    }
    if (mag != 1) out << mag.get_str() << "·";
    out << "atan(" << t.arg.to_string() << ")";
    first = false;
  }
  return out.str();
}

}  // namespace radpi
