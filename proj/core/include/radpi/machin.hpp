#pragma once

#include <string>
#include <vector>

#include "radpi/exact.hpp"
#include "radpi/fixed.hpp"

namespace radpi {

/// One A * arctan(x) term. Generated formulas keep x positive and carry the
/// sign in the coefficient.
struct FormulaTerm {
  BigInt coeff;
  BigRational arg;

  friend bool operator==(const FormulaTerm&, const FormulaTerm&) = default;
};

enum class GenerationPath { input, v_iteration, kappa_lambda, direct, template_expansion };

const char* to_string(GenerationPath path);

struct Provenance {
  int k = 0;
  int M = 0;
  GenerationPath path = GenerationPath::input;
};

/// pi/4 = sum of coeff * arctan(arg).
struct MachinFormula {
  std::vector<FormulaTerm> terms;
  Provenance provenance;
  bool validated = false;
  /// Template expansion met an integral residual and stopped early.
  bool exact = false;
};

/// 4 arctan(1/5) - arctan(1/239).
MachinFormula machin_formula();
/// 2 arctan(1/2) - arctan(1/7).
MachinFormula hermann_formula();

struct KappaLambdaState {
  BigRational kappa;
  BigRational lambda;
  int step = 0;
};

/// beta = 2 / ([(alpha + i)/(alpha - i)]^(2^(k-1)) - i) - i in exact complex
/// rationals. Only practical for small k (2..8).
BigRational beta_direct(const BigInt& alpha, int k);

/// The squaring recursion kappa_n + i lambda_n = (kappa_{n-1} + i lambda_{n-1})^2
/// starting from (alpha^2 - 1, 2 alpha) / (alpha^2 + 1); states 1..k.
std::vector<KappaLambdaState> kappa_lambda_states(const BigInt& alpha, int k);
/// kappa_k / (1 - lambda_k).
BigRational kappa_lambda_iter(const BigInt& alpha, int k);

/// v_1 = alpha, v_n = (v_{n-1} - 1/v_{n-1}) / 2; returns v_k.
BigRational v_iter_exact(const BigInt& alpha, int k);
/// (v + 1) / (v - 1).
BigRational theta_from_v(const BigRational& v);

/// pi/4 = 2^(k-1) arctan(1/gamma_k) + arctan(1/theta_{1,k}), validated.
MachinFormula two_term_formula(int k);

/// Peels M integer reciprocals off the residual arctangent of the two-term
/// formula; the last term carries the remaining exact quotient.
MachinFormula expand_template(int k, int M);

struct ValidationReport {
  bool valid = false;
  bool relation_holds = false;  ///< Re(P) == Im(P) > 0 for the Gaussian product P
  bool numeric_ok = false;      ///< sum matches pi/4 to 50 digits
  /// P = prod_j (q_j + p_j i)^A_j for x_j = p_j / q_j, exact.
  BigRational product_re;
  BigRational product_im;
  std::string failure;
};

ValidationReport validate(const MachinFormula& f);
bool validate_formula(const MachinFormula& f);

struct LehmerMeasure {
  FixedReal value;
  /// False when some |1/x_j| is not an integer, where the measure is only indicative.
  bool all_integer = true;
};

/// sum_j 1 / log10|1/x_j| to 30 digits.
LehmerMeasure lehmer_measure(const MachinFormula& f);

/// theta_{1,k} from its trigonometric form, at precision p.
FixedReal theta_trig(int k, int p);

/// "pi/4 = 8*atan(1/10) - atan(1/84) - ..."
std::string render_text(const MachinFormula& f);

}  // namespace radpi
