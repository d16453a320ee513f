#include "radpi/exact.hpp"

#include <string>

#include "radpi/error.hpp"

namespace radpi {

std::size_t decimal_digits(const BigInt& x) {
  if (sgn(x) == 0) return 1;
  BigInt a = abs(x);
  // mpz_sizeinbase may overshoot by one.
  std::size_t n = mpz_sizeinbase(a.get_mpz_t(), 10);
  if (n > 1 && a < pow10(n - 1)) --n;
  return n;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0) throw Error(ErrorKind::division_by_zero, "rational with zero denominator");
  normalize();
}

void BigRational::normalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

BigRational BigRational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::string str(s);
    std::size_t start = (!str.empty() && (str[0] == '-' || str[0] == '+')) ? 1 : 0;
    if (start == str.size()) throw Error(ErrorKind::malformed, "not a rational: '" + std::string(text) + "'");
    for (std::size_t i = start; i < str.size(); ++i) {
      if (str[i] < '0' || str[i] > '9') {
        throw Error(ErrorKind::malformed, "not a rational: '" + std::string(text) + "'");
      }
    }
    if (str[0] == '+') str.erase(0, 1);
    return BigInt(str, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (sgn(den) == 0) throw Error(ErrorKind::malformed, "zero denominator in '" + std::string(text) + "'");
  return BigRational(parse_int(text.substr(0, slash)), std::move(den));
}

BigRational BigRational::abs() const { return BigRational(BigInt(::abs(num_)), den_, Normalized{}); }

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw Error(ErrorKind::division_by_zero, "reciprocal of zero");
  return BigRational(den_, num_);
}

std::string BigRational::to_string() const {
  if (is_integer()) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::division_by_zero, "rational division by zero");
  BigInt n = num_ * rhs.den_;
  den_ *= rhs.num_;
  num_ = std::move(n);
  normalize();
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(BigInt(-num_), den_, Normalized{}); }

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  int c = cmp(BigInt(a.num_ * b.den_), BigInt(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt rat_floor(const BigRational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
  return r;
}

std::string GaussianInt::to_string() const {
  std::string s = re.get_str();
  if (sgn(im) < 0) {
    s += "-" + BigInt(-im).get_str() + "i";
  } else {
    s += "+" + im.get_str() + "i";
  }
  return s;
}

GaussianInt gauss_pow(GaussianInt z, const BigInt& e) {
  if (sgn(e) < 0) throw Error(ErrorKind::domain, "gauss_pow: negative exponent");
  GaussianInt result{1, 0};
  BigInt n = e;
  while (sgn(n) > 0) {
    if (mpz_odd_p(n.get_mpz_t())) result = result * z;
    n >>= 1;
    if (sgn(n) > 0) z = z * z;
  }
  return result;
}

}  // namespace radpi
