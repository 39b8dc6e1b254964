/*
   Copyright 2026 The betaforge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BETAFORGE_POLY_HPP
#define BETAFORGE_POLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace betaforge {

enum class Errc {
  invalid_input,
  not_divisible,
  endpoint_root,
  not_unique,
  base_out_of_range,
  on_circle_or_degenerate,
  no_dominant_root,
  no_salem_root,
  not_greedy,
  m_out_of_range,
  pattern_mismatch,
  undetermined,
  unsupported_params,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Dense integer-coefficient polynomial. Coefficient i is the coefficient of
/// x^i; the representation is canonical (no trailing zero coefficients), so
/// the zero polynomial is the empty vector and degree() returns the
/// distinguished sentinel kZeroDegree for it.
class IntPolynomial {
 public:
  static constexpr int kZeroDegree = -1;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial({1}); }
  static IntPolynomial variable() { return IntPolynomial({0, 1}); }
  /// c * x^k
  static IntPolynomial monomial(long k, const mpz_class& c = 1);
  /// x^d - 1
  static IntPolynomial x_power_minus_one(long d);
  /// 1 + x^step + x^(2*step) + ... + x^(count*step)
  static IntPolynomial geometric_sum(long step, long count);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& coeff(int i) const;
  const mpz_class& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator*(const mpz_class& s) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

  /// this * x^k
  IntPolynomial shifted(long k) const;
  IntPolynomial derivative() const;

  /// x^deg * p(1/x): the coefficient sequence reversed. Rejects the zero
  /// polynomial.
  IntPolynomial reciprocal() const;
  /// Reversal treating p as a polynomial of the given (possibly larger)
  /// degree, e.g. S(x) viewed as degree l-1 when computing S*.
  IntPolynomial reciprocal_as_degree(int deg) const;

  mpz_class eval(const mpz_class& x) const;
  /// p(num/den) * den^deg(p), an integer; den must be nonzero.
  mpz_class eval_scaled(const mpz_class& num, const mpz_class& den) const;
  /// Exact sign of p(num/den).
  int sign_at_rational(const mpz_class& num, const mpz_class& den) const;

  /// gcd of all coefficients, nonnegative (0 for the zero polynomial).
  mpz_class content() const;
  /// p / content(p), leading coefficient keeps its sign; zero stays zero.
  IntPolynomial primitive_part() const;
  bool is_squarefree() const;

 private:
  std::vector<mpz_class> c_;
  void normalize();
};

/// Quotient when b divides a exactly over Z, std::nullopt otherwise.
std::optional<IntPolynomial> div_exact_opt(const IntPolynomial& a, const IntPolynomial& b);
/// As div_exact_opt but throws Errc::not_divisible.
IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b);

/// lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
void pseudo_divmod(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& q,
                   IntPolynomial& r);

/// Primitive gcd with positive leading coefficient. Requires not both zero.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

long euler_phi(long d);
IntPolynomial cyclotomic(long d);

struct CyclotomicFactor {
  long d;
  int multiplicity;
  bool operator==(const CyclotomicFactor&) const = default;
};

struct StripResult {
  IntPolynomial core;
  std::vector<CyclotomicFactor> factors;
};

/// Divides out every cyclotomic factor (with multiplicity). The search covers
/// all d with phi(d) <= deg p, i.e. d <= 2*deg(p)^2 since phi(d) >= sqrt(d/2).
StripResult strip_cyclotomic(const IntPolynomial& p);

IntPolynomial parse_poly(std::string_view text);
std::string format_poly(const IntPolynomial& p);

/// num/den in canonical form: den nonzero with positive leading coefficient,
/// no common polynomial factor, and coprime integer contents.
class RationalFunction {
 public:
  RationalFunction() : num_(IntPolynomial::zero()), den_(IntPolynomial::one()) {}
  RationalFunction(IntPolynomial num, IntPolynomial den);
  explicit RationalFunction(IntPolynomial num) : num_(std::move(num)), den_(IntPolynomial::one()) {}

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_polynomial() const { return den_ == IntPolynomial::one(); }
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

 private:
  IntPolynomial num_, den_;
};

std::string format_rational_function(const RationalFunction& f);

}  // namespace betaforge

#endif
