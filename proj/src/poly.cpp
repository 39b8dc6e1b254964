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

#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace betaforge {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(long k, const mpz_class& c) {
  if (c == 0) return zero();
  if (k < 0) throw Error(Errc::invalid_input, "monomial: negative exponent");
  std::vector<mpz_class> v(static_cast<size_t>(k) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_power_minus_one(long d) {
  IntPolynomial p = monomial(d);
  p -= one();
  return p;
}

IntPolynomial IntPolynomial::geometric_sum(long step, long count) {
  if (step <= 0 || count < 0) throw Error(Errc::invalid_input, "geometric_sum: bad parameters");
  std::vector<mpz_class> v(static_cast<size_t>(step) * count + 1, 0);
  for (long i = 0; i <= count; ++i) v[static_cast<size_t>(i) * step] = 1;
  return IntPolynomial(std::move(v));
}

const mpz_class& IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const mpz_class& IntPolynomial::leading() const {
  if (is_zero()) throw Error(Errc::invalid_input, "leading coefficient of zero polynomial");
  return c_.back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial::zero();
  std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const mpz_class& s) const {
  if (s == 0) return zero();
  IntPolynomial r(*this);
  for (auto& v : r.c_) v *= s;
  return r;
}

IntPolynomial IntPolynomial::shifted(long k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) throw Error(Errc::invalid_input, "shifted: negative exponent");
  std::vector<mpz_class> v(static_cast<size_t>(k), 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return zero();
  std::vector<mpz_class> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reciprocal() const {
  if (is_zero()) throw Error(Errc::invalid_input, "reciprocal of zero polynomial");
  std::vector<mpz_class> v(c_.rbegin(), c_.rend());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reciprocal_as_degree(int deg) const {
  if (is_zero()) return zero();
  if (deg < degree()) throw Error(Errc::invalid_input, "reciprocal_as_degree: degree too small");
  std::vector<mpz_class> v(static_cast<size_t>(deg) + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) v[static_cast<size_t>(deg) - i] = c_[i];
  return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class IntPolynomial::eval_scaled(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw Error(Errc::invalid_input, "eval_scaled: zero denominator");
  if (is_zero()) return 0;
  mpz_class acc = c_.back(), dp = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    dp *= den;
    acc = acc * num + c_[static_cast<size_t>(i)] * dp;
  }
  return acc;
}

int IntPolynomial::sign_at_rational(const mpz_class& num, const mpz_class& den) const {
  mpz_class v = eval_scaled(num, den);
  int s = sgn(v);
  // den^deg flips the sign when den < 0 and deg odd
  if (den < 0 && (degree() & 1)) s = -s;
  return s;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return zero();
  mpz_class g = content();
  if (g == 1) return *this;
  IntPolynomial r(*this);
  for (auto& v : r.c_) v /= g;
  return r;
}

bool IntPolynomial::is_squarefree() const {
  if (is_zero()) return false;
  if (degree() == 0) return true;
  return poly_gcd(*this, derivative()).degree() == 0;
}

std::optional<IntPolynomial> div_exact_opt(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(Errc::invalid_input, "division by zero polynomial");
  if (a.is_zero()) return IntPolynomial::zero();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> rem(a.coeffs());
  std::vector<mpz_class> q(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
  const auto& bl = b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    mpz_class& top = rem[static_cast<size_t>(i)];
    if (top == 0) continue;
    mpz_class t, r;
    mpz_tdiv_qr(t.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), bl.get_mpz_t());
    if (r != 0) return std::nullopt;
    q[static_cast<size_t>(i - b.degree())] = t;
    for (int k = 0; k <= b.degree(); ++k)
      rem[static_cast<size_t>(i - b.degree() + k)] -= t * b.coeff(k);
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b) {
  auto q = div_exact_opt(a, b);
  if (!q)
    throw Error(Errc::not_divisible,
                "(" + format_poly(a) + ") is not divisible by (" + format_poly(b) + ")");
  return *q;
}

void pseudo_divmod(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& q,
                   IntPolynomial& r) {
  if (b.is_zero()) throw Error(Errc::invalid_input, "pseudo_divmod by zero");
  int da = a.degree(), db = b.degree();
  if (da < db) {
    q = IntPolynomial::zero();
    r = a;
    return;
  }
  std::vector<mpz_class> rem(a.coeffs());
  std::vector<mpz_class> qc(static_cast<size_t>(da - db) + 1, 0);
  const mpz_class& bl = b.leading();
  for (int i = da; i >= db; --i) {
    mpz_class t = rem[static_cast<size_t>(i)];
    for (int k = 0; k <= i; ++k) rem[static_cast<size_t>(k)] *= bl;
    for (auto& v : qc) v *= bl;
    qc[static_cast<size_t>(i - db)] += t;
    for (int k = 0; k <= db; ++k) rem[static_cast<size_t>(i - db + k)] -= t * b.coeff(k);
  }
  q = IntPolynomial(std::move(qc));
  rem.resize(static_cast<size_t>(db));
  r = IntPolynomial(std::move(rem));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero())
    throw Error(Errc::invalid_input, "gcd of two zero polynomials");
  IntPolynomial u = a.primitive_part(), v = b.primitive_part();
  if (u.is_zero()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial q, r;
    pseudo_divmod(u, v, q, r);
    u = std::move(v);
    v = r.primitive_part();
  }
  if (!u.is_zero() && u.leading() < 0) u = -u;
  return u;
}

long euler_phi(long d) {
  long result = d, n = d;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long> prime_factors(long d) {
  std::vector<long> ps;
  for (long p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      ps.push_back(p);
      while (d % p == 0) d /= p;
    }
  }
  if (d > 1) ps.push_back(d);
  return ps;
}

IntPolynomial cyclotomic_uncached(long d) {
  // Moebius product: Phi_d = prod_{e | d squarefree} (x^(d/e) - 1)^{mu(e)}
  auto ps = prime_factors(d);
  IntPolynomial num = IntPolynomial::one(), den = IntPolynomial::one();
  size_t subsets = 1u << ps.size();
  for (size_t mask = 0; mask < subsets; ++mask) {
    long e = 1;
    int bits = 0;
    for (size_t i = 0; i < ps.size(); ++i)
      if (mask & (1u << i)) {
        e *= ps[i];
        ++bits;
      }
    IntPolynomial t = IntPolynomial::x_power_minus_one(d / e);
    if (bits % 2 == 0)
      num = num * t;
    else
      den = den * t;
  }
  return div_exact(num, den);
}

// mod (x^d - 1) by folding coefficients
IntPolynomial fold_mod(const IntPolynomial& p, long d) {
  std::vector<mpz_class> v(static_cast<size_t>(d), 0);
  for (int i = 0; i <= p.degree(); ++i) v[static_cast<size_t>(i % d)] += p.coeff(i);
  return IntPolynomial(std::move(v));
}

}  // namespace

IntPolynomial cyclotomic(long d) {
  if (d < 1) throw Error(Errc::invalid_input, "cyclotomic index must be >= 1");
  static std::map<long, IntPolynomial> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  IntPolynomial p = cyclotomic_uncached(d);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(d, std::move(p)).first->second;
}

StripResult strip_cyclotomic(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(Errc::invalid_input, "strip_cyclotomic of zero polynomial");
  StripResult res;
  res.core = p;
  long bound = 2L * p.degree() * p.degree();
  for (long d = 1; d <= bound; ++d) {
    if (res.core.degree() < 1) break;
    if (euler_phi(d) > res.core.degree()) continue;
    // Phi_d | core iff Phi_d | (core mod (x^d - 1)); the fold is cheap and
    // rejects nearly every d before a full trial division
    IntPolynomial folded = fold_mod(res.core, d);
    const IntPolynomial& phi = cyclotomic(d);
    if (!folded.is_zero() && !div_exact_opt(folded, phi)) continue;
    int mult = 0;
    while (auto q = div_exact_opt(res.core, phi)) {
      res.core = std::move(*q);
      ++mult;
    }
    if (mult > 0) res.factors.push_back({d, mult});
  }
  return res;
}

// --- text syntax ------------------------------------------------------------

namespace {

struct Scanner {
  std::string_view s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    skip_ws();
    return s[i++];
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) throw Error(Errc::invalid_input, "expected integer in polynomial text");
    return mpz_class(std::string(s.substr(start, i - start)));
  }
  long uinteger() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw Error(Errc::invalid_input, "expected exponent in polynomial text");
    return std::stol(std::string(s.substr(start, i - start)));
  }
};

IntPolynomial parse_bracket_list(Scanner& sc) {
  sc.get();  // consume '['
  std::vector<mpz_class> v;
  if (!sc.accept(']')) {
    v.push_back(sc.integer());
    while (sc.accept(',')) v.push_back(sc.integer());
    if (!sc.accept(']')) throw Error(Errc::invalid_input, "unterminated coefficient list");
  }
  return IntPolynomial(std::move(v));
}

}  // namespace

IntPolynomial parse_poly(std::string_view text) {
  Scanner sc{text};
  if (sc.eof()) throw Error(Errc::invalid_input, "empty polynomial text");
  if (sc.peek() == '[') {
    IntPolynomial p = parse_bracket_list(sc);
    if (!sc.eof()) throw Error(Errc::invalid_input, "trailing characters after coefficient list");
    return p;
  }
  IntPolynomial acc = IntPolynomial::zero();
  bool first = true;
  while (!sc.eof()) {
    int sign = 1;
    char c = sc.peek();
    if (c == '+' || c == '-') {
      sc.get();
      sign = (c == '-') ? -1 : 1;
    } else if (!first) {
      throw Error(Errc::invalid_input, "expected '+' or '-' between terms");
    }
    first = false;
    mpz_class coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coef = sc.integer();
      have_coef = true;
      sc.accept('*');
    }
    long exp = 0;
    if (sc.peek() == 'x' || sc.peek() == 'X') {
      sc.get();
      exp = 1;
      if (sc.accept('^')) exp = sc.uinteger();
    } else if (!have_coef) {
      throw Error(Errc::invalid_input, "expected coefficient or 'x' in polynomial term");
    }
    acc += IntPolynomial::monomial(exp, coef * sign);
  }
  return acc;
}

std::string format_poly(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const mpz_class& c = p.coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? '-' : '+');
    }
    mpz_class a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) {
      os << 'x';
      if (i >= 2) os << '^' << i;
    }
  }
  return os.str();
}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::invalid_input, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPolynomial::one();
    return;
  }
  IntPolynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
  mpz_class cn = num_.content(), cd = den_.content(), g2;
  mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (g2 > 1) {
    std::vector<mpz_class> vn(num_.coeffs()), vd(den_.coeffs());
    for (auto& x : vn) x /= g2;
    for (auto& x : vd) x /= g2;
    num_ = IntPolynomial(std::move(vn));
    den_ = IntPolynomial(std::move(vd));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::string format_rational_function(const RationalFunction& f) {
  if (f.is_polynomial()) return format_poly(f.num());
  return "(" + format_poly(f.num()) + ")/(" + format_poly(f.den()) + ")";
}

}  // namespace betaforge
