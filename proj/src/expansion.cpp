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

#include "expansion.hpp"

#include <map>

namespace betaforge {

const char* status_name(ExpansionStatus s) {
  switch (s) {
    case ExpansionStatus::Finite:
      return "finite";
    case ExpansionStatus::Periodic:
      return "periodic";
    default:
      return "undetermined";
  }
}

IntPolynomial companion_poly(const WordPresentation& w) {
  long k = static_cast<long>(w.pre.size());
  long n = w.length();
  if (n == 0) throw Error(Errc::invalid_input, "companion of the empty word");
  auto p_of = [&](long j) {
    // P_j = x^j - a_1 x^{j-1} - ... - a_j
    std::vector<mpz_class> c(static_cast<size_t>(j) + 1, 0);
    c[static_cast<size_t>(j)] = 1;
    for (long i = 1; i <= j; ++i) {
      uint8_t d = (i <= k) ? w.pre[static_cast<size_t>(i - 1)]
                           : w.per[static_cast<size_t>(i - k - 1)];
      c[static_cast<size_t>(j - i)] = -static_cast<long>(d);
    }
    return IntPolynomial(std::move(c));
  };
  if (w.per.empty()) return p_of(k);
  return p_of(n) - p_of(k);
}

IntPolynomial companion_poly(const DigitWord& w) { return companion_poly(w.presentation()); }

CofactorResult cofactor(const WordPresentation& w, const IntPolynomial& minpoly) {
  IntPolynomial q = div_exact(companion_poly(w), minpoly);
  bool rec = !q.is_zero() && q.reciprocal() == q;
  return {std::move(q), rec};
}

RationalFunction pseudo_cofactor(const WordPresentation& w, const IntPolynomial& defining) {
  if (defining.is_zero()) throw Error(Errc::invalid_input, "pseudo_cofactor: zero defining");
  return RationalFunction(companion_poly(w), defining);
}

namespace {

using State = std::vector<mpz_class>;

// coefficients of x * r(x) reduced modulo the monic defining polynomial
State advance(const State& r, const IntPolynomial& m) {
  size_t d = r.size();
  State out(d);
  const mpz_class& top = r[d - 1];
  out[0] = -top * m.coeff(0);
  for (size_t i = 1; i < d; ++i) out[i] = r[i - 1] - top * m.coeff(static_cast<int>(i));
  return out;
}

bool all_zero(const State& r) {
  for (const auto& v : r)
    if (v != 0) return false;
  return true;
}

void attach_polynomials(ExpansionResult& res, const IntPolynomial& defining) {
  res.companion = companion_poly(res.word);
  if (auto q = div_exact_opt(*res.companion, defining)) {
    res.cofactor = *q;
    res.cofactor_reciprocal = !q->is_zero() && q->reciprocal() == *q;
  }
  res.pseudo_cofactor = RationalFunction(*res.companion, defining);
}

}  // namespace

ExpansionResult greedy_expand(const AlgebraicReal& base, long max_digits) {
  if (max_digits < 1) throw Error(Errc::invalid_input, "max_digits must be >= 1");
  const IntPolynomial& m = base.defining();
  if (!m.is_monic())
    throw Error(Errc::base_out_of_range, "expansion base must be an algebraic integer");
  AlgebraicReal work = base;
  if (sign_at_inplace(work, IntPolynomial{-1, 1}) <= 0 ||
      sign_at_inplace(work, IntPolynomial{-2, 1}) >= 0)
    throw Error(Errc::base_out_of_range, "expansion base must lie in (1,2)");

  size_t d = static_cast<size_t>(m.degree());
  State r(d, 0);
  r[0] = 1;
  std::map<State, long> seen;
  seen.emplace(r, 0);
  Digits digits;
  digits.reserve(static_cast<size_t>(max_digits));

  ExpansionResult res;
  for (long n = 1; n <= max_digits; ++n) {
    State s = advance(r, m);
    std::vector<mpz_class> ec(s);
    ec[0] -= 1;
    IntPolynomial e(std::move(ec));  // x*r(x) - 1 mod m
    int sg = sign_at_inplace(work, e);
    State next;
    if (sg >= 0) {
      digits.push_back(1);
      next = std::move(s);
      next[0] -= 1;
    } else {
      digits.push_back(0);
      next = std::move(s);
    }
    if (sg == 0 || all_zero(next)) {
      // remainder value is exactly zero: the expansion terminates here
      res.status = ExpansionStatus::Finite;
      res.digits_computed = n;
      res.word = DigitWord::finite(digits);
      attach_polynomials(res, m);
      return res;
    }
    auto it = seen.find(next);
    if (it != seen.end()) {
      long k = it->second, l = n - k;
      res.status = ExpansionStatus::Periodic;
      res.digits_computed = n;
      Digits pre(digits.begin(), digits.begin() + k);
      Digits per(digits.begin() + k, digits.begin() + k + l);
      res.word = DigitWord::periodic(std::move(pre), std::move(per));
      attach_polynomials(res, m);
      return res;
    }
    seen.emplace(next, n);
    r = std::move(next);
  }
  res.status = ExpansionStatus::Undetermined;
  res.digits_computed = max_digits;
  res.prefix = std::move(digits);
  return res;
}

ExpansionResult quasi_greedy_expand(const AlgebraicReal& base, long max_digits) {
  ExpansionResult res = greedy_expand(base, max_digits);
  if (res.status != ExpansionStatus::Finite) return res;
  res.word = quasi_greedy_of_finite(res.word);
  res.status = ExpansionStatus::Periodic;
  attach_polynomials(res, base.defining());
  return res;
}

}  // namespace betaforge
