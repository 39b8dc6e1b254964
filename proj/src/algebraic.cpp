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

#include "algebraic.hpp"

#include <algorithm>
#include <cmath>

namespace betaforge {

std::vector<IntPolynomial> signed_remainder_sequence(const IntPolynomial& p,
                                                     const IntPolynomial& q) {
  std::vector<IntPolynomial> chain;
  chain.push_back(p);
  if (q.is_zero()) return chain;
  chain.push_back(q);
  while (!chain.back().is_zero()) {
    const IntPolynomial& prev = chain[chain.size() - 2];
    const IntPolynomial& cur = chain.back();
    IntPolynomial qq, r;
    pseudo_divmod(prev, cur, qq, r);
    if (r.is_zero()) break;
    // pseudo multiplier is lc(cur)^(d+1); keep the defining relation
    // c*prev = Q*cur - next with c > 0
    int d = prev.degree() - cur.degree() + 1;
    bool neg_mult = (cur.leading() < 0) && (d % 2 == 1);
    IntPolynomial next = neg_mult ? r : -r;
    chain.push_back(next.primitive_part());
  }
  return chain;
}

namespace {

int sign_with_zero_skip(std::vector<int>& signs) {
  int var = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

}  // namespace

int sign_variations_at(const std::vector<IntPolynomial>& chain, const mpz_class& num,
                       const mpz_class& den) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& s : chain) signs.push_back(s.sign_at_rational(num, den));
  return sign_with_zero_skip(signs);
}

int sign_variations_at_pos_inf(const std::vector<IntPolynomial>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& s : chain) signs.push_back(s.is_zero() ? 0 : sgn(s.leading()));
  return sign_with_zero_skip(signs);
}

int sign_variations_at_neg_inf(const std::vector<IntPolynomial>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& s : chain) {
    if (s.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int v = sgn(s.leading());
    if (s.degree() % 2 == 1) v = -v;
    signs.push_back(v);
  }
  return sign_with_zero_skip(signs);
}

long cauchy_index(const IntPolynomial& p, const IntPolynomial& q) {
  auto chain = signed_remainder_sequence(p, q);
  return sign_variations_at_neg_inf(chain) - sign_variations_at_pos_inf(chain);
}

long sturm_count(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi) {
  if (p.is_zero()) throw Error(Errc::invalid_input, "sturm_count of zero polynomial");
  if (lo >= hi) throw Error(Errc::invalid_input, "sturm_count: lo must be < hi");
  if (p.sign_at_rational(lo.get_num(), lo.get_den()) == 0 ||
      p.sign_at_rational(hi.get_num(), hi.get_den()) == 0)
    throw Error(Errc::endpoint_root, "polynomial vanishes at an interval endpoint");
  auto chain = signed_remainder_sequence(p, p.derivative());
  return sign_variations_at(chain, lo.get_num(), lo.get_den()) -
         sign_variations_at(chain, hi.get_num(), hi.get_den());
}

long sturm_count_above(const IntPolynomial& p, const mpq_class& a) {
  if (p.is_zero()) throw Error(Errc::invalid_input, "sturm_count of zero polynomial");
  if (p.sign_at_rational(a.get_num(), a.get_den()) == 0)
    throw Error(Errc::endpoint_root, "polynomial vanishes at the endpoint");
  auto chain = signed_remainder_sequence(p, p.derivative());
  return sign_variations_at(chain, a.get_num(), a.get_den()) - sign_variations_at_pos_inf(chain);
}

long sturm_count_below(const IntPolynomial& p, const mpq_class& a) {
  if (p.is_zero()) throw Error(Errc::invalid_input, "sturm_count of zero polynomial");
  if (p.sign_at_rational(a.get_num(), a.get_den()) == 0)
    throw Error(Errc::endpoint_root, "polynomial vanishes at the endpoint");
  auto chain = signed_remainder_sequence(p, p.derivative());
  return sign_variations_at_neg_inf(chain) - sign_variations_at(chain, a.get_num(), a.get_den());
}

// --- AlgebraicReal ----------------------------------------------------------

namespace {

bool is_dyadic(const mpq_class& q, mpz_class& num_out, long& t_out) {
  const mpz_class& den = q.get_den();
  if (den == 1) {
    num_out = q.get_num();
    t_out = 0;
    return true;
  }
  if (mpz_popcount(den.get_mpz_t()) != 1) return false;
  t_out = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
  num_out = q.get_num();
  return true;
}

mpz_class pow2(long t) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(t));
  return r;
}

mpq_class dyadic_to_mpq(const mpz_class& a, long t) {
  mpq_class q(a, pow2(t));
  q.canonicalize();
  return q;
}

// Exact range of e over [a,b]/2^t scaled by 2^(t*deg e): only the signs of
// the bounds matter.
void interval_eval_scaled(const IntPolynomial& e, const mpz_class& a, const mpz_class& b, long t,
                          mpz_class& lo, mpz_class& hi) {
  int d = e.degree();
  lo = e.coeff(d);
  hi = lo;
  mpz_class scale = 1, two_t = pow2(t);
  mpz_class p1, p2, p3, p4;
  for (int i = d - 1; i >= 0; --i) {
    p1 = lo * a;
    p2 = lo * b;
    p3 = hi * a;
    p4 = hi * b;
    lo = std::min(std::min(p1, p2), std::min(p3, p4));
    hi = std::max(std::max(p1, p2), std::max(p3, p4));
    scale *= two_t;
    mpz_class c = e.coeff(i) * scale;
    lo += c;
    hi += c;
  }
}

}  // namespace

AlgebraicReal::AlgebraicReal(IntPolynomial defining, const mpq_class& lo, const mpq_class& hi)
    : p_(std::move(defining)) {
  if (p_.is_zero() || p_.degree() < 1)
    throw Error(Errc::invalid_input, "defining polynomial must have positive degree");
  if (!p_.is_squarefree())
    throw Error(Errc::invalid_input, "defining polynomial must be squarefree");
  long n = sturm_count(p_, lo, hi);
  if (n != 1)
    throw Error(Errc::not_unique, "interval contains " + std::to_string(n) + " roots, need 1");

  mpz_class la, lb;
  long ta, tb;
  if (is_dyadic(lo, la, ta) && is_dyadic(hi, lb, tb)) {
    t_ = std::max(ta, tb);
    a_ = la << static_cast<unsigned long>(t_ - ta);
    b_ = lb << static_cast<unsigned long>(t_ - tb);
  } else {
    place_dyadic_inside(lo, hi);
  }
  sign_hi_ = p_.sign_at_rational(b_, pow2(t_));
}

void AlgebraicReal::place_dyadic_inside(const mpq_class& lo, const mpq_class& hi) {
  // One simple root in (lo, hi), so p has opposite signs at the endpoints;
  // narrow by rational bisection, then re-bracket on a dyadic grid.
  mpq_class clo = lo, chi = hi;
  int shi = p_.sign_at_rational(chi.get_num(), chi.get_den());
  while (chi - clo > mpq_class(1, 16)) {
    mpq_class mid = (clo + chi) / 2;
    int sm = p_.sign_at_rational(mid.get_num(), mid.get_den());
    if (sm == 0) {
      pin_to_rational_root(mid, lo, hi, chi - clo);
      return;
    }
    (sm == shi ? chi : clo) = mid;
  }
  for (long t = 6;; t += 4) {
    mpz_class two_t = pow2(t);
    mpq_class slo = clo * mpq_class(two_t), shi_q = chi * mpq_class(two_t);
    mpz_class g0, g1;
    mpz_fdiv_q(g0.get_mpz_t(), slo.get_num().get_mpz_t(), slo.get_den().get_mpz_t());
    g0 += 1;
    mpz_cdiv_q(g1.get_mpz_t(), shi_q.get_num().get_mpz_t(), shi_q.get_den().get_mpz_t());
    g1 -= 1;
    int prev_sign = 0;
    mpz_class prev;
    for (mpz_class g = g0; g <= g1; ++g) {
      int s = p_.sign_at_rational(g, two_t);
      if (s == 0) {
        pin_to_rational_root(dyadic_to_mpq(g, t), lo, hi, chi - clo);
        return;
      }
      if (prev_sign != 0 && s != prev_sign) {
        a_ = prev;
        b_ = g;
        t_ = t;
        return;
      }
      prev_sign = s;
      prev = g;
    }
  }
}

void AlgebraicReal::pin_to_rational_root(const mpq_class& root, const mpq_class& lo,
                                         const mpq_class& hi, const mpq_class& max_width) {
  // The root is exactly the rational `root`; bracket it between dyadic
  // neighbors strictly inside (lo, hi).
  for (long k = 4;; ++k) {
    mpz_class two_k = pow2(k);
    mpq_class v = root * mpq_class(two_k);
    mpz_class na, nb;
    long level = k;
    if (v.get_den() == 1) {
      na = 2 * v.get_num() - 1;
      nb = 2 * v.get_num() + 1;
      level = k + 1;
    } else {
      mpz_fdiv_q(na.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
      nb = na + 1;
    }
    mpq_class qlo = dyadic_to_mpq(na, level), qhi = dyadic_to_mpq(nb, level);
    if (qlo <= lo || qhi >= hi || qhi - qlo > max_width) continue;
    if (p_.sign_at_rational(na, pow2(level)) == 0 || p_.sign_at_rational(nb, pow2(level)) == 0)
      continue;
    a_ = na;
    b_ = nb;
    t_ = level;
    return;
  }
}

mpq_class AlgebraicReal::lo() const { return dyadic_to_mpq(a_, t_); }
mpq_class AlgebraicReal::hi() const { return dyadic_to_mpq(b_, t_); }

double AlgebraicReal::approx() const {
  mpq_class mid = (lo() + hi()) / 2;
  return mid.get_d();
}

void AlgebraicReal::bisect_once() {
  mpz_class mid = a_ + b_;  // value mid/2^(t+1)
  int s = p_.sign_at_rational(mid, pow2(t_ + 1));
  if (s == 0) {
    pin_to_rational_root(dyadic_to_mpq(mid, t_ + 1), lo(), hi(), width() / 2);
    sign_hi_ = p_.sign_at_rational(b_, pow2(t_));
    return;
  }
  ++t_;
  a_ <<= 1;
  b_ <<= 1;
  if (s == sign_hi_)
    b_ = mid;
  else
    a_ = mid;
}

void AlgebraicReal::shrink_to(const mpq_class& width) {
  while (this->width() > width) bisect_once();
}

AlgebraicReal isolate_root_in(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi) {
  return AlgebraicReal(p, lo, hi);
}

AlgebraicReal refine(AlgebraicReal a, const mpq_class& width) {
  if (width <= 0) throw Error(Errc::invalid_input, "refine: width must be positive");
  a.shrink_to(width);
  return a;
}

int sign_at_inplace(AlgebraicReal& x, const IntPolynomial& e) {
  if (e.is_zero()) return 0;
  if (e.degree() == 0) return sgn(e.leading());
  bool zero_checked = false;
  mpz_class lo, hi;
  for (;;) {
    interval_eval_scaled(e, x.a_, x.b_, x.t_, lo, hi);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (!zero_checked) {
      zero_checked = true;
      IntPolynomial g = poly_gcd(e, x.p_);
      if (g.degree() >= 1) {
        int sl = g.sign_at_rational(x.a_, pow2(x.t_));
        int sh = g.sign_at_rational(x.b_, pow2(x.t_));
        if (sl != sh) return 0;  // the number is a root of g, hence of e
      }
    }
    x.bisect_once();
    x.bisect_once();
  }
}

int sign_at(const AlgebraicReal& a, const IntPolynomial& e) {
  AlgebraicReal copy = a;
  return sign_at_inplace(copy, e);
}

}  // namespace betaforge
