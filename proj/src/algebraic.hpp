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

#ifndef BETAFORGE_ALGEBRAIC_HPP
#define BETAFORGE_ALGEBRAIC_HPP

#include "poly.hpp"

namespace betaforge {

// Generalized signed remainder sequence: s0 = p, s1 = q, and c*s_{i-1} =
// Q*s_i - s_{i+1} with c > 0 (pseudo-remainders, primitive-normalized). The
// Cauchy index of q/p over (a,b) is V(a) - V(b), which specializes to Sturm
// root counting when q = p'.
std::vector<IntPolynomial> signed_remainder_sequence(const IntPolynomial& p,
                                                     const IntPolynomial& q);

int sign_variations_at(const std::vector<IntPolynomial>& chain, const mpz_class& num,
                       const mpz_class& den);
int sign_variations_at_pos_inf(const std::vector<IntPolynomial>& chain);
int sign_variations_at_neg_inf(const std::vector<IntPolynomial>& chain);

/// Cauchy index of q/p over the whole real line.
long cauchy_index(const IntPolynomial& p, const IntPolynomial& q);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Throws Errc::endpoint_root if p vanishes at lo or hi.
long sturm_count(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi);
/// Roots in (a, +inf); throws Errc::endpoint_root if p(a) = 0.
long sturm_count_above(const IntPolynomial& p, const mpq_class& a);
/// Roots in (-inf, a); throws Errc::endpoint_root if p(a) = 0.
long sturm_count_below(const IntPolynomial& p, const mpq_class& a);

/// A real algebraic number: a squarefree defining polynomial together with an
/// isolating interval certified to contain exactly one of its real roots.
/// Endpoints are dyadic (lo = a/2^t, hi = b/2^t); bisection never leaves the
/// dyadic lattice. Values are immutable; refine returns a new value.
class AlgebraicReal {
 public:
  AlgebraicReal(IntPolynomial defining, const mpq_class& lo, const mpq_class& hi);

  const IntPolynomial& defining() const { return p_; }
  mpq_class lo() const;
  mpq_class hi() const;
  mpq_class width() const { return hi() - lo(); }
  double approx() const;

  friend AlgebraicReal refine(AlgebraicReal a, const mpq_class& width);
  friend int sign_at_inplace(AlgebraicReal& a, const IntPolynomial& e);

 private:
  IntPolynomial p_;
  mpz_class a_, b_;  // lo = a/2^t, hi = b/2^t
  long t_ = 0;
  int sign_hi_ = 0;  // sign of p_ at hi; sign at lo is the opposite

  void bisect_once();
  void place_dyadic_inside(const mpq_class& lo, const mpq_class& hi);
  void pin_to_rational_root(const mpq_class& root, const mpq_class& lo, const mpq_class& hi,
                            const mpq_class& max_width);
  void shrink_to(const mpq_class& width);
};

/// Isolates the unique root of p in (lo, hi); Errc::not_unique if the Sturm
/// count differs from 1.
AlgebraicReal isolate_root_in(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi);

/// New value with interval width <= width (no-op if already narrower).
AlgebraicReal refine(AlgebraicReal a, const mpq_class& width);

/// Exact sign of e at the number: 0 iff e vanishes there (decided via
/// gcd with the defining polynomial), otherwise the interval is refined until
/// interval evaluation excludes zero. Refinement persists in `a`.
int sign_at_inplace(AlgebraicReal& a, const IntPolynomial& e);
/// Pure variant of sign_at_inplace.
int sign_at(const AlgebraicReal& a, const IntPolynomial& e);

}  // namespace betaforge

#endif
