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

#include "classifier.hpp"

namespace betaforge {

const char* kind_name(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::Pisot:
      return "Pisot";
    case Classification::Kind::Salem:
      return "Salem";
    default:
      return "Neither";
  }
}

namespace {

// Real/imaginary parts of p(z(t)) * (1+t^2)^deg(p) along the unit circle,
// z(t) = ((1 - t^2) + 2it) / (1 + t^2).
void circle_curve(const IntPolynomial& p, IntPolynomial& re_out, IntPolynomial& im_out) {
  int n = p.degree();
  IntPolynomial zre{1, 0, -1}, zim{0, 2}, w{1, 0, 1};
  std::vector<IntPolynomial> wpow(static_cast<size_t>(n) + 1);
  wpow[0] = IntPolynomial::one();
  for (int j = 1; j <= n; ++j) wpow[static_cast<size_t>(j)] = wpow[static_cast<size_t>(j - 1)] * w;
  IntPolynomial re = IntPolynomial::monomial(0, p.coeff(n)), im;
  for (int k = n - 1; k >= 0; --k) {
    IntPolynomial nre =
        re * zre - im * zim + wpow[static_cast<size_t>(n - k)] * p.coeff(k);
    im = re * zim + im * zre;
    re = std::move(nre);
  }
  re_out = std::move(re);
  im_out = std::move(im);
}

mpq_class root_bound(const IntPolynomial& p) {
  // Cauchy bound: all roots have |z| < 1 + max|c_i| / |lc|
  mpz_class m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, mpz_class(abs(p.coeff(i))));
  mpq_class b(m, abs(p.leading()));
  return b + 2;
}

AlgebraicReal isolate_largest_real_root_above(const IntPolynomial& p, mpq_class lo) {
  mpq_class hi = root_bound(p);
  long count = sturm_count(p, lo, hi);
  while (count > 1) {
    mpq_class mid = (lo + hi) / 2;
    // nudge off a root if we are unlucky enough to hit one
    while (p.sign_at_rational(mid.get_num(), mid.get_den()) == 0) mid += (hi - lo) / 1024;
    long upper = sturm_count(p, mid, hi);
    if (upper >= 1) {
      lo = mid;
      count = upper;
    } else {
      hi = mid;
      count = sturm_count(p, lo, hi);
    }
  }
  return isolate_root_in(p, lo, hi);
}

void validate_classifier_input(const IntPolynomial& p, bool require_monic) {
  if (p.is_zero() || p.degree() < 1)
    throw Error(Errc::invalid_input, "classifier needs a nonconstant polynomial");
  if (require_monic && !p.is_monic())
    throw Error(Errc::invalid_input, "classifier needs a monic polynomial");
  if (p.coeff(0) == 0)
    throw Error(Errc::invalid_input, "classifier needs a nonzero constant term");
  if (!p.is_squarefree()) throw Error(Errc::invalid_input, "classifier needs a squarefree polynomial");
}

}  // namespace

IntPolynomial halve_self_reciprocal(const IntPolynomial& p) {
  if (p.is_zero() || p.degree() % 2 != 0)
    throw Error(Errc::invalid_input, "halve_self_reciprocal needs even degree");
  if (p.reciprocal() != p)
    throw Error(Errc::invalid_input, "halve_self_reciprocal needs a self-reciprocal polynomial");
  int n = p.degree() / 2;
  std::vector<IntPolynomial> x2p1(static_cast<size_t>(n) + 1);  // (x^2+1)^k
  x2p1[0] = IntPolynomial::one();
  for (int k = 1; k <= n; ++k)
    x2p1[static_cast<size_t>(k)] = x2p1[static_cast<size_t>(k - 1)] * IntPolynomial{1, 0, 1};
  IntPolynomial rem = p;
  std::vector<mpz_class> g(static_cast<size_t>(n) + 1);
  for (int k = n; k >= 0; --k) {
    g[static_cast<size_t>(k)] = rem.coeff(n + k);
    rem -= x2p1[static_cast<size_t>(k)].shifted(n - k) * g[static_cast<size_t>(k)];
  }
  if (!rem.is_zero())
    throw Error(Errc::invalid_input, "halve_self_reciprocal: reduction did not terminate");
  return IntPolynomial(std::move(g));
}

long count_roots_on_unit_circle(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(Errc::invalid_input, "zero polynomial");
  if (p.degree() == 0) return 0;
  if (p.coeff(0) == 0) throw Error(Errc::invalid_input, "nonzero constant term required");
  IntPolynomial sf = p;
  {
    IntPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree() > 0) sf = div_exact(p, g) ;
  }
  long c = 0;
  if (sf.eval(1) == 0) ++c;
  if (sf.eval(-1) == 0) ++c;
  IntPolynomial g = poly_gcd(sf, sf.reciprocal());
  while (g.degree() > 0 && g.eval(1) == 0) g = div_exact(g, IntPolynomial{-1, 1});
  while (g.degree() > 0 && g.eval(-1) == 0) g = div_exact(g, IntPolynomial{1, 1});
  if (g.degree() == 0) return c;
  IntPolynomial h = halve_self_reciprocal(g);
  c += 2 * sturm_count(h, -2, 2);
  return c;
}

long count_roots_in_unit_disk(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(Errc::invalid_input, "zero polynomial");
  if (p.coeff(0) == 0) throw Error(Errc::invalid_input, "nonzero constant term required");
  if (p.degree() == 0) return 0;
  if (count_roots_on_unit_circle(p) > 0)
    throw Error(Errc::on_circle_or_degenerate, "roots on the unit circle: disk count inapplicable");
  IntPolynomial a, b;
  circle_curve(p, a, b);
  long ind = cauchy_index(a, -b);
  if (ind < 0 || ind % 2 != 0)
    throw Error(Errc::on_circle_or_degenerate, "winding computation degenerated");
  return ind / 2;
}

bool is_pisot(const IntPolynomial& p, Classification* out) {
  validate_classifier_input(p, true);
  Classification c;
  c.evidence.degree = p.degree();
  c.evidence.reciprocal = (p.reciprocal() == p);
  bool ok = false;
  if (p.eval(1) == 0) {
    c.evidence.roots_on_circle = count_roots_on_unit_circle(p);
    c.evidence.note = "root at x=1";
  } else {
    c.evidence.real_roots_gt1 = sturm_count_above(p, 1);
    c.evidence.roots_on_circle = count_roots_on_unit_circle(p);
    if (c.evidence.roots_on_circle == 0) {
      c.evidence.roots_inside = count_roots_in_unit_disk(p);
      c.evidence.roots_outside = p.degree() - c.evidence.roots_inside;
      ok = c.evidence.real_roots_gt1 == 1 && c.evidence.roots_inside == p.degree() - 1;
    } else {
      c.evidence.note = "conjugates on the unit circle";
    }
  }
  if (ok) {
    c.kind = Classification::Kind::Pisot;
    c.dominant_root = isolate_largest_real_root_above(p, 1);
  }
  if (out) *out = std::move(c);
  return ok;
}

bool is_salem(const IntPolynomial& p, Classification* out) {
  validate_classifier_input(p, true);
  Classification c;
  c.evidence.degree = p.degree();
  c.evidence.reciprocal = (p.reciprocal() == p);
  bool ok = false;
  if (!c.evidence.reciprocal) {
    c.evidence.note = "not self-reciprocal";
  } else if (p.degree() % 2 != 0 || p.degree() < 4) {
    c.evidence.note = "degree not an even number >= 4";
  } else if (p.eval(1) == 0 || p.eval(-1) == 0) {
    c.evidence.note = "root at x=+-1";
  } else {
    int n = p.degree() / 2;
    IntPolynomial h = halve_self_reciprocal(p);
    long above = sturm_count_above(h, 2);
    long below = sturm_count_below(h, -2);
    long middle = sturm_count(h, -2, 2);
    ok = (above == 1 && below == 0 && middle == n - 1);
    if (ok) {
      c.kind = Classification::Kind::Salem;
      c.evidence.roots_on_circle = 2 * (n - 1);
      c.evidence.roots_inside = 1;   // 1/alpha
      c.evidence.roots_outside = 1;  // alpha
      c.evidence.real_roots_gt1 = 1;
      c.evidence.irreducibility_assumed = true;
      c.dominant_root = isolate_largest_real_root_above(p, 1);
    } else {
      c.evidence.note = "transformed root counts do not match a Salem configuration";
    }
  }
  if (out) *out = std::move(c);
  return ok;
}

Classification classify(const IntPolynomial& p) {
  validate_classifier_input(p, true);
  long real_gt1 = (p.eval(1) == 0) ? sturm_count_above(div_exact(p, IntPolynomial{-1, 1}), 1)
                                   : sturm_count_above(p, 1);
  if (real_gt1 == 0) throw Error(Errc::no_dominant_root, "no real root > 1");
  if (p.degree() == 1) {
    // x - n with n >= 2: vacuously Pisot
    Classification c;
    c.kind = Classification::Kind::Pisot;
    c.evidence.degree = 1;
    c.evidence.roots_inside = 0;
    c.evidence.roots_outside = 1;
    c.evidence.real_roots_gt1 = 1;
    c.dominant_root = isolate_largest_real_root_above(p, 1);
    return c;
  }
  Classification c;
  if (is_pisot(p, &c)) return c;
  Classification cs;
  if (is_salem(p, &cs)) return cs;
  // Neither: keep the more informative evidence of the two probes
  Classification out = std::move(c);
  out.kind = Classification::Kind::Neither;
  out.evidence.reciprocal = cs.evidence.reciprocal;
  if (p.eval(1) != 0) out.dominant_root = isolate_largest_real_root_above(p, 1);
  return out;
}

}  // namespace betaforge
