#include "doctest.h"
#include "poly.hpp"

#include <random>

using namespace betaforge;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_deg, int max_abs_coeff) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<int> coeff_dist(-max_abs_coeff, max_abs_coeff);
  int d = deg_dist(rng);
  std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
  for (auto& v : c) v = coeff_dist(rng);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
  IntPolynomial xm1{-1, 1}, xp1{1, 1};
  CHECK(xm1 * xp1 == IntPolynomial{-1, 0, 1});

  IntPolynomial p{3, 0, -2, 5};
  CHECK(p + IntPolynomial::zero() == p);
  CHECK(p * IntPolynomial::one() == p);

  IntPolynomial golden{-1, -1, 1};  // x^2-x-1
  CHECK(golden * IntPolynomial::one() == golden);
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 3);
  CHECK(IntPolynomial::zero().degree() == IntPolynomial::kZeroDegree);
  CHECK(IntPolynomial{0}.degree() == IntPolynomial::kZeroDegree);
}

TEST_CASE("reciprocal") {
  IntPolynomial golden{-1, -1, 1};
  CHECK(golden.reciprocal() == IntPolynomial{1, -1, -1});  // -x^2-x+1
  IntPolynomial chi{1, 0, -2, -1, 1};
  CHECK(chi.reciprocal() == IntPolynomial{1, -1, -2, 0, 1});  // x^4-2x^2-x+1
  IntPolynomial selfrec{1, -3, 1};
  CHECK(selfrec.reciprocal() == selfrec);
  CHECK_THROWS_AS((void)IntPolynomial::zero().reciprocal(), Error);

  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    IntPolynomial p = random_poly(rng, 8, 9);
    if (p.is_zero() || p.coeff(0) == 0) continue;
    CHECK(p.reciprocal().reciprocal() == p);
  }
}

TEST_CASE("div_exact") {
  IntPolynomial x2m1{-1, 0, 1}, xm1{-1, 1};
  CHECK(div_exact(x2m1, xm1) == IntPolynomial{1, 1});
  IntPolynomial chi{1, 0, -2, -1, 1};
  CHECK(div_exact(chi, chi) == IntPolynomial::one());
  IntPolynomial golden{-1, -1, 1};
  CHECK(!div_exact_opt(golden, xm1));
  CHECK_THROWS_AS((void)div_exact(golden, xm1), Error);

  std::mt19937 rng(777);
  for (int i = 0; i < 300; ++i) {
    IntPolynomial a = random_poly(rng, 7, 6), b = random_poly(rng, 5, 6);
    if (b.is_zero()) continue;
    auto q = div_exact_opt(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
}

TEST_CASE("gcd") {
  IntPolynomial x2m1{-1, 0, 1}, xm1{-1, 1};
  CHECK(poly_gcd(x2m1, xm1) == xm1);
  IntPolynomial p{2, -4, 6};
  CHECK(poly_gcd(p, IntPolynomial::zero()) == IntPolynomial{1, -2, 3});
  // Euclid by hand: (x^2-x-1) - (x^2-2) = -x+1; x^2-2 at x=1 is -1, so gcd = 1
  CHECK(poly_gcd(IntPolynomial{-1, -1, 1}, IntPolynomial{-2, 0, 1}) == IntPolynomial::one());

  std::mt19937 rng(4242);
  for (int i = 0; i < 200; ++i) {
    IntPolynomial a = random_poly(rng, 6, 5), b = random_poly(rng, 6, 5);
    if (a.is_zero() && b.is_zero()) continue;
    IntPolynomial g = poly_gcd(a, b);
    REQUIRE(!g.is_zero());
    CHECK(g.leading() > 0);
    if (!a.is_zero()) CHECK(div_exact_opt(a, g).has_value());
    if (!b.is_zero()) CHECK(div_exact_opt(b, g).has_value());
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic(2) == IntPolynomial{1, 1});
  // independent oracle: (x^6-1) / ((x-1)(x+1)(x^2+x+1))
  IntPolynomial oracle =
      div_exact(IntPolynomial::x_power_minus_one(6),
                IntPolynomial{-1, 1} * IntPolynomial{1, 1} * IntPolynomial{1, 1, 1});
  CHECK(cyclotomic(6) == oracle);
  CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
  // spot degrees: deg Phi_d = phi(d)
  for (long d : {3L, 4L, 5L, 8L, 12L, 105L}) CHECK(cyclotomic(d).degree() == euler_phi(d));
  CHECK(cyclotomic(105).coeff(7) == -2);  // first index with a coefficient beyond +-1
}

TEST_CASE("strip_cyclotomic") {
  IntPolynomial golden{-1, -1, 1};
  SUBCASE("constructed input") {
    IntPolynomial p = IntPolynomial{-1, 1} * golden;
    StripResult out = strip_cyclotomic(p);
    CHECK(out.core == golden);
    REQUIRE(out.factors.size() == 1);
    CHECK(out.factors[0] == CyclotomicFactor{1, 1});
  }
  SUBCASE("T_5^- for Phi_2 sheds (x-1) and (x+1)") {
    // T(1) = 0, and the quotient by (x-1) vanishes at -1 as well
    IntPolynomial t = parse_poly("x^8-2x^7+x^6-x^5+x^3-x^2+2x-1");
    CHECK(t.eval(1) == 0);
    StripResult out = strip_cyclotomic(t);
    CHECK(out.core.degree() == 6);
    CHECK(out.core == parse_poly("x^6-2x^5+2x^4-3x^3+2x^2-2x+1"));
    CHECK(out.core.eval(1) != 0);
    REQUIRE(out.factors.size() == 2);
    CHECK(out.factors[0] == CyclotomicFactor{1, 1});
    CHECK(out.factors[1] == CyclotomicFactor{2, 1});
  }
  SUBCASE("cyclotomic-free input unchanged") {
    StripResult out = strip_cyclotomic(golden);
    CHECK(out.core == golden);
    CHECK(out.factors.empty());
  }
  SUBCASE("reconstruction property") {
    std::mt19937 rng(99);
    for (int i = 0; i < 40; ++i) {
      IntPolynomial p = random_poly(rng, 6, 4);
      if (p.is_zero()) continue;
      std::uniform_int_distribution<long> dd(1, 8);
      p = p * cyclotomic(dd(rng)) * cyclotomic(dd(rng));
      StripResult out = strip_cyclotomic(p);
      IntPolynomial prod = out.core;
      for (const auto& f : out.factors)
        for (int k = 0; k < f.multiplicity; ++k) prod = prod * cyclotomic(f.d);
      CHECK(prod == p);
      for (const auto& f : out.factors) CHECK(!div_exact_opt(out.core, cyclotomic(f.d)));
    }
  }
}

TEST_CASE("polynomial text syntax") {
  CHECK(format_poly(parse_poly("x^6-x^5-x^4-x^2+1")) == "x^6-x^5-x^4-x^2+1");
  CHECK(parse_poly("x") == IntPolynomial{0, 1});
  CHECK(parse_poly("-x") == IntPolynomial{0, -1});
  CHECK(parse_poly("7") == IntPolynomial{7});
  CHECK(parse_poly("2x^3 - 4") == IntPolynomial{-4, 0, 0, 2});
  CHECK(parse_poly(" x^2 - x - 1 ") == IntPolynomial{-1, -1, 1});
  CHECK(parse_poly("[1,-1,0,-1,0,-1,-1]") == IntPolynomial{1, -1, 0, -1, 0, -1, -1});
  CHECK(format_poly(IntPolynomial::zero()) == "0");
  CHECK(format_poly(IntPolynomial{-3}) == "-3");
  CHECK_THROWS_AS((void)parse_poly(""), Error);
  CHECK_THROWS_AS((void)parse_poly("x^"), Error);
  CHECK_THROWS_AS((void)parse_poly("x+"), Error);

  std::mt19937 rng(31337);
  for (int i = 0; i < 200; ++i) {
    IntPolynomial p = random_poly(rng, 9, 20);
    CHECK(parse_poly(format_poly(p)) == p);
  }
}

TEST_CASE("rational functions canonicalize") {
  RationalFunction a(IntPolynomial{0, 2}, IntPolynomial{-4, 4});     // 2x / (4x-4)
  RationalFunction b(IntPolynomial{0, 1}, IntPolynomial{-2, 2});     // x / (2x-2)
  CHECK(a == b);
  RationalFunction c(IntPolynomial{0, -1}, IntPolynomial{2, -2});    // -x / (-2x+2)
  CHECK(a == c);
  RationalFunction r(IntPolynomial::x_power_minus_one(3), IntPolynomial{-1, 1});
  CHECK(r.is_polynomial());
  CHECK(r.num() == IntPolynomial{1, 1, 1});
  RationalFunction pc(IntPolynomial::one(), IntPolynomial{-1, 0, 1});
  CHECK(format_rational_function(pc) == "(1)/(x^2-1)");
  CHECK(format_rational_function(r) == "x^2+x+1");
  CHECK_THROWS_AS(RationalFunction(IntPolynomial::one(), IntPolynomial::zero()), Error);
}
