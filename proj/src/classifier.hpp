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

#ifndef BETAFORGE_CLASSIFIER_HPP
#define BETAFORGE_CLASSIFIER_HPP

#include <optional>

#include "algebraic.hpp"
#include "poly.hpp"

namespace betaforge {

struct Classification {
  enum class Kind { Pisot, Salem, Neither };
  Kind kind = Kind::Neither;
  std::optional<AlgebraicReal> dominant_root;
  struct Evidence {
    int degree = 0;
    long roots_inside = -1;  // -1 when the disk count was inapplicable
    long roots_on_circle = 0;
    long roots_outside = -1;
    long real_roots_gt1 = 0;
    bool reciprocal = false;
    // Salem verdicts certify root locations of the given polynomial; its
    // irreducibility (minimality for the Salem number) is not verified.
    bool irreducibility_assumed = false;
    std::string note;
  } evidence;
};

/// Exact count of complex roots with modulus < 1. Requires p nonzero,
/// p(0) != 0 and no roots on the unit circle; Errc::on_circle_or_degenerate
/// otherwise. Computed as the winding number of p over the unit circle via
/// the rational parametrization z = (1-t^2+2it)/(1+t^2) and a Cauchy index.
long count_roots_in_unit_disk(const IntPolynomial& p);

/// Exact count of roots with modulus exactly 1 (squarefree p, p(0) != 0):
/// roots at +-1 plus conjugate pairs, the pairs counted by Sturm on
/// (-2, 2) after the x + 1/x change of variable on gcd(p, p*).
long count_roots_on_unit_circle(const IntPolynomial& p);

/// Writes a self-reciprocal p of even degree 2n as x^n * G(x + 1/x).
IntPolynomial halve_self_reciprocal(const IntPolynomial& p);

bool is_pisot(const IntPolynomial& p, Classification* out = nullptr);
bool is_salem(const IntPolynomial& p, Classification* out = nullptr);

/// Pisot / Salem / Neither with the dominant root isolated. Requires monic,
/// squarefree, nonzero constant term; Errc::no_dominant_root when p has no
/// real root > 1.
Classification classify(const IntPolynomial& p);

const char* kind_name(Classification::Kind k);

}  // namespace betaforge

#endif
