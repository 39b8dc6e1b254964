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

#ifndef BETAFORGE_EXPANSION_HPP
#define BETAFORGE_EXPANSION_HPP

#include <optional>

#include "algebraic.hpp"
#include "words.hpp"

namespace betaforge {

enum class ExpansionStatus { Finite, Periodic, Undetermined };

struct ExpansionResult {
  ExpansionStatus status = ExpansionStatus::Undetermined;
  DigitWord word;      // canonical; meaningful unless Undetermined
  Digits prefix;       // digits computed so far when Undetermined
  long digits_computed = 0;
  std::optional<IntPolynomial> companion;  // of the canonical word
  std::optional<IntPolynomial> cofactor;   // companion / defining, when exact
  bool cofactor_reciprocal = false;
  std::optional<RationalFunction> pseudo_cofactor;  // companion / defining
};

const char* status_name(ExpansionStatus s);

/// Greedy expansion of 1 in the base given by an algebraic real in (1,2)
/// with monic squarefree defining polynomial. One exact sign test decides
/// each digit; remainders are integer vectors in the power basis, so a
/// repeated vector certifies periodicity and the zero value certifies
/// finiteness. Errc::base_out_of_range when the base is not in (1,2).
ExpansionResult greedy_expand(const AlgebraicReal& base, long max_digits);

/// Quasi-greedy expansion: the finite greedy word is replaced by its
/// infinite counterpart, anything else passes through.
ExpansionResult quasi_greedy_expand(const AlgebraicReal& base, long max_digits);

/// Companion polynomial of the presentation as written: P_k in the finite
/// case, P_{k+l} - P_k in the periodic case (non-minimal presentations give
/// an extra power-of-x factor).
IntPolynomial companion_poly(const WordPresentation& w);
IntPolynomial companion_poly(const DigitWord& w);

struct CofactorResult {
  IntPolynomial q;
  bool reciprocal;
};

/// companion(w) / minpoly; Errc::not_divisible when w does not belong to a
/// root of minpoly. Reports whether the quotient is reciprocal.
CofactorResult cofactor(const WordPresentation& w, const IntPolynomial& minpoly);

/// companion(w) / defining as a reduced rational function (the defining
/// polynomial need not be minimal).
RationalFunction pseudo_cofactor(const WordPresentation& w, const IntPolynomial& defining);

}  // namespace betaforge

#endif
