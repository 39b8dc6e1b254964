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

#ifndef BETAFORGE_WORDS_HPP
#define BETAFORGE_WORDS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "poly.hpp"

namespace betaforge {

using Digits = std::vector<uint8_t>;

/// A digit word exactly as written: preperiod u and period v encode the
/// stream u v v v ...; empty v means u followed by zeros. Not canonical.
struct WordPresentation {
  Digits pre, per;
  long length() const { return static_cast<long>(pre.size() + per.size()); }
};

/// Eventually periodic binary word u(v)^w in canonical form: minimal period,
/// then minimal preperiod; a finite word has empty period and no trailing
/// zeros (the zero word is the single digit "0").
class DigitWord {
 public:
  DigitWord() : pre_{0} {}
  static DigitWord finite(Digits digits);
  static DigitWord periodic(Digits pre, Digits per);
  static DigitWord from_presentation(const WordPresentation& w);

  const Digits& preperiod() const { return pre_; }
  const Digits& period() const { return per_; }
  bool is_finite() const { return per_.empty(); }
  bool is_zero() const { return per_.empty() && pre_.size() == 1 && pre_[0] == 0; }
  long preperiod_len() const { return static_cast<long>(pre_.size()); }
  long period_len() const { return static_cast<long>(per_.size()); }

  /// 1-indexed digit of the infinite stream.
  uint8_t digit(long i) const;
  WordPresentation presentation() const { return {pre_, per_}; }

  bool operator==(const DigitWord& o) const { return pre_ == o.pre_ && per_ == o.per_; }
  bool operator!=(const DigitWord& o) const { return !(*this == o); }

 private:
  Digits pre_, per_;
  void canonicalize();
};

enum class Cmp { LT, EQ, GT };

/// Lexicographic comparison of the infinite streams (finite words padded
/// with zeros). Decided on the first max(k_a,k_b) + lcm(l_a,l_b) digits.
Cmp compare_lex(const DigitWord& a, const DigitWord& b);

/// Drops the first j digits of the stream.
DigitWord shift(const DigitWord& w, long j);

struct ParryResult {
  bool greedy;
  long violating_shift;  // smallest j with sigma^j(a) >=lex a; 0 when greedy
};

/// Parry's criterion: a is the greedy expansion of 1 for some beta > 1 iff
/// sigma^j(a) <lex a for 1 <= j <= k+l. Requires a nonempty with a_1 = 1.
ParryResult check_parry(const DigitWord& a);

struct RevGreedyResult {
  bool reversibly_greedy;
  long violating_i;  // smallest offending i; -1 when satisfied
};

/// The reversed-window condition: a_1..a_{k+l} >lex a_{k+l-i}...a_2 for all
/// 0 <= i <= k+l-2, shorter strings right-padded with zeros. Requires the
/// word to be greedy (Errc::not_greedy otherwise); ties count as violations.
RevGreedyResult check_reversibly_greedy(const DigitWord& a);

/// For a finite greedy word a_1..a_k (last digit 1, k >= 2): the quasi-greedy
/// expansion (a_1...a_{k-1}0)^w.
DigitWord quasi_greedy_of_finite(const DigitWord& a);

/// One section of a pattern template: a fragment, possibly reversed, repeated.
struct PatternPart {
  Digits frag;
  bool reversed = false;
  long repeat = 1;
};

Digits render_parts(const std::vector<PatternPart>& parts);
/// Assembles preperiod and period sections into a word presentation
/// (the final group is the period), without canonicalizing.
WordPresentation build_pattern_presentation(const std::vector<PatternPart>& pre,
                                            const std::vector<PatternPart>& per);
DigitWord build_pattern(const std::vector<PatternPart>& pre, const std::vector<PatternPart>& per);

Digits digits_from_string(std::string_view s);
std::string digits_to_string(const Digits& d);

/// Parses `1101`, `11(0010)^w`, `1(110001100)^w`; accepts non-canonical
/// presentations.
WordPresentation parse_word_presentation(std::string_view text);
DigitWord parse_word(std::string_view text);
std::string format_word(const DigitWord& w);
std::string format_presentation(const WordPresentation& w);

}  // namespace betaforge

#endif
