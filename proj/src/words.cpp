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

#include "words.hpp"

#include <algorithm>
#include <numeric>

namespace betaforge {

namespace {

void validate_digits(const Digits& d) {
  for (uint8_t v : d)
    if (v > 1) throw Error(Errc::invalid_input, "digit outside {0,1}");
}

bool repeats_with(const Digits& per, size_t d) {
  for (size_t i = d; i < per.size(); ++i)
    if (per[i] != per[i - d]) return false;
  return true;
}

}  // namespace

DigitWord DigitWord::finite(Digits digits) {
  validate_digits(digits);
  DigitWord w;
  w.pre_ = std::move(digits);
  w.per_.clear();
  w.canonicalize();
  return w;
}

DigitWord DigitWord::periodic(Digits pre, Digits per) {
  validate_digits(pre);
  validate_digits(per);
  DigitWord w;
  w.pre_ = std::move(pre);
  w.per_ = std::move(per);
  w.canonicalize();
  return w;
}

DigitWord DigitWord::from_presentation(const WordPresentation& w) {
  return periodic(w.pre, w.per);
}

void DigitWord::canonicalize() {
  // minimal period
  if (!per_.empty()) {
    for (size_t d = 1; d < per_.size(); ++d) {
      if (per_.size() % d != 0) continue;
      if (repeats_with(per_, d)) {
        per_.resize(d);
        break;
      }
    }
    if (per_.size() == 1 && per_[0] == 0) per_.clear();  // (0)^w is a finite tail
  }
  if (per_.empty()) {
    while (!pre_.empty() && pre_.back() == 0) pre_.pop_back();
    if (pre_.empty()) pre_ = {0};
    return;
  }
  // minimal preperiod: absorb matching tail digits into a rotated period
  while (!pre_.empty() && pre_.back() == per_.back()) {
    per_.insert(per_.begin(), per_.back());
    per_.pop_back();
    pre_.pop_back();
  }
}

uint8_t DigitWord::digit(long i) const {
  if (i < 1) throw Error(Errc::invalid_input, "digit index is 1-based");
  long k = preperiod_len();
  if (i <= k) return pre_[static_cast<size_t>(i - 1)];
  if (per_.empty()) return 0;
  return per_[static_cast<size_t>((i - k - 1) % period_len())];
}

Cmp compare_lex(const DigitWord& a, const DigitWord& b) {
  long la = std::max<long>(a.period_len(), 1), lb = std::max<long>(b.period_len(), 1);
  long n = std::max(a.preperiod_len(), b.preperiod_len()) + std::lcm(la, lb);
  for (long i = 1; i <= n; ++i) {
    uint8_t da = a.digit(i), db = b.digit(i);
    if (da != db) return da < db ? Cmp::LT : Cmp::GT;
  }
  return Cmp::EQ;
}

DigitWord shift(const DigitWord& w, long j) {
  if (j < 0) throw Error(Errc::invalid_input, "shift by negative amount");
  if (j == 0) return w;
  long k = w.preperiod_len();
  if (j <= k) {
    Digits pre(w.preperiod().begin() + j, w.preperiod().end());
    return DigitWord::periodic(std::move(pre), w.period());
  }
  if (w.is_finite()) return DigitWord::finite({});
  long r = (j - k) % w.period_len();
  Digits per(w.period().begin() + r, w.period().end());
  per.insert(per.end(), w.period().begin(), w.period().begin() + r);
  return DigitWord::periodic({}, std::move(per));
}

ParryResult check_parry(const DigitWord& a) {
  if (a.is_zero() || a.digit(1) != 1)
    throw Error(Errc::invalid_input, "check_parry needs a word starting with digit 1");
  long bound = a.preperiod_len() + a.period_len();
  for (long j = 1; j <= bound; ++j) {
    if (compare_lex(shift(a, j), a) != Cmp::LT) return {false, j};
  }
  return {true, 0};
}

RevGreedyResult check_reversibly_greedy(const DigitWord& a) {
  // Quasi-greedy words (shift equal to the word at period multiples) are in
  // scope here: the finite-case theorems route through them. Only a strict
  // shift violation disqualifies.
  if (a.is_zero() || a.digit(1) != 1)
    throw Error(Errc::not_greedy, "not a greedy word (leading digit is not 1)");
  long k = a.preperiod_len() + a.period_len();
  for (long j = 1; j <= k; ++j) {
    if (compare_lex(shift(a, j), a) == Cmp::GT)
      throw Error(Errc::not_greedy,
                  "not a greedy word (violating shift " + std::to_string(j) + ")");
  }
  long n = a.preperiod_len() + a.period_len();
  Digits window(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i) window[static_cast<size_t>(i - 1)] = a.digit(i);
  for (long i = 0; i <= n - 2; ++i) {
    // reversed slice a_{n-i} a_{n-i-1} ... a_2, right-padded with zeros
    bool strictly_greater = false;
    for (long t = 0; t < n; ++t) {
      long src = n - i - t;  // index of the t-th digit of the reversed slice
      uint8_t d = (src >= 2) ? window[static_cast<size_t>(src - 1)] : 0;
      if (window[static_cast<size_t>(t)] != d) {
        strictly_greater = window[static_cast<size_t>(t)] > d;
        break;
      }
    }
    if (!strictly_greater) return {false, i};
  }
  return {true, -1};
}

DigitWord quasi_greedy_of_finite(const DigitWord& a) {
  if (!a.is_finite() || a.is_zero())
    throw Error(Errc::invalid_input, "quasi_greedy_of_finite needs a nonzero finite word");
  const Digits& d = a.preperiod();
  if (d.back() != 1) throw Error(Errc::invalid_input, "finite greedy words end in 1");
  if (d.size() == 1)
    throw Error(Errc::invalid_input, "the word \"1\" has no quasi-greedy counterpart (base 1)");
  Digits per(d.begin(), d.end() - 1);
  per.push_back(0);  // a_k - 1 over the binary alphabet
  return DigitWord::periodic({}, std::move(per));
}

Digits render_parts(const std::vector<PatternPart>& parts) {
  Digits out;
  for (const auto& p : parts) {
    if (p.repeat < 0) throw Error(Errc::invalid_input, "negative repetition in pattern");
    Digits frag = p.frag;
    if (p.reversed) std::reverse(frag.begin(), frag.end());
    for (long r = 0; r < p.repeat; ++r) out.insert(out.end(), frag.begin(), frag.end());
  }
  return out;
}

WordPresentation build_pattern_presentation(const std::vector<PatternPart>& pre,
                                            const std::vector<PatternPart>& per) {
  return {render_parts(pre), render_parts(per)};
}

DigitWord build_pattern(const std::vector<PatternPart>& pre, const std::vector<PatternPart>& per) {
  return DigitWord::from_presentation(build_pattern_presentation(pre, per));
}

Digits digits_from_string(std::string_view s) {
  Digits d;
  d.reserve(s.size());
  for (char c : s) {
    if (c == '0')
      d.push_back(0);
    else if (c == '1')
      d.push_back(1);
    else
      throw Error(Errc::invalid_input, "digit strings may contain only 0 and 1");
  }
  return d;
}

std::string digits_to_string(const Digits& d) {
  std::string s;
  s.reserve(d.size());
  for (uint8_t v : d) s.push_back(static_cast<char>('0' + v));
  return s;
}

WordPresentation parse_word_presentation(std::string_view text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  WordPresentation w;
  while (i < text.size() && (text[i] == '0' || text[i] == '1'))
    w.pre.push_back(static_cast<uint8_t>(text[i++] - '0'));
  skip_ws();
  if (i < text.size() && text[i] == '(') {
    ++i;
    while (i < text.size() && (text[i] == '0' || text[i] == '1'))
      w.per.push_back(static_cast<uint8_t>(text[i++] - '0'));
    if (i >= text.size() || text[i] != ')')
      throw Error(Errc::invalid_input, "unterminated period in word text");
    ++i;
    if (i + 1 >= text.size() || text[i] != '^' || (text[i + 1] != 'w' && text[i + 1] != 'W'))
      throw Error(Errc::invalid_input, "periodic words end in ^w");
    i += 2;
    if (w.per.empty()) throw Error(Errc::invalid_input, "empty period in word text");
  }
  skip_ws();
  if (i != text.size()) throw Error(Errc::invalid_input, "trailing characters in word text");
  if (w.pre.empty() && w.per.empty()) throw Error(Errc::invalid_input, "empty word text");
  return w;
}

DigitWord parse_word(std::string_view text) {
  return DigitWord::from_presentation(parse_word_presentation(text));
}

std::string format_presentation(const WordPresentation& w) {
  std::string s = digits_to_string(w.pre);
  if (!w.per.empty()) s += "(" + digits_to_string(w.per) + ")^w";
  return s;
}

std::string format_word(const DigitWord& w) { return format_presentation(w.presentation()); }

}  // namespace betaforge
