#include "doctest.h"
#include "words.hpp"

#include <random>
#include <string>

using namespace betaforge;

namespace {

// naive stream prefix, independent of compare_lex/shift internals
std::string prefix(const DigitWord& w, long n) {
  std::string s;
  for (long i = 1; i <= n; ++i) s.push_back(static_cast<char>('0' + w.digit(i)));
  return s;
}

// direct reading of the reversed-window condition on padded strings
bool naive_reversibly_greedy(const DigitWord& a) {
  long n = a.preperiod_len() + a.period_len();
  std::string w = prefix(a, n);
  for (long i = 0; i <= n - 2; ++i) {
    std::string rev;
    for (long src = n - i; src >= 2; --src) rev.push_back(static_cast<char>('0' + a.digit(src)));
    rev.resize(static_cast<size_t>(n), '0');
    if (!(w > rev)) return false;
  }
  return true;
}

bool naive_parry(const DigitWord& a) {
  long n = a.preperiod_len() + a.period_len();
  long horizon = 4 * n + 8;
  std::string w = prefix(a, horizon + n);
  for (long j = 1; j <= n; ++j) {
    if (w.substr(static_cast<size_t>(j), static_cast<size_t>(horizon)) >=
        w.substr(0, static_cast<size_t>(horizon)))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(parse_word("1101") == DigitWord::finite({1, 1, 0, 1}));
  CHECK(parse_word("110") == DigitWord::finite({1, 1}));          // trailing zero stripped
  CHECK(parse_word("0") == DigitWord());                          // the zero word
  CHECK(parse_word("11(0)^w") == parse_word("11"));               // (0)^w tail is finite
  CHECK(parse_word("1(01)^w") == parse_word("(10)^w"));           // absorbed into rotation
  CHECK(parse_word("1(110011001100)^w") == parse_word("1(1100)^w"));  // period minimized
  CHECK(format_word(parse_word("1(01)^w")) == "(10)^w");
  CHECK(format_word(parse_word("11(0010)^w")) == "11(0010)^w");
  CHECK(format_word(DigitWord()) == "0");
  CHECK_THROWS_AS((void)parse_word(""), Error);
  CHECK_THROWS_AS((void)parse_word("12"), Error);
  CHECK_THROWS_AS((void)parse_word("1(01)"), Error);

  // canonicalization is idempotent, and equal canonical forms compare EQ
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> bit(0, 1), len(0, 6);
  for (int i = 0; i < 300; ++i) {
    Digits pre(static_cast<size_t>(len(rng))), per(static_cast<size_t>(len(rng)));
    for (auto& d : pre) d = static_cast<uint8_t>(bit(rng));
    for (auto& d : per) d = static_cast<uint8_t>(bit(rng));
    DigitWord w = DigitWord::periodic(pre, per);
    DigitWord again = DigitWord::from_presentation(w.presentation());
    CHECK(again == w);
    CHECK(compare_lex(w, again) == Cmp::EQ);
    DigitWord noncanon = DigitWord::periodic(std::move(pre), std::move(per));
    CHECK(compare_lex(w, noncanon) == Cmp::EQ);
  }
}

TEST_CASE("compare_lex") {
  CHECK(compare_lex(parse_word("11"), parse_word("1011")) == Cmp::GT);
  CHECK(compare_lex(parse_word("1(01)^w"), parse_word("0(1)^w")) == Cmp::GT);
  CHECK(compare_lex(parse_word("(10)^w"), parse_word("1(01)^w")) == Cmp::EQ);
  CHECK(compare_lex(parse_word("1011"), parse_word("11")) == Cmp::LT);

  // total order on a random corpus: antisymmetry and transitivity
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> bit(0, 1), len(0, 5);
  std::vector<DigitWord> corpus;
  for (int i = 0; i < 30; ++i) {
    Digits pre(static_cast<size_t>(len(rng))), per(static_cast<size_t>(len(rng)));
    for (auto& d : pre) d = static_cast<uint8_t>(bit(rng));
    for (auto& d : per) d = static_cast<uint8_t>(bit(rng));
    corpus.push_back(DigitWord::periodic(std::move(pre), std::move(per)));
  }
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      Cmp ab = compare_lex(a, b), ba = compare_lex(b, a);
      if (ab == Cmp::LT) CHECK(ba == Cmp::GT);
      if (ab == Cmp::EQ) CHECK(ba == Cmp::EQ);
      for (const auto& c : corpus) {
        if (ab == Cmp::LT && compare_lex(b, c) == Cmp::LT) CHECK(compare_lex(a, c) == Cmp::LT);
      }
    }
}

TEST_CASE("shift") {
  CHECK(shift(parse_word("11(0010)^w"), 2) == parse_word("(0010)^w"));
  DigitWord w = parse_word("11(0010)^w");
  CHECK(shift(w, 0) == w);
  CHECK(shift(parse_word("101"), 2) == parse_word("1"));
  CHECK(shift(parse_word("101"), 3) == DigitWord());

  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> bit(0, 1), len(1, 5), sh(0, 7);
  for (int t = 0; t < 200; ++t) {
    Digits pre(static_cast<size_t>(len(rng))), per(static_cast<size_t>(len(rng)));
    for (auto& d : pre) d = static_cast<uint8_t>(bit(rng));
    for (auto& d : per) d = static_cast<uint8_t>(bit(rng));
    DigitWord w2 = DigitWord::periodic(std::move(pre), std::move(per));
    long i = sh(rng), j = sh(rng);
    CHECK(shift(shift(w2, i), j) == shift(w2, i + j));
  }
}

TEST_CASE("check_parry") {
  CHECK(check_parry(parse_word("11(0010)^w")).greedy);
  ParryResult r = check_parry(parse_word("1011"));
  CHECK(!r.greedy);
  CHECK(r.violating_shift == 2);
  CHECK(check_parry(parse_word("11001011")).greedy);
  CHECK(check_parry(parse_word("11")).greedy);
  CHECK_THROWS_AS((void)check_parry(parse_word("011")), Error);  // leading digit 0 after canon? 011 -> digit(1)=0
  CHECK_THROWS_AS((void)check_parry(DigitWord()), Error);

  // equivalence with a naive reading on every short word
  for (int n = 1; n <= 10; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Digits d(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = (mask >> i) & 1u;
      if (d[0] != 1) continue;
      DigitWord w = DigitWord::finite(d);
      if (w.digit(1) != 1) continue;
      CHECK(check_parry(w).greedy == naive_parry(w));
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Digits d(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = (mask >> i) & 1u;
      if (d[0] != 1) continue;
      DigitWord w = DigitWord::periodic({}, d);
      if (w.is_zero() || w.digit(1) != 1) continue;
      CHECK(check_parry(w).greedy == naive_parry(w));
    }
  }
}

TEST_CASE("check_reversibly_greedy") {
  CHECK(check_reversibly_greedy(parse_word("1101")).reversibly_greedy);
  CHECK(check_reversibly_greedy(parse_word("11(0010)^w")).reversibly_greedy);
  CHECK(check_reversibly_greedy(parse_word("11")).reversibly_greedy);
  CHECK_THROWS_AS((void)check_reversibly_greedy(parse_word("1011")), Error);  // not greedy

  long rg_failures = 0;
  for (int n = 2; n <= 11; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Digits d(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = (mask >> i) & 1u;
      if (d[0] != 1) continue;
      DigitWord w = DigitWord::finite(d);
      if (w.digit(1) != 1) continue;
      if (!check_parry(w).greedy) continue;
      bool got = check_reversibly_greedy(w).reversibly_greedy;
      CHECK(got == naive_reversibly_greedy(w));
      if (!got) ++rg_failures;
    }
  }
  CHECK(rg_failures > 0);  // greedy but not reversibly greedy words exist
}

TEST_CASE("quasi_greedy_of_finite") {
  CHECK(quasi_greedy_of_finite(parse_word("11")) == parse_word("(10)^w"));
  CHECK(quasi_greedy_of_finite(parse_word("1101")) == parse_word("(1100)^w"));
  CHECK_THROWS_AS((void)quasi_greedy_of_finite(parse_word("1")), Error);
  CHECK_THROWS_AS((void)quasi_greedy_of_finite(parse_word("1(10)^w")), Error);

  // Proposition-style closure: the quasi-greedy word of every finite
  // reversibly greedy word is itself reversibly greedy
  for (int n = 2; n <= 11; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Digits d(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = (mask >> i) & 1u;
      if (d[0] != 1 || d[static_cast<size_t>(n - 1)] != 1) continue;
      DigitWord w = DigitWord::finite(d);
      if (w.preperiod_len() != n) continue;
      if (!check_parry(w).greedy) continue;
      if (!check_reversibly_greedy(w).reversibly_greedy) continue;
      DigitWord q = quasi_greedy_of_finite(w);
      CHECK(check_reversibly_greedy(q).reversibly_greedy);
    }
  }
}

TEST_CASE("build_pattern") {
  // 1(kappa tau kappa* 00)^w with kappa=1, tau=0110 -> base word for j=1
  DigitWord w = build_pattern({{{1}}},
                              {{{1}}, {{0, 1, 1, 0}}, {{1}, true}, {{0, 0}}});
  CHECK(w == parse_word("1(10110100)^w"));
  // reversal
  CHECK(render_parts({{{1, 0, 0}, true}}) == Digits{0, 0, 1});
  // repetition and empty fragments
  CHECK(render_parts({{{1, 0}, false, 3}}) == Digits{1, 0, 1, 0, 1, 0});
  CHECK(render_parts({{{}, false, 5}}).empty());
  WordPresentation p = build_pattern_presentation({{{1}}}, {{{1, 1, 0, 0}, false, 3}});
  CHECK(p.per.size() == 12);  // presentation keeps the non-minimal period
  CHECK(DigitWord::from_presentation(p) == parse_word("1(1100)^w"));
}
