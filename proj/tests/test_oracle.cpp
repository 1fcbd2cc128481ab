#include <gtest/gtest.h>

#include "desavoid/error.hpp"
#include "desavoid/oracle.hpp"
#include "desavoid/verify.hpp"

using namespace desavoid;

namespace {

struct Case {
  const char* word;
  int k;
};

// every pattern named in the paper, with its alphabet
const Case kPaperPatterns[] = {{"2341", 5},     {"2221", 5}, {"3412", 8},  {"12433", 9}, {"11124333", 7},
                               {"12311", 7},    {"11211", 4}, {"2312", 4},  {"131", 3},   {"132", 3}};

SeriesRequest req(const Word& w, MatchMode m, int k, int N, ZMode z = ZMode::ones) {
  return SeriesRequest{w, m, k, N, z};
}

// Words avoiding three equal letters in a row: a_n = (k-1)(a_{n-1} + a_{n-2}).
mpz_class no_triple_count(int k, int n) {
  std::vector<mpz_class> a(static_cast<std::size_t>(std::max(n, 2)) + 1);
  a[0] = 1;
  a[1] = k;
  a[2] = k * k;
  for (int i = 3; i <= n; ++i) a[i] = (k - 1) * (a[i - 1] + a[i - 2]);
  return a[n];
}

}  // namespace

TEST(Oracle, BruteEqualsDpOnPaperPatterns) {
  for (const auto& c : kPaperPatterns) {
    Word w = parse_word(c.word);
    for (MatchMode m : {MatchMode::reduced, MatchMode::exact}) {
      Word u = m == MatchMode::reduced ? reduce(w) : w;
      SeriesRequest r = req(u, m, c.k, 6);
      ASSERT_EQ(brute_series(r), dp_series(r)) << c.word << (m == MatchMode::exact ? " exact" : "");
    }
  }
}

TEST(Oracle, SymbolicBruteEqualsDp) {
  for (const auto& r : {req({2, 3, 4, 1}, MatchMode::reduced, 5, 5, ZMode::symbolic),
                        req({1, 3, 1}, MatchMode::exact, 3, 6, ZMode::symbolic),
                        req({2, 3, 1, 2}, MatchMode::reduced, 4, 5, ZMode::symbolic),
                        req({1, 1}, MatchMode::reduced, 3, 5, ZMode::symbolic)}) {
    TSeries b = brute_series(r);
    ASSERT_EQ(b.zdim(), r.k);
    ASSERT_EQ(b, dp_series(r));
    ASSERT_EQ(b.specialize_z_ones(), dp_series(req(r.pattern, r.mode, r.k, r.order)));
  }
}

TEST(Oracle, FirstTermsOf2341) {
  TSeries s = dp_series(req({2, 3, 4, 1}, MatchMode::reduced, 5, 3));
  EXPECT_EQ(s[1], XPoly::monomial(5, 1));
  EXPECT_EQ(s[2], XPoly::monomial(15, 1) + XPoly::monomial(10, 2));
  EXPECT_EQ(s[3], XPoly::monomial(35, 1) + XPoly::monomial(80, 2) + XPoly::monomial(10, 3));
}

TEST(Oracle, ThreadCountDoesNotChangeBrute) {
  SeriesRequest r = req({2, 3, 1, 2}, MatchMode::reduced, 4, 7);
  EXPECT_EQ(brute_series(r, {kDefaultBudget, 1}), brute_series(r, {kDefaultBudget, 3}));
}

TEST(Oracle, DpSwitchesToBigIntegers) {
  // 16^17 does not fit in 64 bits
  TSeries s = dp_series(req({1, 1, 1}, MatchMode::reduced, 16, 17));
  for (int n : {1, 2, 3, 16, 17}) {
    mpq_class total = 0;
    for (const auto& term : s[n].terms()) total += term.c;
    EXPECT_EQ(total, mpq_class(no_triple_count(16, n))) << n;
  }
}

TEST(Oracle, BudgetAndGuards) {
  EXPECT_THROW(brute_series(req({2, 1}, MatchMode::reduced, 5, 8), {100, 1}), BudgetExceeded);
  EXPECT_THROW(dp_series(req({2, 1}, MatchMode::reduced, 0, 3)), InvalidArgument);
  EXPECT_THROW(dp_series(req({2, 1}, MatchMode::reduced, 3, -1)), InvalidArgument);
  EXPECT_THROW(dp_series(req({2, 5}, MatchMode::exact, 4, 3)), InvalidArgument);
  EXPECT_THROW(dp_series(req({2, 1}, MatchMode::reduced, 10, 3, ZMode::symbolic)), InvalidArgument);
  EXPECT_THROW(dp_series(req({2, 1}, MatchMode::reduced, 3, 13, ZMode::symbolic)), InvalidArgument);
  EXPECT_EQ(dp_series(req({2, 1}, MatchMode::reduced, 3, 0)), TSeries::one(0));
}

TEST(Compositions, CountAndOrder) {
  std::vector<std::vector<int>> seen;
  for_each_composition(4, [&](const Composition& c) { seen.push_back(c.parts); });
  EXPECT_EQ(seen.size(), 8u);
  EXPECT_EQ(seen.front(), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(seen.back(), std::vector<int>{4});
}

TEST(Reciprocity, FixedPointsThetaAndReciprocalAgree) {
  const Case cases[] = {{"2341", 5}, {"2221", 5}, {"12433", 9}, {"12311", 7}, {"2312", 4}, {"131", 3}, {"132", 3}};
  for (const auto& c : cases) {
    Word w = parse_word(c.word);
    for (MatchMode m : {MatchMode::reduced, MatchMode::exact}) {
      SeriesRequest r = req(m == MatchMode::reduced ? reduce(w) : w, m, c.k, 6);
      TSeries recip = dp_series(r).reciprocal();
      for (int n = 0; n <= 6; ++n) {
        ASSERT_EQ(theta_h(r, n), recip[n]) << c.word << " n=" << n;
        ASSERT_EQ(fixed_point_sum(r, n), recip[n]) << c.word << " n=" << n;
      }
    }
  }
}

TEST(Reciprocity, SymbolicFixedPoints) {
  SeriesRequest r = req({2, 3, 4, 1}, MatchMode::reduced, 5, 5, ZMode::symbolic);
  TSeries recip = dp_series(r).reciprocal();
  for (int n = 0; n <= 5; ++n) ASSERT_EQ(fixed_point_sum(r, n), recip[n]);
  EXPECT_EQ(reciprocity_series(r), dp_series(r));
}

TEST(Reciprocity, FixedPointsAreWhatTheDefinitionSays) {
  SeriesRequest r = req({2, 1}, MatchMode::reduced, 3, 4);
  // with u = 21 every decreasing boundary is itself a match, so the fixed
  // points are all brick-word pairs with weakly increasing bricks
  std::uint64_t count = 0;
  for_each_fixed_point(r, 4, [&](const FixedPoint& fp) {
    ++count;
    int start = 0;
    for (int len : fp.composition.parts) {
      for (int i = start; i + 1 < start + len; ++i) ASSERT_LE(fp.word[i], fp.word[i + 1]);
      start += len;
    }
  });
  EXPECT_EQ(count, fixed_point_count(r, 4));
  // sum over compositions of 4 of prod C(b+2,2)
  EXPECT_EQ(count, 354u);
}

TEST(Reciprocity, NeedsOneDescent) {
  SeriesRequest r = req({3, 1, 4, 2}, MatchMode::reduced, 4, 4);
  EXPECT_THROW(fixed_point_sum(r, 4), UnsupportedClass);
  EXPECT_THROW(fixed_point_sum(req({2, 3, 4, 1}, MatchMode::reduced, 5, 8), 8, 10), BudgetExceeded);
}
