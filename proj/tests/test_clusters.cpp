#include <gtest/gtest.h>

#include <algorithm>

#include "desavoid/clusters.hpp"
#include "desavoid/error.hpp"
#include "support.hpp"

using namespace desavoid;
using testing_support::Sym;

namespace {

WeightTable table(const Word& u, MatchMode m, int k, int N, ZMode z = ZMode::symbolic) {
  return weight_table(SeriesRequest{u, m, k, N, z});
}

Sym sym(const WeightTable& t) { return Sym{t.zdim, t.order}; }

}  // namespace

TEST(Clusters, EveryClusterIsLinkedAndWellFormed) {
  Pattern u({2, 3, 4, 1}, MatchMode::reduced);
  int seen = 0;
  for_each_cluster(u, 7, 6, [&](const Cluster& c) {
    ++seen;
    ASSERT_EQ(c.starts.front(), 1);
    ASSERT_EQ(c.starts.back() + u.length() - 1, static_cast<int>(c.word.size()));
    for (std::size_t i = 1; i < c.starts.size(); ++i) {
      int gap = c.starts[i] - c.starts[i - 1];
      ASSERT_GE(gap, 1);
      ASSERT_LE(gap, u.length() - 2);
    }
    MatchResult r = match_positions(c.word, u);
    for (int s : c.starts)
      ASSERT_NE(std::find(r.positions.begin(), r.positions.end(), s), r.positions.end());
    ASSERT_LE(c.removed(), 6);
  });
  EXPECT_GT(seen, 0);
}

TEST(Clusters, SingleMatchCountFor2341) {
  // a cluster with one match is just a 2341-match: choose 4 letters of [7]
  int single = 0;
  for_each_cluster(Pattern({2, 3, 4, 1}, MatchMode::reduced), 7, 2, [&](const Cluster& c) {
    if (c.matches() == 1) ++single;
  });
  EXPECT_EQ(single, 35);
  EXPECT_EQ(enumerate_clusters(Pattern({2, 3, 4, 1}, MatchMode::reduced), 5, 2, 1, 2).size(), 3u);
}

TEST(Clusters, NeedOneDescent) {
  EXPECT_THROW(for_each_cluster(Pattern({3, 1, 4, 2}, MatchMode::reduced), 4, 4, [](const Cluster&) {}),
               UnsupportedClass);
  EXPECT_THROW(table({1, 2, 3}, MatchMode::reduced, 3, 4), UnsupportedClass);
  EXPECT_THROW(table({2, 4, 1, 3}, MatchMode::reduced, 6, 4), UnsupportedClass);
}

TEST(WeightTables, Wt2341OverFiveAtZOne) {
  WeightTable t = table({2, 3, 4, 1}, MatchMode::reduced, 5, 6, ZMode::ones);
  Sym s = sym(t);
  EXPECT_EQ(t.closed_case, ClosedCase::descent);
  EXPECT_EQ(t.at(2, 1), s.t(s.x() * s.c(-3), 2));
  EXPECT_EQ(t.at(3, 1), s.t(-s.x(), 2));
  EXPECT_EQ(t.at(3, 2), s.t(-s.x(), 2));
  for (int i = 1; i < 4; ++i) EXPECT_EQ(t.at(4, i), s.zero());
  for (int i = 1; i < 5; ++i) EXPECT_EQ(t.at(5, i), s.zero());
}

TEST(WeightTables, Wt2341OverSeven) {
  WeightTable t = table({2, 3, 4, 1}, MatchMode::reduced, 7, 8);
  Sym s = sym(t);
  for (int i = 1; i < 7; ++i) EXPECT_EQ(t.at(7, i), s.zero());
  for (int i = 1; i < 6; ++i) EXPECT_EQ(t.at(6, i), s.zero());
  for (int i = 1; i < 5; ++i) EXPECT_EQ(t.at(5, i), s.t(-s.x() * s.zs({6, 7}), 2));
  for (int i = 1; i < 4; ++i) EXPECT_EQ(t.at(4, i), s.t(-s.x() * s.zpairs(5, 7), 2));
  for (int i = 1; i < 3; ++i) EXPECT_EQ(t.at(3, i), s.t(-s.x() * s.zpairs(4, 7), 2));
  EXPECT_EQ(t.at(2, 1), s.t(-s.x() * s.zpairs(3, 7), 2));
}

TEST(WeightTables, Wt3412OverEight) {
  WeightTable t = table({3, 4, 1, 2}, MatchMode::reduced, 8, 8);
  Sym s = sym(t);
  for (int i = 1; i < 8; ++i) EXPECT_EQ(t.at(8, i), s.zero()) << i;
  for (int j = 3; j < 8; ++j) EXPECT_EQ(t.at(j, 1), s.zero()) << j;
  for (int j = 2; j <= 8; ++j)
    for (int i = std::max(1, j - 2); i < j; ++i)
      EXPECT_EQ(t.at(j, i), s.t(-s.x() * s.zsum(j + 1, 8) * s.zsum(1, i - 1), 2)) << j << i;

  TSeries row72 = s.t(-s.x() * s.zs({1, 8}), 2) + s.t(s.x(2) * s.zs({1, 8}) * s.zpairs(3, 6), 4) -
                  s.t(s.x(3) * s.zs({1, 3, 4, 5, 6, 8}), 6);
  EXPECT_EQ(t.at(7, 2), row72);
  TSeries row62 = s.t(-s.x() * s.zsum(7, 8) * s.z(1), 2) + s.t(s.x(2) * s.zsum(7, 8) * s.z(1) * s.zpairs(3, 5), 4);
  EXPECT_EQ(t.at(6, 2), row62);
  TSeries row52 = s.t(-s.x() * s.zsum(6, 8) * s.z(1), 2) + s.t(s.x(2) * s.zsum(6, 8) * s.zs({1, 3, 4}), 4);
  EXPECT_EQ(t.at(5, 2), row52);
  // the printed row 73 has a stray x^2 t^4 z_8 (z_1 + z_2) term
  TSeries row73 =
      s.t(-s.x() * s.z(8) * s.zsum(1, 2), 2) + s.t(s.x(2) * s.z(8) * s.zsum(1, 2) * s.zpairs(4, 6), 4);
  EXPECT_EQ(t.at(7, 3), row73);
  TSeries row63 = s.t(-s.x() * s.zsum(7, 8) * s.zsum(1, 2), 2) +
                  s.t(s.x(2) * s.zsum(7, 8) * s.zsum(1, 2) * s.zs({4, 5}), 4);
  EXPECT_EQ(t.at(6, 3), row63);
  TSeries row74 =
      s.t(-s.x() * s.z(8) * s.zsum(1, 3), 2) + s.t(s.x(2) * s.z(8) * s.zsum(1, 3) * s.zs({5, 6}), 4);
  EXPECT_EQ(t.at(7, 4), row74);
}

TEST(WeightTables, Wt12433OverNine) {
  WeightTable t = table({1, 2, 4, 3, 3}, MatchMode::reduced, 9, 6);
  Sym s = sym(t);
  EXPECT_EQ(t.closed_case, ClosedCase::rise);
  for (int i = 1; i < 9; ++i) EXPECT_EQ(t.at(i, i + 1), s.one_minus_x());
  for (int i = 1; i <= 7; ++i) EXPECT_EQ(t.at(i, 9), s.one_minus_x());
  for (int m = 3; m <= 8; ++m)
    for (int i = 1; i < m - 1; ++i)
      EXPECT_EQ(t.at(i, m), s.one_minus_x() - s.t(s.x() * s.z(m) * s.zsum(m + 1, 9) * s.zsum(i + 1, m - 1), 3))
          << i << m;
  // the rows exactly as printed
  EXPECT_EQ(t.at(1, 3), s.one_minus_x() - s.t(s.x() * s.zs({2, 3}) * s.zsum(4, 9), 3));
  EXPECT_EQ(t.at(2, 8), s.one_minus_x() - s.t(s.x() * s.zs({8, 9}) * s.zsum(3, 7), 3));
}

TEST(WeightTables, Wt12311OverSeven) {
  WeightTable t = table({1, 2, 3, 1, 1}, MatchMode::reduced, 7, 9);
  Sym s = sym(t);
  EXPECT_EQ(t.closed_case, ClosedCase::level);
  for (int i = 1; i <= 7; ++i) {
    XPoly inner(7);
    for (int c = i + 1; c <= 7; ++c)
      for (int d = c + 1; d <= 7; ++d) inner += s.zs({c, d});
    EXPECT_EQ(t.at(i, i), s.one_minus_x() - s.t(s.x() * s.z(i) * inner, 3)) << i;
  }
}

TEST(WeightTables, Wt2312OverFour) {
  WeightTable t = table({2, 3, 1, 2}, MatchMode::reduced, 4, 8);
  Sym s = sym(t);
  EXPECT_EQ(t.closed_case, ClosedCase::weak_descent);
  EXPECT_EQ(t.at(4, 4), s.one_minus_x());
  EXPECT_EQ(t.at(1, 1), s.one_minus_x());
  for (int i = 1; i < 4; ++i) EXPECT_EQ(t.at(4, i), s.zero());
  EXPECT_EQ(t.at(3, 3), s.one_minus_x() - s.t(s.x() * s.z(4) * s.zsum(1, 2), 2));
  EXPECT_EQ(t.at(3, 2), s.t(s.x(2) * s.zs({1, 2, 3, 4}), 4));
  EXPECT_EQ(t.at(3, 1), s.zero());
  EXPECT_EQ(t.at(2, 1), s.zero());
  EXPECT_EQ(t.at(2, 2), s.one_minus_x() - s.t(s.x() * s.z(1) * s.zsum(3, 4), 2));
}

TEST(WeightTables, Ewt2341) {
  WeightTable t = table({2, 3, 4, 1}, MatchMode::exact, 7, 8);
  Sym s = sym(t);
  for (int j = 2; j <= 7; ++j)
    for (int i = 1; i < j; ++i) {
      TSeries want = j == 2 && i == 1 ? s.t(-s.x() * s.zs({3, 4}), 2) : s.zero();
      EXPECT_EQ(t.at(j, i), want) << j << i;
    }
}

TEST(WeightTables, Ewt12433) {
  WeightTable t = table({1, 2, 4, 3, 3}, MatchMode::exact, 9, 8);
  Sym s = sym(t);
  for (int i = 1; i <= 9; ++i)
    for (int j = i + 1; j <= 9; ++j) {
      TSeries want = s.one_minus_x();
      if (i == 1 && j == 3) want -= s.t(s.x() * s.zs({2, 3, 4}), 3);
      EXPECT_EQ(t.at(i, j), want) << i << j;
    }
}

TEST(WeightTables, Wt11211IsGeometric) {
  WeightTable t = table({1, 1, 2, 1, 1}, MatchMode::reduced, 4, 12);
  Sym s = sym(t);
  for (int i = 1; i <= 4; ++i) {
    TSeries q = s.t(s.x() * s.z(i) * s.z(i) * s.zsum(i + 1, 4), 3);
    // 1 - x - q + q^2 - q^3 + ...
    TSeries want = s.one_minus_x() - q * (-q).geom();
    EXPECT_EQ(t.at(i, i), want) << i;
  }
}

TEST(WeightTables, Wt11124333TwoMatchTerms) {
  WeightTable t = table({1, 1, 1, 2, 4, 3, 3, 3}, MatchMode::reduced, 7, 12);
  Sym s = sym(t);
  XPoly a = s.z(1) * s.z(1) * s.z(2) * s.zsum(4, 7);
  EXPECT_EQ(t.at(1, 3), s.one_minus_x() - s.t(s.x() * a * s.z(3) * s.z(3), 6));
  EXPECT_EQ(t.at(1, 4), s.one_minus_x() - s.t(s.x() * s.z(1) * s.z(1) * s.zsum(2, 3) * s.zsum(5, 7) * s.z(4) * s.z(4), 6));
  // two linked matches carry (-x)^2
  XPoly b = s.z(4) * s.zsum(6, 7) * s.z(5) * s.z(5);
  TSeries row15 = s.one_minus_x() -
                  s.t(s.x() * s.z(1) * s.z(1) * s.zsum(2, 4) * s.zsum(6, 7) * s.z(5) * s.z(5), 6) +
                  s.t(s.x(2) * a * s.z(3) * s.z(3) * s.z(3) * b, 11) +
                  s.t(s.x(2) * a * s.z(3) * s.z(3) * s.z(3) * s.z(3) * b, 12);
  EXPECT_EQ(t.at(1, 5), row15);
  EXPECT_EQ(t.at(2, 4), s.one_minus_x() - s.t(s.x() * s.z(2) * s.z(2) * s.z(3) * s.zsum(5, 7) * s.z(4) * s.z(4), 6));
  EXPECT_EQ(t.at(1, 2), s.one_minus_x());
  EXPECT_EQ(t.at(3, 7), s.one_minus_x());
}

TEST(WeightTables, CasePairs) {
  EXPECT_EQ(case_pairs(ClosedCase::descent, 3).size(), 3u);
  EXPECT_EQ(case_pairs(ClosedCase::rise, 3).size(), 3u);
  EXPECT_EQ(case_pairs(ClosedCase::level, 3).size(), 3u);
  EXPECT_EQ(case_pairs(ClosedCase::weak_descent, 3).size(), 6u);
}
