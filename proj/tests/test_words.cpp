#include <gtest/gtest.h>

#include <functional>

#include "desavoid/error.hpp"
#include "desavoid/words.hpp"

using namespace desavoid;

namespace {

void for_each_word(int k, int n, const std::function<void(const Word&)>& f) {
  Word w(static_cast<std::size_t>(n), 1);
  while (true) {
    f(w);
    int i = n - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == k) w[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) return;
    ++w[static_cast<std::size_t>(i)];
  }
}

}  // namespace

TEST(Words, ParsesCompactAndCommaForms) {
  EXPECT_EQ(parse_word("2341"), (Word{2, 3, 4, 1}));
  EXPECT_EQ(parse_word("10,3,11"), (Word{10, 3, 11}));
  EXPECT_EQ(parse_word(" 1, 2 ,3"), (Word{1, 2, 3}));
  EXPECT_THROW(parse_word("12a"), InvalidArgument);
  EXPECT_THROW(parse_word("1,,2"), InvalidArgument);
  EXPECT_EQ(format_word({10, 3, 11}), "10,3,11");
  EXPECT_EQ(format_word({2, 3, 4, 1}), "2341");
}

TEST(Words, Reduce) {
  EXPECT_EQ(reduce({5, 3, 9, 3}), (Word{2, 1, 3, 1}));
  EXPECT_EQ(reduce({1, 3, 1}), (Word{1, 2, 1}));
  EXPECT_EQ(reduce({}), Word{});
  EXPECT_TRUE(is_reduced({2, 3, 4, 1}));
  EXPECT_FALSE(is_reduced({1, 3, 1}));
  EXPECT_TRUE(is_reduced({1, 1, 1, 2, 4, 3, 3, 3}));
}

TEST(Words, Stats) {
  StatRecord s = word_stats({3, 1, 1, 2, 2, 1});
  EXPECT_EQ(s.des_set, (std::vector<int>{1, 5}));
  EXPECT_EQ(s.lev_set, (std::vector<int>{2, 4}));
  EXPECT_EQ(s.rise_set, (std::vector<int>{3}));
  EXPECT_EQ(s.wdes_set, (std::vector<int>{1, 2, 4, 5}));
  EXPECT_EQ(s.wrise_set, (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(s.des, 2);
  EXPECT_EQ(s.wdes, 4);
  EXPECT_EQ(s.ris, 1);
  EXPECT_EQ(s.wris, 3);
  EXPECT_EQ(s.lev, 2);
  EXPECT_EQ(word_stats({}).des, 0);
}

TEST(Words, PatternValidation) {
  EXPECT_THROW(Pattern({}, MatchMode::reduced), InvalidArgument);
  EXPECT_THROW(Pattern({1, 17}, MatchMode::exact), InvalidArgument);
  EXPECT_THROW(Pattern({0, 1}, MatchMode::exact), InvalidArgument);
  try {
    Pattern({1, 3, 1}, MatchMode::reduced);
    FAIL() << "131 is not reduced";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("121"), std::string::npos);
  }
  Pattern exact({1, 3, 1}, MatchMode::exact);
  EXPECT_FALSE(exact.is_reduced());
  Pattern u({2, 3, 4, 1}, MatchMode::reduced);
  EXPECT_EQ(u.descent_positions(), std::vector<int>{3});
  EXPECT_EQ(u.descent_position(), 3);
  EXPECT_EQ(u[1], 2);
  EXPECT_EQ(Pattern({3, 1, 4, 2}, MatchMode::reduced).descent_position(), 0);
}

TEST(Words, MatchesInTheIntroductionExample) {
  Word w = parse_word("31442521337792");
  MatchResult r = match_positions(w, Pattern({2, 1, 3}, MatchMode::reduced));
  EXPECT_EQ(r.count, 3);
  EXPECT_EQ(r.positions, (std::vector<int>{1, 4, 7}));
  MatchResult e = match_positions(w, Pattern({2, 1, 3}, MatchMode::exact));
  EXPECT_EQ(e.positions, std::vector<int>{7});
}

TEST(Words, ReducedMatchTreatsEqualLetters) {
  Pattern u({2, 2, 2, 1}, MatchMode::reduced);
  EXPECT_EQ(match_positions({5, 5, 5, 4, 4, 4, 4, 1}, u).positions, (std::vector<int>{1, 5}));
  EXPECT_TRUE(avoids({5, 5, 6, 4}, u));
}

TEST(Words, ReduceIsIdempotentOverFour) {
  for (int n = 0; n <= 8; ++n)
    for_each_word(4, n, [](const Word& w) { ASSERT_EQ(reduce(reduce(w)), reduce(w)); });
}

TEST(Words, ReductionPreservesMatches) {
  const Pattern patterns[] = {Pattern({2, 1, 3}, MatchMode::reduced), Pattern({1, 1, 2}, MatchMode::reduced),
                              Pattern({2, 3, 1}, MatchMode::reduced)};
  for (int n = 0; n <= 8; ++n)
    for_each_word(4, n, [&](const Word& w) {
      for (const auto& u : patterns)
        ASSERT_EQ(match_positions(w, u).positions, match_positions(reduce(w), u).positions);
    });
}
