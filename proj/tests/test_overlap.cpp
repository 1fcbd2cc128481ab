#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "desavoid/error.hpp"
#include "desavoid/overlap.hpp"

using namespace desavoid;

namespace {

using Set = std::vector<int>;

// Every reduced word of length j: restricted growth over value sets.
void for_each_reduced(int j, const std::function<void(const Word&)>& f) {
  Word w(static_cast<std::size_t>(j));
  std::function<void(int)> rec = [&](int i) {
    if (i == j) {
      if (is_reduced(w)) f(w);
      return;
    }
    for (int c = 1; c <= j; ++c) {
      w[static_cast<std::size_t>(i)] = c;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

TEST(Overlap, IntroductionExample123234) {
  const Word u{1, 2, 3, 2, 3, 4};
  EXPECT_EQ(overlap_set(u, Alphabet::of(4)), Set{});
  EXPECT_EQ(overlap_set(u, Alphabet::of(5)), Set{4});
  EXPECT_EQ(overlap_set(u, Alphabet::of(6)), (Set{4, 5}));
  EXPECT_EQ(overlap_set(u, Alphabet::of(7)), (Set{4, 5, 6}));
  EXPECT_EQ(overlap_set(u, Alphabet::unbounded()), (Set{4, 5, 6}));
}

TEST(Overlap, IntroductionExample345123) {
  const Word v{3, 4, 5, 1, 2, 3};
  EXPECT_EQ(overlap_set(v, Alphabet::of(5)), Set{6});
  EXPECT_EQ(overlap_set(v, Alphabet::of(6)), (Set{5, 6}));
  EXPECT_EQ(overlap_set(v, Alphabet::unbounded()), (Set{4, 5, 6}));
  PatternClass pc = classify_pattern(Pattern(v, MatchMode::reduced), Alphabet::of(5));
  EXPECT_TRUE(pc.minimal_overlapping);
  EXPECT_TRUE(pc.weakly_increasing);
  EXPECT_TRUE(pc.weakly_decreasing);
  EXPECT_TRUE(pc.level);
  PatternClass pp = classify_pattern(Pattern(v, MatchMode::reduced), Alphabet::unbounded());
  EXPECT_TRUE(pp.weakly_decreasing);
  EXPECT_FALSE(pp.weakly_increasing);
}

TEST(Overlap, PrintedWitnessesAreWitnesses) {
  const Pattern u({1, 2, 3, 2, 3, 4}, MatchMode::reduced);
  for (const char* w : {"123234345", "1232345456", "12323456567"}) {
    Word word = parse_word(w);
    MatchResult r = match_positions(word, u);
    ASSERT_GE(r.count, 2) << w;
    EXPECT_EQ(r.positions.front(), 1);
    EXPECT_EQ(r.positions.back(), static_cast<int>(word.size()) - 5);
  }
  Word witness;
  ASSERT_TRUE(overlap_witness({1, 2, 3, 2, 3, 4}, 5, 6, &witness));
  EXPECT_EQ(witness.size(), 10u);
  EXPECT_GE(match_positions(witness, u).count, 2);
  EXPECT_FALSE(overlap_witness({1, 2, 3, 2, 3, 4}, 5, 5));
}

TEST(Overlap, ExactSets) {
  EXPECT_EQ(exact_overlap_set({1, 3, 1}), Set{3});
  EXPECT_EQ(exact_overlap_set({1, 3, 2}), Set{});
  EXPECT_EQ(exact_overlap_set({1, 1, 2, 1, 1}), (Set{4, 5}));
  EXPECT_EQ(exact_overlap_set({1, 1, 1}), (Set{2, 3}));
}

TEST(Overlap, RejectsNonReduced) {
  EXPECT_THROW(overlap_set({1, 3, 1}, Alphabet::unbounded()), InvalidArgument);
  EXPECT_THROW(overlap_set({1}, Alphabet::unbounded()), InvalidArgument);
  EXPECT_THROW(Alphabet::of(0), InvalidArgument);
  EXPECT_THROW(Alphabet::of(17), InvalidArgument);
}

TEST(Overlap, StabilizesAtTwoJMinusOne) {
  for (int j = 2; j <= 5; ++j)
    for_each_reduced(j, [j](const Word& u) {
      Set p = overlap_set(u, Alphabet::unbounded());
      ASSERT_EQ(overlap_set(u, Alphabet::of(2 * j - 1)), p) << format_word(u);
      ASSERT_EQ(overlap_set(u, Alphabet::of(std::min(2 * j + 2, kMaxAlphabet))), p) << format_word(u);
    });
}

TEST(Overlap, MonotoneInTheAlphabet) {
  for (int j = 2; j <= 6; ++j)
    for_each_reduced(j, [j](const Word& u) {
      Set prev;
      for (int k = max_letter(u); k <= 2 * j - 1; ++k) {
        Set cur = overlap_set(u, Alphabet::of(k));
        ASSERT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) << format_word(u);
        prev = cur;
      }
      Set p = overlap_set(u, Alphabet::unbounded());
      ASSERT_TRUE(std::includes(p.begin(), p.end(), prev.begin(), prev.end()));
    });
}

TEST(Overlap, ExactInsideReduced) {
  for (int j = 2; j <= 5; ++j)
    for_each_reduced(j, [](const Word& u) {
      Set e = exact_overlap_set(u);
      Set p = overlap_set(u, Alphabet::unbounded());
      ASSERT_TRUE(std::includes(p.begin(), p.end(), e.begin(), e.end())) << format_word(u);
    });
}

TEST(Classify, ClosedCases) {
  auto cls = [](const Word& w, MatchMode m, Alphabet a) { return classify_pattern(Pattern(w, m), a); };
  const Alphabet P = Alphabet::unbounded();
  EXPECT_EQ(cls({2, 3, 4, 1}, MatchMode::reduced, P).closed_case, ClosedCase::descent);
  EXPECT_EQ(cls({3, 4, 1, 2}, MatchMode::reduced, P).closed_case, ClosedCase::descent);
  EXPECT_EQ(cls({2, 2, 2, 1}, MatchMode::reduced, P).closed_case, ClosedCase::descent);
  EXPECT_EQ(cls({1, 2, 4, 3, 3}, MatchMode::exact, P).closed_case, ClosedCase::rise);
  EXPECT_EQ(cls({1, 2, 4, 3, 3}, MatchMode::reduced, Alphabet::of(9)).closed_case, ClosedCase::rise);
  EXPECT_EQ(cls({1, 1, 1, 2, 4, 3, 3, 3}, MatchMode::reduced, Alphabet::of(7)).closed_case, ClosedCase::rise);
  EXPECT_EQ(cls({1, 2, 3, 1, 1}, MatchMode::reduced, Alphabet::of(7)).closed_case, ClosedCase::level);
  EXPECT_EQ(cls({1, 1, 2, 1, 1}, MatchMode::reduced, Alphabet::of(4)).closed_case, ClosedCase::level);
  EXPECT_EQ(cls({2, 3, 1, 2}, MatchMode::reduced, Alphabet::of(4)).closed_case, ClosedCase::weak_descent);
  EXPECT_EQ(cls({1, 3, 1}, MatchMode::exact, P).closed_case, ClosedCase::level);
  EXPECT_EQ(cls({1, 3, 2}, MatchMode::exact, P).closed_case, ClosedCase::rise);
  EXPECT_EQ(cls({1, 2, 3}, MatchMode::reduced, P).closed_case, ClosedCase::des0);

  PatternClass two = cls({3, 1, 4, 2}, MatchMode::reduced, P);
  EXPECT_EQ(two.closed_case, ClosedCase::unsupported);
  EXPECT_EQ(two.failing_property, "des(u) <= 1");

  // the second 2413-match can start on the 1 of the first
  PatternClass rise = cls({2, 4, 1, 3}, MatchMode::reduced, P);
  EXPECT_EQ(rise.endpoint, EndpointRelation::less);
  EXPECT_EQ(rise.closed_case, ClosedCase::unsupported);
  EXPECT_EQ(rise.failing_property, "weakly increasing overlapping property");
}

TEST(Classify, FlagsFollowTheMode) {
  PatternClass r = classify_pattern(Pattern({1, 3, 2}, MatchMode::exact), Alphabet::unbounded());
  EXPECT_TRUE(r.non_overlapping);
  EXPECT_EQ(r.est_set, Set{});
  PatternClass m = classify_pattern(Pattern({1, 3, 1}, MatchMode::exact), Alphabet::unbounded());
  EXPECT_TRUE(m.minimal_overlapping);
  EXPECT_EQ(m.est_set, Set{3});
  EXPECT_EQ(m.st_unbounded, Set{3});
}
