#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace desavoid {

// Letters are positive integers. The empty word is allowed everywhere.
using Word = std::vector<int>;

inline constexpr int kMaxAlphabet = 16;

enum class MatchMode { reduced, exact };

// Positions are 1-based, i in {1..n-1} compares w_i with w_{i+1}.
struct StatRecord {
  std::vector<int> des_set, wdes_set, rise_set, wrise_set, lev_set;
  int des = 0, wdes = 0, ris = 0, wris = 0, lev = 0;
};

Word parse_word(std::string_view text);
std::string format_word(const Word& w);

Word reduce(const Word& w);
bool is_reduced(const Word& w);
StatRecord word_stats(const Word& w);
int max_letter(const Word& w);

class Pattern {
 public:
  // Throws InvalidArgument for an empty word, letters < 1 or > kMaxAlphabet,
  // or a non-reduced word in reduced mode.
  Pattern(Word letters, MatchMode mode);

  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  MatchMode mode() const { return mode_; }
  int operator[](int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& descent_positions() const { return descents_; }
  int descent_count() const { return static_cast<int>(descents_.size()); }
  // The unique descent position s, or 0 when des(u) != 1.
  int descent_position() const { return descents_.size() == 1 ? descents_[0] : 0; }
  bool is_reduced() const { return reduced_; }

  // Does w[0..j) match u? Reduced mode compares relative order of every
  // pair, exact mode compares letters.
  bool matches_window(const int* w) const;

 private:
  Word word_;
  MatchMode mode_;
  std::vector<int> descents_;
  bool reduced_ = false;
};

struct MatchResult {
  std::vector<int> positions;
  int count = 0;
};

MatchResult match_positions(const Word& w, const Pattern& u);
bool avoids(const Word& w, const Pattern& u);

}  // namespace desavoid
