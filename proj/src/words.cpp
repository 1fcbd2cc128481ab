#include "desavoid/words.hpp"

#include <algorithm>
#include <charconv>

#include "desavoid/error.hpp"

namespace desavoid {

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw InvalidArgument("bad letter '" + std::string(s) + "'");
  return v;
}

int sign(int v) { return (v > 0) - (v < 0); }

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      w.push_back(parse_int(text.substr(start, end - start)));
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw InvalidArgument(std::string("bad letter '") + c + "'");
      w.push_back(c - '0');
    }
  }
  for (int a : w)
    if (a < 1) throw InvalidArgument("letters must be >= 1");
  return w;
}

std::string format_word(const Word& w) {
  bool compact = std::all_of(w.begin(), w.end(), [](int a) { return a <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Word reduce(const Word& w) {
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Word out;
  out.reserve(w.size());
  for (int a : w) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), a);
    out.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return out;
}

bool is_reduced(const Word& w) { return reduce(w) == w; }

int max_letter(const Word& w) {
  return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

StatRecord word_stats(const Word& w) {
  StatRecord r;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    int pos = static_cast<int>(i) + 1;
    if (w[i] > w[i + 1]) {
      r.des_set.push_back(pos);
      r.wdes_set.push_back(pos);
    } else if (w[i] < w[i + 1]) {
      r.rise_set.push_back(pos);
      r.wrise_set.push_back(pos);
    } else {
      r.lev_set.push_back(pos);
      r.wdes_set.push_back(pos);
      r.wrise_set.push_back(pos);
    }
  }
  r.des = static_cast<int>(r.des_set.size());
  r.wdes = static_cast<int>(r.wdes_set.size());
  r.ris = static_cast<int>(r.rise_set.size());
  r.wris = static_cast<int>(r.wrise_set.size());
  r.lev = static_cast<int>(r.lev_set.size());
  return r;
}

Pattern::Pattern(Word letters, MatchMode mode) : word_(std::move(letters)), mode_(mode) {
  if (word_.empty()) throw InvalidArgument("pattern must be nonempty");
  for (int a : word_)
    if (a < 1 || a > kMaxAlphabet)
      throw InvalidArgument("pattern letters must lie in [1," + std::to_string(kMaxAlphabet) + "]");
  reduced_ = desavoid::is_reduced(word_);
  if (mode_ == MatchMode::reduced && !reduced_)
    throw InvalidArgument("pattern " + format_word(word_) +
                          " is not reduced; use " + format_word(reduce(word_)) +
                          " or exact mode");
  descents_ = word_stats(word_).des_set;
}

bool Pattern::matches_window(const int* w) const {
  const int j = length();
  if (mode_ == MatchMode::exact) {
    for (int p = 0; p < j; ++p)
      if (w[p] != word_[p]) return false;
    return true;
  }
  for (int p = 0; p < j; ++p)
    for (int q = p + 1; q < j; ++q)
      if (sign(w[p] - w[q]) != sign(word_[p] - word_[q])) return false;
  return true;
}

MatchResult match_positions(const Word& w, const Pattern& u) {
  MatchResult r;
  const int j = u.length();
  for (int i = 0; i + j <= static_cast<int>(w.size()); ++i)
    if (u.matches_window(w.data() + i)) r.positions.push_back(i + 1);
  r.count = static_cast<int>(r.positions.size());
  return r;
}

bool avoids(const Word& w, const Pattern& u) {
  const int j = u.length();
  for (int i = 0; i + j <= static_cast<int>(w.size()); ++i)
    if (u.matches_window(w.data() + i)) return false;
  return true;
}

}  // namespace desavoid
