#include "desavoid/overlap.hpp"

#include "desavoid/error.hpp"

namespace desavoid {

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

struct WitnessSearch {
  const Word& u;
  int s, k, len, j;
  Word w;

  bool consistent(int i, int c) const {
    // windows start at 0 and s-1
    for (int start : {0, s - 1}) {
      int o = i - start;
      if (o < 0 || o >= j) continue;
      for (int q = 0; q < o; ++q)
        if (sign(c - w[start + q]) != sign(u[o] - u[q])) return false;
    }
    return true;
  }

  bool run(int i) {
    if (i == len) return true;
    for (int c = 1; c <= k; ++c) {
      if (!consistent(i, c)) continue;
      w[i] = c;
      if (run(i + 1)) return true;
    }
    return false;
  }
};

bool all_relate(const Word& u, const std::vector<int>& set, auto pred) {
  for (int s : set)
    if (!pred(u[0], u[s - 1])) return false;
  return true;
}

}  // namespace

Alphabet Alphabet::of(int k) {
  if (k < 1 || k > kMaxAlphabet)
    throw InvalidArgument("alphabet size must lie in [1," + std::to_string(kMaxAlphabet) + "]");
  return {true, k};
}

const char* to_string(EndpointRelation r) {
  switch (r) {
    case EndpointRelation::greater: return "u1>uj";
    case EndpointRelation::less: return "u1<uj";
    case EndpointRelation::equal: return "u1=uj";
  }
  return "?";
}

const char* to_string(ClosedCase c) {
  switch (c) {
    case ClosedCase::descent: return "descent";
    case ClosedCase::rise: return "rise";
    case ClosedCase::level: return "level";
    case ClosedCase::weak_descent: return "weak_descent";
    case ClosedCase::des0: return "des0";
    case ClosedCase::unsupported: return "unsupported";
  }
  return "?";
}

bool overlap_witness(const Word& u, int s, int k, Word* witness) {
  const int j = static_cast<int>(u.size());
  WitnessSearch search{u, s, k, s + j - 1, j, Word(static_cast<std::size_t>(s + j - 1), 0)};
  bool found = search.run(0);
  if (found && witness) *witness = search.w;
  return found;
}

std::vector<int> overlap_set(const Word& u, Alphabet a) {
  const int j = static_cast<int>(u.size());
  if (j < 2) throw InvalidArgument("overlap sets need |u| >= 2");
  if (!is_reduced(u)) throw InvalidArgument("overlap_set needs a reduced word");
  std::vector<int> out;
  for (int s = 2; s <= j; ++s) {
    int k = a.bounded ? a.k : s + j - 1;
    if (overlap_witness(u, s, k)) out.push_back(s);
  }
  return out;
}

std::vector<int> exact_overlap_set(const Word& u) {
  const int j = static_cast<int>(u.size());
  std::vector<int> out;
  for (int s = 2; s <= j; ++s) {
    bool border = true;
    for (int p = s; p <= j && border; ++p) border = u[p - 1] == u[p - s];
    if (border) out.push_back(s);
  }
  return out;
}

PatternClass classify_pattern(const Pattern& u, Alphabet a) {
  PatternClass pc;
  const Word& w = u.word();
  const int j = u.length();
  pc.descent_count = u.descent_count();
  pc.mode = u.mode();
  pc.alphabet = a;
  pc.endpoint = w.front() > w.back()   ? EndpointRelation::greater
                : w.front() < w.back() ? EndpointRelation::less
                                       : EndpointRelation::equal;
  if (j >= 2) {
    Word r = reduce(w);
    pc.st_set = overlap_set(r, a);
    pc.st_unbounded = overlap_set(r, Alphabet::unbounded());
    pc.est_set = exact_overlap_set(w);
  }
  const auto& active = u.mode() == MatchMode::exact ? pc.est_set : pc.st_set;
  pc.minimal_overlapping = active.size() == 1 && active[0] == j;
  pc.non_overlapping = active.empty();
  pc.weakly_increasing = all_relate(w, active, [](int a1, int as) { return a1 <= as; });
  pc.weakly_decreasing = all_relate(w, active, [](int a1, int as) { return a1 >= as; });
  pc.level = all_relate(w, active, [](int a1, int as) { return a1 == as; });

  if (pc.descent_count == 0) {
    pc.closed_case = ClosedCase::des0;
  } else if (pc.descent_count >= 2) {
    pc.closed_case = ClosedCase::unsupported;
    pc.failing_property = "des(u) <= 1";
  } else if (pc.endpoint == EndpointRelation::greater) {
    pc.closed_case = ClosedCase::descent;
  } else if (pc.endpoint == EndpointRelation::less) {
    if (pc.weakly_increasing) {
      pc.closed_case = ClosedCase::rise;
    } else {
      pc.closed_case = ClosedCase::unsupported;
      pc.failing_property = "weakly increasing overlapping property";
    }
  } else if (pc.level) {
    pc.closed_case = ClosedCase::level;
  } else if (pc.weakly_decreasing) {
    pc.closed_case = ClosedCase::weak_descent;
  } else {
    pc.closed_case = ClosedCase::unsupported;
    pc.failing_property = "weakly decreasing overlapping property";
  }
  return pc;
}

}  // namespace desavoid
