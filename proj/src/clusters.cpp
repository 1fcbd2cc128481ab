#include "desavoid/clusters.hpp"

#include "desavoid/error.hpp"

namespace desavoid {

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

struct ClusterSearch {
  const Pattern& u;
  int k, a, b;
  const std::function<void(const Cluster&)>& f;
  Cluster c;
  std::vector<std::vector<int>> covering;  // 0-based window starts covering each position

  bool fits(int i, int letter) const {
    const int j = u.length();
    const Word& pat = u.word();
    for (int p : covering[i]) {
      int o = i - p;
      if (u.mode() == MatchMode::exact) {
        if (letter != pat[o]) return false;
        continue;
      }
      for (int q = 0; q < o; ++q)
        if (sign(letter - c.word[p + q]) != sign(pat[o] - pat[q])) return false;
    }
    (void)j;
    return true;
  }

  void assign(int i) {
    const int m = static_cast<int>(c.word.size());
    if (i == m) {
      f(c);
      return;
    }
    int lo = 1, hi = k;
    if (i == 0 && a) lo = hi = a;
    if (i == m - 1 && b) lo = hi = b;
    for (int letter = lo; letter <= hi; ++letter) {
      if (!fits(i, letter)) continue;
      c.word[i] = letter;
      assign(i + 1);
    }
  }

  void with_starts() {
    const int j = u.length();
    const int m = c.starts.back() + j - 1;
    c.word.assign(static_cast<std::size_t>(m), 0);
    covering.assign(static_cast<std::size_t>(m), {});
    for (int s : c.starts)
      for (int p = s - 1; p < s - 1 + j; ++p) covering[p].push_back(s - 1);
    assign(0);
  }

  // start sequences with gaps in [1, j-2] and m - 2 <= budget
  void starts(int budget) {
    const int j = u.length();
    with_starts();
    for (int g = 1; g <= j - 2; ++g) {
      int next = c.starts.back() + g;
      if (next + j - 1 - 2 > budget) break;
      c.starts.push_back(next);
      starts(budget);
      c.starts.pop_back();
    }
  }
};

bool pair_in_case(ClosedCase cc, int a, int b) {
  switch (cc) {
    case ClosedCase::descent: return a > b;
    case ClosedCase::rise: return a < b;
    case ClosedCase::level: return a == b;
    case ClosedCase::weak_descent: return a >= b;
    default: return false;
  }
}

}  // namespace

void for_each_cluster(const Pattern& u, int k, int removed_budget,
                      const std::function<void(const Cluster&)>& f, int a, int b) {
  if (u.descent_count() != 1)
    throw UnsupportedClass("des(u) = 1", "clusters are defined for patterns with exactly one descent");
  const int j = u.length();
  if (removed_budget < j - 2) return;
  ClusterSearch search{u, k, a, b, f, {}, {}};
  search.c.starts = {1};
  search.starts(removed_budget);
}

std::vector<Cluster> enumerate_clusters(const Pattern& u, int k, int a, int b, int removed_budget) {
  std::vector<Cluster> out;
  for_each_cluster(u, k, removed_budget, [&](const Cluster& c) { out.push_back(c); }, a, b);
  return out;
}

const TSeries& WeightTable::at(int a, int b) const {
  auto it = entries.find({a, b});
  if (it == entries.end())
    throw InvalidArgument("weight table has no entry (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return it->second;
}

std::vector<LetterPair> case_pairs(ClosedCase c, int k) {
  std::vector<LetterPair> out;
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b)
      if (pair_in_case(c, a, b)) out.push_back({a, b});
  return out;
}

WeightTable weight_table(const SeriesRequest& req, int removed_budget) {
  Pattern u = validate_request(req);
  PatternClass pc = classify_pattern(u, Alphabet::of(req.k));
  switch (pc.closed_case) {
    case ClosedCase::des0:
      throw UnsupportedClass("des(u) = 1", "patterns without descents have no collapse weights");
    case ClosedCase::unsupported:
      throw UnsupportedClass(pc.failing_property,
                             "pattern " + format_word(u.word()) + " lacks the " + pc.failing_property);
    default: break;
  }
  const int zdim = zdim_for(req);
  const int N = req.order;
  if (removed_budget < 0) removed_budget = N;

  WeightTable table;
  table.closed_case = pc.closed_case;
  table.k = req.k;
  table.order = N;
  table.zdim = zdim;
  for (auto [a, b] : case_pairs(pc.closed_case, req.k)) {
    XPoly base = (a == b || a < b) ? XPoly::one_minus_x(zdim) : XPoly(zdim);
    table.entries.emplace(LetterPair{a, b}, TSeries::constant(base, N));
  }

  for_each_cluster(u, req.k, removed_budget, [&](const Cluster& c) {
    const int a = c.word.front(), b = c.word.back();
    if (!pair_in_case(pc.closed_case, a, b))
      throw Error("cluster " + format_word(c.word) + " breaks the " +
                  std::string(to_string(pc.closed_case)) + " endpoint relation");
    const int m = static_cast<int>(c.word.size());
    if (m - 2 > N) return;
    Monomial mono;
    mono.x = static_cast<unsigned>(c.matches());
    mono.z.assign(static_cast<std::size_t>(zdim), 0);
    if (zdim)
      for (int i = 1; i + 1 < m; ++i) ++mono.z[c.word[i] - 1];
    Rational coeff = c.matches() % 2 ? -1 : 1;
    table.entries.at({a, b}).at(m - 2) += XPoly::monomial(coeff, std::move(mono), zdim);
  });
  return table;
}

}  // namespace desavoid
