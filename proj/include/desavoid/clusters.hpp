#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "desavoid/algebra.hpp"
#include "desavoid/oracle.hpp"
#include "desavoid/overlap.hpp"

namespace desavoid {

// A word that starts and ends with a match, consecutive matches linked
// (sharing at least two letters), descents exactly at the match descents.
struct Cluster {
  Word word;
  std::vector<int> starts;  // 1-based match starts

  int matches() const { return static_cast<int>(starts.size()); }
  int removed() const { return static_cast<int>(word.size()) - 2; }
};

// Every cluster with m - 2 <= removed_budget. a or b of 0 leaves that end free.
void for_each_cluster(const Pattern& u, int k, int removed_budget,
                      const std::function<void(const Cluster&)>& f, int a = 0, int b = 0);
std::vector<Cluster> enumerate_clusters(const Pattern& u, int k, int a, int b, int removed_budget);

using LetterPair = std::pair<int, int>;

struct WeightTable {
  ClosedCase closed_case = ClosedCase::unsupported;
  int k = 0;
  int order = 0;
  int zdim = 0;
  std::map<LetterPair, TSeries> entries;

  const TSeries& at(int a, int b) const;
};

// entry(a,b) = base + sum over clusters of (-x)^r t^(m-2) prod interior z.
// base is 1-x on rise and level pairs and 0 on strict descents. Throws
// UnsupportedClass outside the descent, rise, level and weak-descent cases.
WeightTable weight_table(const SeriesRequest& req, int removed_budget = -1);

// Pairs the closed case needs, in canonical order.
std::vector<LetterPair> case_pairs(ClosedCase c, int k);

}  // namespace desavoid
