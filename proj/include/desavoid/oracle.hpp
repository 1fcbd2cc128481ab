#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "desavoid/algebra.hpp"
#include "desavoid/words.hpp"

namespace desavoid {

enum class ZMode { ones, symbolic };

inline constexpr int kSymbolicMaxAlphabet = 9;
inline constexpr int kSymbolicMaxOrder = 12;
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SeriesRequest {
  Word pattern;
  MatchMode mode = MatchMode::reduced;
  int k = 1;
  int order = 0;
  ZMode zmode = ZMode::ones;
};

struct OracleOptions {
  std::uint64_t budget = kDefaultBudget;
  int threads = 1;
};

// Checks k, order and the symbolic guard rails; builds the Pattern.
Pattern validate_request(const SeriesRequest& req);
int zdim_for(const SeriesRequest& req);

// Exhaustive enumeration of avoiding words. Work budget counts word steps.
TSeries brute_series(const SeriesRequest& req, const OracleOptions& opt = {});
// Window automaton over the last max(j-1,1) letters.
TSeries dp_series(const SeriesRequest& req, const OracleOptions& opt = {});

struct Composition {
  std::vector<int> parts;
};

// Calls f for every composition of n, in lexicographic order of parts.
void for_each_composition(int n, const std::function<void(const Composition&)>& f);

// Sum over compositions of n of (-1)^l prod_i N_{b_i}, with the N_b read
// from an avoidance series of order >= n.
XPoly theta_h(const TSeries& avoiding, int n);
XPoly theta_h(const SeriesRequest& req, int n, const OracleOptions& opt = {});

struct FixedPoint {
  Composition composition;
  Word word;
};

// Enumerates fixed points of the brick involution on words of length n:
// bricks weakly increasing with no match inside a brick, and every
// decreasing brick boundary covered by a match lying inside the two bricks.
// Needs des(u) <= 1. The budget bounds visited search nodes.
void for_each_fixed_point(const SeriesRequest& req, int n,
                          const std::function<void(const FixedPoint&)>& f,
                          std::uint64_t budget = kDefaultBudget);
// Sum over fixed points of (-1)^l x^l z^w.
XPoly fixed_point_sum(const SeriesRequest& req, int n, std::uint64_t budget = kDefaultBudget);
std::uint64_t fixed_point_count(const SeriesRequest& req, int n,
                                std::uint64_t budget = kDefaultBudget);

}  // namespace desavoid
