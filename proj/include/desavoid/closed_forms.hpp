#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "desavoid/algebra.hpp"
#include "desavoid/clusters.hpp"
#include "desavoid/oracle.hpp"
#include "desavoid/report.hpp"

namespace desavoid {

// Values for the formal variables x_ab, y and z_1..z_k of the masters.
struct XAssignment {
  int k = 0;
  int order = 0;
  int zdim = 0;
  std::map<LetterPair, TSeries> x;
  XPoly y;
  std::vector<XPoly> z;  // z[i-1] is z_i

  const TSeries& x_at(int a, int b) const;
  // y := 1-x, x := table entries, z := z_i (symbolic) or 1.
  static XAssignment from_table(const WeightTable& table);
};

enum class SubsetTerm { dxyz, rxyz, wdxyz, level };

// How the sums over subsets and weakly decreasing words are formed: chained
// recurrences by default, literal enumeration as a cross-check.
enum class Summation { recurrence, enumeration };

// A master returned as numerator / denominator, plus the inner sum.
struct MasterParts {
  TSeries numerator, denominator, inner;

  TSeries value() const { return numerator * denominator.reciprocal(); }
  TSeries inverse() const { return denominator * numerator.reciprocal(); }
};

// [1 - (x+y) D] / [1 - y D], D = sum_S t^|S| DXYZ(S).
MasterParts master_des(const XAssignment& A, Summation how = Summation::recurrence);
// 1 - x sum_S t^|S| RXYZ(S).
TSeries master_ris(const XAssignment& A, Summation how = Summation::recurrence);
// 1 - x (prod_i (1 + y z_i t/(1 - x_ii z_i t)) - 1)/y.
TSeries master_lev(const XAssignment& A, Summation how = Summation::recurrence);
// [1 - (x+y) W] / [1 - y W], W over weakly decreasing words.
MasterParts master_wdes(const XAssignment& A, Summation how = Summation::recurrence);

// The avoidance series from the collapse weights.
TSeries closed_series(const SeriesRequest& req);
TSeries closed_series(const SeriesRequest& req, const WeightTable& table);

// 2^s 1 over [k] with z = 1, as the binomial sum with x_ji - y = -x t^(s-1) + x - 1.
TSeries binomial_two_power_one(int s, int k, int order);
// For u = 2 alpha 1 in exact mode over [k]: the product form with W.
TSeries exact_two_alpha_one(const Word& alpha, int k, int order, ZMode zmode);
// Level case factors 1 + (1-x) z_i t / (1 - wt(ii) z_i t), z = 1.
std::vector<TSeries> level_factors(const WeightTable& table);

enum class IdentityKind { des, ris, lev, wdes };
const char* to_string(IdentityKind kind);

// Random rational assignments of x_ab, y and z_i; brute-summed word side
// against the master. Needs k <= 5 and N <= 8.
VerifyReport identity_check(IdentityKind which, int k, int order, int trials, std::uint64_t seed);
// The word side alone, for a fixed assignment.
TSeries identity_word_side(IdentityKind which, const XAssignment& A);
TSeries identity_master_side(IdentityKind which, const XAssignment& A,
                             Summation how = Summation::recurrence);

}  // namespace desavoid
