#include <random>

#include "desavoid/closed_forms.hpp"
#include "desavoid/error.hpp"

namespace desavoid {

namespace {

Rational constant_of(const XPoly& p, const char* what) {
  if (p.is_zero()) return 0;
  if (p.zdim() != 0 || p.terms().size() != 1 || p.terms()[0].m.x != 0)
    throw InvalidArgument(std::string("word side needs rational ") + what);
  return p.terms()[0].c;
}

// Rational p/q with p in [-4,4] and q in [1,4]. Plain modular draws keep
// the stream identical across standard libraries.
Rational draw(std::mt19937_64& rng) {
  long p = static_cast<long>(rng() % 9) - 4;
  long q = static_cast<long>(rng() % 4) + 1;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

struct WordSum {
  IdentityKind which;
  int k, N;
  std::vector<std::vector<Rational>> x;  // x[a][b]
  Rational y;
  std::vector<Rational> z;
  std::vector<Rational> sums;

  // weight of appending c after a
  Rational step(int a, int c) const {
    switch (which) {
      case IdentityKind::des: return a > c ? x[a][c] : y;
      case IdentityKind::wdes: return a >= c ? x[a][c] : y;
      case IdentityKind::ris: return a < c ? x[a][c] : y;
      case IdentityKind::lev: return a == c ? x[a][c] : y;
    }
    return 0;
  }

  bool increasing_only() const {
    return which == IdentityKind::ris || which == IdentityKind::lev;
  }

  void walk(int n, int last, const Rational& weight) {
    sums[n] += weight;
    if (n == N) return;
    for (int c = increasing_only() ? last : 1; c <= k; ++c)
      walk(n + 1, c, weight * step(last, c) * z[c]);
  }
};

}  // namespace

const char* to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::des: return "des";
    case IdentityKind::ris: return "ris";
    case IdentityKind::lev: return "lev";
    case IdentityKind::wdes: return "wdes";
  }
  return "?";
}

TSeries identity_word_side(IdentityKind which, const XAssignment& A) {
  WordSum ws{which, A.k, A.order, {}, constant_of(A.y, "y"), {}, {}};
  ws.x.assign(static_cast<std::size_t>(A.k) + 1, std::vector<Rational>(static_cast<std::size_t>(A.k) + 1));
  for (const auto& [pair, series] : A.x) {
    for (int n = 1; n <= series.order(); ++n)
      if (!series[n].is_zero()) throw InvalidArgument("word side needs constant x_ab");
    ws.x[pair.first][pair.second] = constant_of(series[0], "x_ab");
  }
  ws.z.push_back(0);
  for (const auto& zi : A.z) ws.z.push_back(constant_of(zi, "z_i"));
  ws.sums.assign(static_cast<std::size_t>(A.order) + 1, 0);
  for (int c = 1; c <= A.k && A.order >= 1; ++c) ws.walk(1, c, ws.z[c]);

  // 1 - x sum_{n>=1} S_n t^n
  TSeries out = TSeries::one(A.order);
  for (int n = 1; n <= A.order; ++n) out.at(n) = XPoly::monomial(-ws.sums[n], 1);
  return out;
}

TSeries identity_master_side(IdentityKind which, const XAssignment& A, Summation how) {
  switch (which) {
    case IdentityKind::des: return master_des(A, how).value();
    case IdentityKind::ris: return master_ris(A, how);
    case IdentityKind::lev: return master_lev(A, how);
    case IdentityKind::wdes: return master_wdes(A, how).value();
  }
  throw InvalidArgument("unknown identity");
}

VerifyReport identity_check(IdentityKind which, int k, int order, int trials, std::uint64_t seed) {
  if (k < 1 || k > 5) throw InvalidArgument("identity_check needs 1 <= k <= 5");
  if (order < 0 || order > 8) throw InvalidArgument("identity_check needs 0 <= N <= 8");
  if (trials < 0) throw InvalidArgument("trials must be >= 0");
  VerifyReport report;
  report.order = order;
  report.methods = {"words", "master", "master-enumerated"};
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    XAssignment A;
    A.k = k;
    A.order = order;
    for (int a = 1; a <= k; ++a)
      for (int b = 1; b <= k; ++b)
        A.x.emplace(LetterPair{a, b}, TSeries::constant(XPoly::constant(draw(rng)), order));
    A.y = XPoly::constant(draw(rng));
    for (int i = 1; i <= k; ++i) A.z.push_back(XPoly::constant(draw(rng)));

    TSeries lhs = identity_word_side(which, A);
    VerifyReport one;
    const std::string tag = " (trial " + std::to_string(trial) + ")";
    compare_into(one, lhs, "words" + tag, identity_master_side(which, A), "master" + tag);
    compare_into(one, lhs, "words" + tag,
                 identity_master_side(which, A, Summation::enumeration), "master-enumerated" + tag);
    if (!one.agree) {
      report.agree = false;
      if (!report.first_mismatch) report.first_mismatch = one.first_mismatch;
    }
  }
  return report;
}

}  // namespace desavoid
