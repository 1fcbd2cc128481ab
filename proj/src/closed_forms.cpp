#include "desavoid/closed_forms.hpp"

#include "desavoid/error.hpp"

namespace desavoid {

TSeries closed_series(const SeriesRequest& req) {
  return closed_series(req, weight_table(req));
}

TSeries closed_series(const SeriesRequest& req, const WeightTable& table) {
  validate_request(req);
  XAssignment A = XAssignment::from_table(table);
  const TSeries x = TSeries::term(XPoly::monomial(1, 1, table.zdim), 0, table.order);
  switch (table.closed_case) {
    case ClosedCase::descent:
    case ClosedCase::weak_descent: {
      MasterParts p = table.closed_case == ClosedCase::descent ? master_des(A) : master_wdes(A);
      // numerator = denominator - x * inner, by construction
      if (!(p.numerator + x * p.inner == p.denominator))
        throw Error("master numerator and denominator are inconsistent");
      return p.inverse();
    }
    case ClosedCase::rise: return master_ris(A).reciprocal();
    case ClosedCase::level: return master_lev(A).reciprocal();
    default: break;
  }
  throw UnsupportedClass("closed case", "weight table carries no supported case");
}

TSeries binomial_two_power_one(int s, int k, int order) {
  if (s < 1 || k < 1 || order < 0) throw InvalidArgument("binomial form needs s, k >= 1");
  const XPoly one = XPoly::constant(1);
  const XPoly x = XPoly::monomial(1, 1);
  // base = -x t^(s-1) + x - 1
  TSeries base = TSeries::constant(x - one, order) - TSeries::term(x, s - 1, order);
  TSeries P(order, 0);
  TSeries power = TSeries::one(order);
  mpz_class binom = 1;
  for (int n = 1; n <= k; ++n) {
    binom = binom * (k - n + 1) / n;
    P += (power * XPoly::constant(Rational(binom))).times_t(n);
    power = power * base;
  }
  TSeries num = TSeries::one(order) - P * XPoly::one_minus_x();
  TSeries den = TSeries::one(order) - P;
  return num * den.reciprocal();
}

TSeries exact_two_alpha_one(const Word& alpha, int k, int order, ZMode zmode) {
  if (alpha.empty()) throw InvalidArgument("alpha must be nonempty");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 2 || alpha[i] > k) throw InvalidArgument("alpha letters must lie in [2,k]");
    if (i && alpha[i] < alpha[i - 1]) throw InvalidArgument("alpha must be weakly increasing");
  }
  const int zdim = zmode == ZMode::symbolic ? k : 0;
  auto z = [&](int i) { return zdim ? XPoly::z_var(i, zdim) : XPoly::constant(1); };
  const XPoly omx = XPoly::one_minus_x(zdim);
  const XPoly x = XPoly::monomial(1, 1, zdim);
  auto damp = [&](int i) { return TSeries::term(omx * z(i), 1, order).geom(); };

  TSeries W = TSeries::one(order, zdim);
  for (int i = 1; i <= k; ++i) W = W * damp(i);
  XPoly top = x * z(1) * z(2) * omx;
  for (int a : alpha) top = top * z(a);
  TSeries E = TSeries::term(top, 2 + static_cast<int>(alpha.size()), order) * damp(1) * damp(2);
  // EN = (1-x) / (1 - x W / (1+E)); the denominator is (1-x) times a unit
  TSeries V = TSeries::one(order, zdim) - W * (TSeries::one(order, zdim) + E).reciprocal() * x;
  return V.divide_exact_by_one_minus_x().reciprocal();
}

std::vector<TSeries> level_factors(const WeightTable& table) {
  if (table.closed_case != ClosedCase::level) throw InvalidArgument("level factors need a level table");
  std::vector<TSeries> out;
  const XPoly omx = XPoly::one_minus_x(table.zdim);
  for (int i = 1; i <= table.k; ++i) {
    XPoly zi = table.zdim ? XPoly::z_var(i, table.zdim) : XPoly::constant(1);
    TSeries zt = TSeries::term(zi, 1, table.order);
    out.push_back(TSeries::one(table.order, table.zdim) + zt * omx * (table.at(i, i) * zt).geom());
  }
  return out;
}

}  // namespace desavoid
