#include "desavoid/verify.hpp"

#include "desavoid/closed_forms.hpp"
#include "desavoid/error.hpp"
#include "desavoid/fixtures.hpp"

namespace desavoid {

TSeries reciprocity_series(const SeriesRequest& req, const OracleOptions& opt) {
  validate_request(req);
  const int zdim = zdim_for(req);
  TSeries U = TSeries::one(req.order, zdim);
  for (int n = 1; n <= req.order; ++n) U.at(n) = fixed_point_sum(req, n, opt.budget);
  return U.reciprocal();
}

VerifyReport verify_methods(const SeriesRequest& req, const OracleOptions& opt,
                            std::optional<LetterPair> corrupt) {
  Pattern u = validate_request(req);
  VerifyReport report;
  report.order = req.order;
  const TSeries dp = dp_series(req, opt);
  report.methods.push_back("dp");

  try {
    compare_into(report, dp, "dp", brute_series(req, opt), "brute");
  } catch (const BudgetExceeded& e) {
    report.warn(std::string("brute skipped: ") + e.what());
  }

  if (u.descent_count() <= 1) {
    try {
      compare_into(report, dp, "dp", reciprocity_series(req, opt), "reciprocity");
    } catch (const BudgetExceeded& e) {
      report.warn(std::string("reciprocity skipped: ") + e.what());
    }
  } else {
    report.warn("reciprocity skipped: fixed points need des(u) <= 1");
  }

  try {
    WeightTable table = weight_table(req);
    if (corrupt) {
      auto it = table.entries.find(*corrupt);
      if (it == table.entries.end())
        throw InvalidArgument("no weight table entry (" + std::to_string(corrupt->first) + "," +
                              std::to_string(corrupt->second) + ") to corrupt");
      if (req.order >= 1) it->second.at(1) += XPoly::monomial(1, 1, table.zdim);
    }
    compare_into(report, dp, "dp", closed_series(req, table), "closed");
  } catch (const UnsupportedClass& e) {
    report.warn(std::string("closed skipped: ") + e.what());
  }

  if (const SeriesFixture* f = find_reference_series(u.word(), req.mode, req.k)) {
    FixtureCheck fc = check_fixture(*f, dp);
    for (const auto& w : fc.warnings) report.warn("reference: " + w);
    for (const auto& w : fc.failures) report.warn("reference mismatch: " + w);
    if (!fc.pass) report.agree = false;
  }
  return report;
}

}  // namespace desavoid
