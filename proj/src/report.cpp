#include "desavoid/report.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace desavoid {

std::optional<Mismatch> first_difference(const TSeries& lhs, const TSeries& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  for (int n = 0; n <= order; ++n) {
    XPoly d = lhs[n] - rhs[n];
    if (d.is_zero()) continue;
    const Monomial& m = d.terms().front().m;
    Mismatch mm;
    mm.t = n;
    mm.m = m;
    mm.lhs = lhs[n].coeff(m);
    mm.rhs = rhs[n].coeff(m);
    return mm;
  }
  return std::nullopt;
}

void compare_into(VerifyReport& report, const TSeries& lhs, const std::string& lhs_label,
                  const TSeries& rhs, const std::string& rhs_label) {
  if (report.methods.empty()) report.methods.push_back(lhs_label);
  report.methods.push_back(rhs_label);
  if (lhs.order() != rhs.order())
    report.warn("orders differ (" + lhs_label + " " + std::to_string(lhs.order()) + ", " +
                rhs_label + " " + std::to_string(rhs.order()) + "); compared through " +
                std::to_string(std::min(lhs.order(), rhs.order())));
  auto mm = first_difference(lhs, rhs);
  if (!mm) return;
  report.agree = false;
  if (!report.first_mismatch) {
    mm->lhs_label = lhs_label;
    mm->rhs_label = rhs_label;
    report.first_mismatch = std::move(*mm);
  }
}

std::string report_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["agree"] = r.agree;
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    nlohmann::ordered_json mm;
    mm["t"] = m.t;
    mm["x"] = m.m.x;
    if (!m.m.z.empty()) mm["z"] = m.m.z;
    mm["lhs"] = to_string(m.lhs);
    mm["rhs"] = to_string(m.rhs);
    mm["lhs_method"] = m.lhs_label;
    mm["rhs_method"] = m.rhs_label;
    j["first_mismatch"] = mm;
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["methods"] = r.methods;
  j["order"] = r.order;
  j["warnings"] = r.warnings;
  return j.dump();
}

std::string report_text(const VerifyReport& r) {
  std::string out = r.agree ? "agree" : "MISMATCH";
  out += " (";
  for (std::size_t i = 0; i < r.methods.size(); ++i) out += (i ? ", " : "") + r.methods[i];
  out += "; through t^" + std::to_string(r.order) + ")\n";
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    out += "first mismatch at t^" + std::to_string(m.t) + " x^" + std::to_string(m.m.x);
    if (!m.m.z.empty()) {
      out += " z^(";
      for (std::size_t i = 0; i < m.m.z.size(); ++i) out += (i ? "," : "") + std::to_string(m.m.z[i]);
      out += ")";
    }
    out += ": " + m.lhs_label + " " + to_string(m.lhs) + " vs " + m.rhs_label + " " + to_string(m.rhs) + "\n";
  }
  for (const auto& w : r.warnings) out += "warning: " + w + "\n";
  return out;
}

}  // namespace desavoid
