#pragma once

#include <optional>
#include <string>
#include <vector>

#include "desavoid/algebra.hpp"

namespace desavoid {

struct Mismatch {
  int t = 0;
  Monomial m;  // x exponent and z-multidegree
  Rational lhs, rhs;
  std::string lhs_label, rhs_label;
};

struct VerifyReport {
  bool agree = true;
  std::optional<Mismatch> first_mismatch;
  std::vector<std::string> warnings;
  std::vector<std::string> methods;  // labels compared, reference first
  int order = 0;

  void warn(std::string w) { warnings.push_back(std::move(w)); }
};

// First differing coefficient in canonical order (t, then x, then z), or
// nothing. Compares through the smaller order.
std::optional<Mismatch> first_difference(const TSeries& lhs, const TSeries& rhs);

// Compares rhs against lhs, folding the result into the report. A mixed
// order is compared through the smaller one and noted as a warning.
void compare_into(VerifyReport& report, const TSeries& lhs, const std::string& lhs_label,
                  const TSeries& rhs, const std::string& rhs_label);

std::string report_json(const VerifyReport& r);
std::string report_text(const VerifyReport& r);

}  // namespace desavoid
