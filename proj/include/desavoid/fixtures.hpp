#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "desavoid/algebra.hpp"
#include "desavoid/words.hpp"

namespace desavoid {

// Reference coefficients of avoidance series at z = 1. A suspect value is
// believed to be a misprint: a disagreement is logged, not failed.
struct FixtureCoeff {
  int t = 0;
  unsigned x = 0;
  Rational value;
  bool suspect = false;
  std::string note;
};

struct SeriesFixture {
  std::string id;
  Word pattern;
  MatchMode mode = MatchMode::reduced;
  int k = 0;
  int order = 0;
  std::vector<FixtureCoeff> coeffs;
};

// The coefficient sequence x_slice(series, x_power) as num/den.
struct RationalFixture {
  std::string id;
  std::string series_id;
  unsigned x_power = 0;
  RationalPoly num, den;
  bool suspect = false;
};

const std::vector<SeriesFixture>& reference_series();
const SeriesFixture* find_reference_series(const Word& pattern, MatchMode mode, int k);
const std::vector<RationalFixture>& reference_rational_forms();

struct FixtureCheck {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
};

// Compares every fixture coefficient within the series order.
FixtureCheck check_fixture(const SeriesFixture& f, const TSeries& computed);

// FNV-1a over a canonical dump of every fixture.
std::uint64_t fixture_hash();

}  // namespace desavoid
