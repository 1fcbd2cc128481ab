#pragma once

#include <string>
#include <vector>

#include "desavoid/words.hpp"

namespace desavoid {

struct Alphabet {
  bool bounded = false;
  int k = 0;

  static Alphabet of(int k);
  static Alphabet unbounded() { return {}; }
};

enum class EndpointRelation { greater, less, equal };
enum class ClosedCase { descent, rise, level, weak_descent, des0, unsupported };

const char* to_string(EndpointRelation r);
const char* to_string(ClosedCase c);

// St over the alphabet for a reduced word u, |u| >= 2. Over the unbounded
// alphabet each s is decided over [s+j-1].
std::vector<int> overlap_set(const Word& u, Alphabet a);
// ESt: the borders of u. Alphabet independent once u fits.
std::vector<int> exact_overlap_set(const Word& u);
// Is there a word of length s+j-1 over [k] with u-matches at 1 and s?
bool overlap_witness(const Word& u, int s, int k, Word* witness = nullptr);

struct PatternClass {
  int descent_count = 0;
  EndpointRelation endpoint = EndpointRelation::equal;
  MatchMode mode = MatchMode::reduced;
  Alphabet alphabet;
  // st over the requested alphabet and over P, both for red(u).
  std::vector<int> st_set, st_unbounded, est_set;
  // Flags refer to st_set in reduced mode and est_set in exact mode.
  bool minimal_overlapping = false;
  bool non_overlapping = false;
  bool weakly_increasing = false;
  bool weakly_decreasing = false;
  bool level = false;
  ClosedCase closed_case = ClosedCase::unsupported;
  std::string failing_property;  // set when closed_case is unsupported
};

PatternClass classify_pattern(const Pattern& u, Alphabet a);

}  // namespace desavoid
