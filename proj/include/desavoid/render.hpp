#pragma once

#include <string>

#include "desavoid/algebra.hpp"
#include "desavoid/clusters.hpp"
#include "desavoid/overlap.hpp"

namespace desavoid {

// "15x+10x²" style, canonical term order, z as z₁z₂² and so on.
std::string poly_text(const XPoly& p);
// "1 + 5x t + (15x+10x²) t²"
std::string series_text(const TSeries& s);

// {"order":N,"zdim":k,"coeffs":[{"t":n,"terms":[{"x":e,"z":[...],"c":"p/q"}]}]}
std::string series_json(const TSeries& s);
TSeries parse_series_json(const std::string& text);

std::string class_json(const PatternClass& pc);
std::string class_text(const PatternClass& pc);

std::string table_json(const WeightTable& t);
std::string table_text(const WeightTable& t);

}  // namespace desavoid
