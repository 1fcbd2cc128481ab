#include "desavoid/render.hpp"

#include <nlohmann/json.hpp>

#include "desavoid/error.hpp"

namespace desavoid {

using json = nlohmann::ordered_json;

namespace {

std::string digits(unsigned v, const char* const table[10]) {
  std::string s = std::to_string(v), out;
  for (char c : s) out += table[c - '0'];
  return out;
}

const char* const kSup[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
const char* const kSub[10] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};

std::string power(const char* var, unsigned e) {
  if (e == 0) return "";
  return e == 1 ? std::string(var) : std::string(var) + digits(e, kSup);
}

std::string monomial_text(const Monomial& m) {
  std::string out = power("x", m.x);
  for (std::size_t i = 0; i < m.z.size(); ++i)
    if (m.z[i]) out += "z" + digits(static_cast<unsigned>(i) + 1, kSub) + (m.z[i] > 1 ? digits(m.z[i], kSup) : "");
  return out;
}

// term without its sign
std::string magnitude_text(const Term& t) {
  Rational a = abs(t.c);
  std::string mono = monomial_text(t.m);
  if (mono.empty()) return to_string(a);
  if (a == 1) return mono;
  if (a.get_den() == 1) return to_string(a) + mono;
  return "(" + to_string(a) + ")" + mono;
}

}  // namespace

std::string poly_text(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (t.c < 0)
      out += "-";
    else if (!first)
      out += "+";
    out += magnitude_text(t);
    first = false;
  }
  return out;
}

std::string series_text(const TSeries& s) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) {
    const XPoly& c = s[n];
    if (c.is_zero()) continue;
    std::string tp = power("t", static_cast<unsigned>(n));
    std::string body;
    bool negative = false;
    if (n == 0) {
      body = poly_text(c);
    } else if (c.terms().size() == 1) {
      negative = c.terms()[0].c < 0;
      std::string mag = magnitude_text(c.terms()[0]);
      body = (mag == "1" ? "" : mag + " ") + tp;
    } else {
      body = "(" + poly_text(c) + ") " + tp;
    }
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

std::string series_json(const TSeries& s) {
  json j;
  j["order"] = s.order();
  j["zdim"] = s.zdim();
  json coeffs = json::array();
  for (int n = 0; n <= s.order(); ++n) {
    json terms = json::array();
    for (const auto& t : s[n].terms()) {
      json term;
      term["x"] = t.m.x;
      term["z"] = t.m.z;
      term["c"] = to_string(t.c);
      terms.push_back(term);
    }
    coeffs.push_back(json{{"t", n}, {"terms", terms}});
  }
  j["coeffs"] = coeffs;
  return j.dump();
}

TSeries parse_series_json(const std::string& text) {
  try {
    json j = json::parse(text);
    const int order = j.at("order").get<int>();
    const int zdim = j.at("zdim").get<int>();
    TSeries s(order, zdim);
    for (const auto& c : j.at("coeffs")) {
      const int n = c.at("t").get<int>();
      std::vector<Term> terms;
      for (const auto& t : c.at("terms")) {
        Monomial m;
        m.x = t.at("x").get<unsigned>();
        m.z = t.at("z").get<std::vector<std::uint16_t>>();
        terms.push_back({std::move(m), parse_rational(t.at("c").get<std::string>())});
      }
      s.at(n) = XPoly::from_terms(std::move(terms), zdim);
    }
    return s;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad series json: ") + e.what());
  }
}

std::string class_json(const PatternClass& pc) {
  json j;
  j["indexing"] = "1-based";
  j["mode"] = pc.mode == MatchMode::exact ? "exact" : "reduced";
  j["alphabet"] = pc.alphabet.bounded ? json(pc.alphabet.k) : json("P");
  j["des"] = pc.descent_count;
  j["endpoints"] = to_string(pc.endpoint);
  j["st"] = json{{"P", pc.st_unbounded}, {"k", pc.st_set}};
  j["est"] = pc.est_set;
  j["flags"] = json{{"minimal_overlapping", pc.minimal_overlapping},
                    {"non_overlapping", pc.non_overlapping},
                    {"weakly_increasing", pc.weakly_increasing},
                    {"weakly_decreasing", pc.weakly_decreasing},
                    {"level", pc.level}};
  j["case"] = to_string(pc.closed_case);
  if (!pc.failing_property.empty()) j["failing_property"] = pc.failing_property;
  return j.dump();
}

std::string class_text(const PatternClass& pc) {
  auto set = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  std::string k = pc.alphabet.bounded ? "[" + std::to_string(pc.alphabet.k) + "]" : "P";
  std::string out;
  out += "des " + std::to_string(pc.descent_count) + ", " + to_string(pc.endpoint) + "\n";
  if (pc.alphabet.bounded) out += "St over " + k + ": " + set(pc.st_set) + "\n";
  out += "St over P: " + set(pc.st_unbounded) + "\n";
  out += "ESt: " + set(pc.est_set) + "\n";
  out += "flags (" + std::string(pc.mode == MatchMode::exact ? "exact" : "reduced") + "):";
  if (pc.minimal_overlapping) out += " minimal_overlapping";
  if (pc.non_overlapping) out += " non_overlapping";
  if (pc.weakly_increasing) out += " weakly_increasing";
  if (pc.weakly_decreasing) out += " weakly_decreasing";
  if (pc.level) out += " level";
  out += "\ncase: " + std::string(to_string(pc.closed_case));
  if (!pc.failing_property.empty()) out += " (lacks " + pc.failing_property + ")";
  return out + "\n";
}

std::string table_json(const WeightTable& t) {
  json j;
  j["case"] = to_string(t.closed_case);
  j["k"] = t.k;
  j["order"] = t.order;
  json entries = json::object();
  for (const auto& [pair, series] : t.entries)
    entries[std::to_string(pair.first) + "," + std::to_string(pair.second)] = json::parse(series_json(series));
  j["entries"] = entries;
  return j.dump();
}

std::string table_text(const WeightTable& t) {
  std::string out;
  for (const auto& [pair, series] : t.entries)
    out += "wt(" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ") = " +
           series_text(series) + "\n";
  return out;
}

}  // namespace desavoid
