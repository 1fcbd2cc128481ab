#include "desavoid/desavoid.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "desavoid/closed_forms.hpp"
#include "desavoid/error.hpp"
#include "desavoid/fixtures.hpp"
#include "desavoid/oracle.hpp"
#include "desavoid/overlap.hpp"
#include "desavoid/render.hpp"
#include "desavoid/verify.hpp"

using namespace desavoid;

struct dav_pattern {
  Word word;
  MatchMode mode;
};

struct dav_series {
  TSeries s;
};

struct dav_report {
  VerifyReport r;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_property;

template <class F>
dav_status guard(F&& f) {
  g_error.clear();
  g_property.clear();
  try {
    f();
    return DAV_OK;
  } catch (const UnsupportedClass& e) {
    g_error = e.what();
    g_property = e.property();
    return DAV_ERR_UNSUPPORTED_CLASS;
  } catch (const InvalidArgument& e) {
    g_error = e.what();
    return DAV_ERR_INVALID_ARGUMENT;
  } catch (const BudgetExceeded& e) {
    g_error = e.what();
    return DAV_ERR_BUDGET_EXCEEDED;
  } catch (const ZModeMismatch& e) {
    g_error = e.what();
    return DAV_ERR_ZMODE_MISMATCH;
  } catch (const NonUnit& e) {
    g_error = e.what();
    return DAV_ERR_NONUNIT;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return DAV_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return DAV_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) throw InvalidArgument(std::string(what) + " must not be null");
}

SeriesRequest request(const dav_pattern* p, const dav_options* opt) {
  need(p, "pattern");
  need(opt, "options");
  SeriesRequest req;
  req.pattern = p->word;
  req.mode = p->mode;
  req.k = opt->alphabet;
  req.order = opt->order;
  req.zmode = opt->zmode == DAV_Z_SYMBOLIC ? ZMode::symbolic : ZMode::ones;
  validate_request(req);
  return req;
}

OracleOptions oracle_options(const dav_options* opt) {
  OracleOptions o;
  o.budget = opt->budget ? opt->budget : kDefaultBudget;
  o.threads = opt->threads > 0 ? opt->threads : 1;
  return o;
}

LetterPair parse_pair(const char* text) {
  int a = 0, b = 0;
  char tail = 0;
  if (std::sscanf(text, "%d,%d%c", &a, &b, &tail) != 2)
    throw InvalidArgument(std::string("expected a letter pair like 2,1, got '") + text + "'");
  return {a, b};
}

std::string fixpoints_output(const SeriesRequest& req, const OracleOptions& o, dav_format fmt) {
  const TSeries dp = dp_series(req, o);
  const TSeries recip = dp.reciprocal();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::string text;
  bool all = true;
  for (int n = 0; n <= req.order; ++n) {
    XPoly fp = fixed_point_sum(req, n, o.budget);
    XPoly th = theta_h(dp, n);
    std::uint64_t count = n == 0 ? 1 : fixed_point_count(req, n, o.budget);
    bool agree = fp == th && th == recip[n];
    all = all && agree;
    rows.push_back({{"n", n},
                    {"fixed_points", count},
                    {"fixed_point_sum", poly_text(fp)},
                    {"theta_h", poly_text(th)},
                    {"reciprocal", poly_text(recip[n])},
                    {"agree", agree}});
    text += "U_" + std::to_string(n) + " = " + poly_text(fp) + "  (" + std::to_string(count) +
            " fixed points; theta_h " + (fp == th ? "agrees" : "DIFFERS") + ", reciprocal " +
            (fp == recip[n] ? "agrees" : "DIFFERS") + ")\n";
  }
  if (fmt == DAV_FORMAT_JSON) {
    nlohmann::ordered_json j;
    j["agree"] = all;
    j["rows"] = rows;
    return j.dump();
  }
  return text;
}

}  // namespace

extern "C" {

void dav_options_init(dav_options* opt) {
  if (!opt) return;
  opt->alphabet = 1;
  opt->order = 6;
  opt->zmode = DAV_Z_ONES;
  opt->threads = 1;
  opt->budget = kDefaultBudget;
}

const char* dav_version(void) {
  static const std::string v = [] {
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fixture_hash()));
    return std::string("desavoid 1.0.0 (fixtures ") + hash + ")";
  }();
  return v.c_str();
}

const char* dav_last_error(void) { return g_error.c_str(); }
const char* dav_last_failing_property(void) { return g_property.c_str(); }
void dav_string_free(char* s) { std::free(s); }

dav_status dav_pattern_create(const char* text, dav_mode mode, dav_pattern** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    MatchMode m = mode == DAV_MODE_EXACT ? MatchMode::exact : MatchMode::reduced;
    Pattern u(parse_word(text), m);
    *out = new dav_pattern{u.word(), m};
  });
}

void dav_pattern_destroy(dav_pattern* p) { delete p; }
int dav_pattern_length(const dav_pattern* p) { return p ? static_cast<int>(p->word.size()) : 0; }
int dav_pattern_max_letter(const dav_pattern* p) { return p ? max_letter(p->word) : 0; }

dav_status dav_classify(const dav_pattern* p, int alphabet, dav_format fmt, char** out) {
  return guard([&] {
    need(p, "pattern");
    need(out, "out");
    Pattern u(p->word, p->mode);
    Alphabet a = alphabet == 0 ? Alphabet::unbounded() : Alphabet::of(alphabet);
    PatternClass pc = classify_pattern(u, a);
    *out = dup(fmt == DAV_FORMAT_JSON ? class_json(pc) : class_text(pc));
  });
}

dav_status dav_series_compute(const dav_pattern* p, const dav_options* opt, dav_method method,
                              dav_series** out) {
  return guard([&] {
    need(out, "out");
    SeriesRequest req = request(p, opt);
    OracleOptions o = oracle_options(opt);
    TSeries s;
    switch (method) {
      case DAV_METHOD_BRUTE: s = brute_series(req, o); break;
      case DAV_METHOD_DP: s = dp_series(req, o); break;
      case DAV_METHOD_RECIPROCITY: s = reciprocity_series(req, o); break;
      case DAV_METHOD_CLOSED: s = closed_series(req); break;
      default: throw InvalidArgument("unknown method");
    }
    *out = new dav_series{std::move(s)};
  });
}

dav_status dav_series_parse_json(const char* json, dav_series** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = new dav_series{parse_series_json(json)};
  });
}

void dav_series_destroy(dav_series* s) { delete s; }
int dav_series_order(const dav_series* s) { return s ? s->s.order() : -1; }

dav_status dav_series_coefficient(const dav_series* s, int t_power, int x_power, char** out) {
  return guard([&] {
    need(s, "series");
    need(out, "out");
    if (x_power < 0) throw InvalidArgument("x power must be >= 0");
    if (t_power < 0 || t_power > s->s.order()) throw InvalidArgument("t power outside the series order");
    XPoly c = s->s[t_power];
    if (c.zdim()) c = c.specialize_z_ones();
    *out = dup(to_string(c.coeff(static_cast<unsigned>(x_power))));
  });
}

dav_status dav_series_render(const dav_series* s, dav_format fmt, char** out) {
  return guard([&] {
    need(s, "series");
    need(out, "out");
    *out = dup(fmt == DAV_FORMAT_JSON ? series_json(s->s) : series_text(s->s));
  });
}

int dav_series_equal(const dav_series* a, const dav_series* b) {
  return a && b && a->s == b->s ? 1 : 0;
}

dav_status dav_weights(const dav_pattern* p, const dav_options* opt, dav_format fmt, char** out) {
  return guard([&] {
    need(out, "out");
    WeightTable t = weight_table(request(p, opt));
    *out = dup(fmt == DAV_FORMAT_JSON ? table_json(t) : table_text(t));
  });
}

dav_status dav_fixpoints(const dav_pattern* p, const dav_options* opt, dav_format fmt, char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup(fixpoints_output(request(p, opt), oracle_options(opt), fmt));
  });
}

dav_status dav_verify(const dav_pattern* p, const dav_options* opt, const char* corrupt_pair,
                      dav_report** out) {
  return guard([&] {
    need(out, "out");
    SeriesRequest req = request(p, opt);
    std::optional<LetterPair> corrupt;
    if (corrupt_pair) corrupt = parse_pair(corrupt_pair);
    *out = new dav_report{verify_methods(req, oracle_options(opt), corrupt)};
  });
}

dav_status dav_identity_check(dav_identity which, int alphabet, int order, int trials, uint64_t seed,
                              dav_report** out) {
  return guard([&] {
    need(out, "out");
    IdentityKind kind;
    switch (which) {
      case DAV_IDENTITY_DES: kind = IdentityKind::des; break;
      case DAV_IDENTITY_RIS: kind = IdentityKind::ris; break;
      case DAV_IDENTITY_LEV: kind = IdentityKind::lev; break;
      case DAV_IDENTITY_WDES: kind = IdentityKind::wdes; break;
      default: throw InvalidArgument("unknown identity");
    }
    *out = new dav_report{identity_check(kind, alphabet, order, trials, seed)};
  });
}

int dav_report_agree(const dav_report* r) { return r && r->r.agree ? 1 : 0; }

dav_status dav_report_render(const dav_report* r, dav_format fmt, char** out) {
  return guard([&] {
    need(r, "report");
    need(out, "out");
    *out = dup(fmt == DAV_FORMAT_JSON ? report_json(r->r) : report_text(r->r));
  });
}

void dav_report_destroy(dav_report* r) { delete r; }

}  // extern "C"
