// desavoid command line front end. Everything goes through the C API.
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "desavoid/desavoid.h"

namespace {

struct Args {
  std::string pattern;
  int alphabet = 0;
  int order = 6;
  std::string mode = "reduced";
  std::string method = "dp";
  std::string z = "ones";
  std::string output = "text";
  std::uint64_t seed = 1;
  int trials = 20;
  int threads = 1;
  std::uint64_t budget = 100000000;
  std::string which = "des";
  std::string corrupt;
};

const char* status_name(dav_status s) {
  switch (s) {
    case DAV_OK: return "ok";
    case DAV_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case DAV_ERR_UNSUPPORTED_CLASS: return "unsupported_class";
    case DAV_ERR_BUDGET_EXCEEDED: return "budget_exceeded";
    case DAV_ERR_ZMODE_MISMATCH: return "zmode_mismatch";
    case DAV_ERR_NONUNIT: return "nonunit";
    case DAV_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

int fail(dav_status s) {
  if (s == DAV_ERR_UNSUPPORTED_CLASS) {
    std::fprintf(stderr, "{\"error\":\"unsupported_class\",\"failing_property\":%s,\"message\":%s}\n",
                 quoted(dav_last_failing_property()).c_str(), quoted(dav_last_error()).c_str());
  } else {
    std::fprintf(stderr, "error (%s): %s\n", status_name(s), dav_last_error());
  }
  return 1;
}

int emit(char* text) {
  std::fputs(text, stdout);
  std::size_t n = std::strlen(text);
  if (n == 0 || text[n - 1] != '\n') std::fputc('\n', stdout);
  dav_string_free(text);
  return 0;
}

// Smallest alphabet holding the pattern when --alphabet is not given.
int alphabet_for(const Args& a, const dav_pattern* p) {
  return a.alphabet ? a.alphabet : dav_pattern_max_letter(p);
}

dav_options options(const Args& a, const dav_pattern* p) {
  dav_options o;
  dav_options_init(&o);
  o.alphabet = alphabet_for(a, p);
  o.order = a.order;
  o.zmode = a.z == "symbolic" ? DAV_Z_SYMBOLIC : DAV_Z_ONES;
  o.threads = a.threads;
  o.budget = a.budget;
  return o;
}

dav_format format(const Args& a) { return a.output == "json" ? DAV_FORMAT_JSON : DAV_FORMAT_TEXT; }

int with_pattern(const Args& a, int (*body)(const Args&, dav_pattern*)) {
  if (a.pattern.empty()) {
    std::fprintf(stderr, "error: a pattern is required\n");
    return 1;
  }
  dav_pattern* p = nullptr;
  dav_status s = dav_pattern_create(a.pattern.c_str(), a.mode == "exact" ? DAV_MODE_EXACT : DAV_MODE_REDUCED, &p);
  if (s != DAV_OK) return fail(s);
  int rc = body(a, p);
  dav_pattern_destroy(p);
  return rc;
}

int run_classify(const Args& a, dav_pattern* p) {
  char* out = nullptr;
  dav_status s = dav_classify(p, a.alphabet, format(a), &out);
  return s == DAV_OK ? emit(out) : fail(s);
}

int run_series(const Args& a, dav_pattern* p) {
  static const std::map<std::string, dav_method> methods = {{"brute", DAV_METHOD_BRUTE},
                                                            {"dp", DAV_METHOD_DP},
                                                            {"reciprocity", DAV_METHOD_RECIPROCITY},
                                                            {"closed", DAV_METHOD_CLOSED}};
  dav_options o = options(a, p);
  dav_series* series = nullptr;
  dav_status s = dav_series_compute(p, &o, methods.at(a.method), &series);
  if (s != DAV_OK) return fail(s);
  char* out = nullptr;
  s = dav_series_render(series, format(a), &out);
  dav_series_destroy(series);
  return s == DAV_OK ? emit(out) : fail(s);
}

int run_weights(const Args& a, dav_pattern* p) {
  dav_options o = options(a, p);
  char* out = nullptr;
  dav_status s = dav_weights(p, &o, format(a), &out);
  return s == DAV_OK ? emit(out) : fail(s);
}

int run_fixpoints(const Args& a, dav_pattern* p) {
  dav_options o = options(a, p);
  char* out = nullptr;
  dav_status s = dav_fixpoints(p, &o, format(a), &out);
  return s == DAV_OK ? emit(out) : fail(s);
}

int report(dav_report* r, const Args& a) {
  char* out = nullptr;
  dav_status s = dav_report_render(r, format(a), &out);
  int agree = dav_report_agree(r);
  dav_report_destroy(r);
  if (s != DAV_OK) return fail(s);
  emit(out);
  return agree ? 0 : 2;
}

int run_verify(const Args& a, dav_pattern* p) {
  dav_options o = options(a, p);
  dav_report* r = nullptr;
  dav_status s = dav_verify(p, &o, a.corrupt.empty() ? nullptr : a.corrupt.c_str(), &r);
  return s == DAV_OK ? report(r, a) : fail(s);
}

int run_identity(const Args& a) {
  static const std::map<std::string, dav_identity> kinds = {
      {"des", DAV_IDENTITY_DES}, {"ris", DAV_IDENTITY_RIS}, {"lev", DAV_IDENTITY_LEV}, {"wdes", DAV_IDENTITY_WDES}};
  dav_report* r = nullptr;
  dav_status s = dav_identity_check(kinds.at(a.which), a.alphabet ? a.alphabet : 3, a.order, a.trials, a.seed, &r);
  return s == DAV_OK ? report(r, a) : fail(s);
}

void pattern_options(CLI::App* cmd, Args& a) {
  cmd->add_option("PATTERN", a.pattern, "pattern as digits (2341) or comma separated letters");
  cmd->add_option("--pattern,-p", a.pattern, "pattern, same as the positional argument");
  cmd->add_option("--mode", a.mode, "reduced or exact matches")->check(CLI::IsMember({"reduced", "exact"}));
}

void series_options(CLI::App* cmd, Args& a) {
  cmd->add_option("--alphabet,-k", a.alphabet, "alphabet size k (default: largest pattern letter)")
      ->check(CLI::Range(1, 16));
  cmd->add_option("--order,-N", a.order, "truncation order N")->check(CLI::NonNegativeNumber);
  cmd->add_option("--zmode,--z", a.z, "ones sets every z_i to 1; symbolic keeps them (k <= 9, N <= 12)")
      ->check(CLI::IsMember({"ones", "symbolic"}));
  cmd->add_option("--threads", a.threads, "brute force shards")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", a.budget, "work budget for the oracles");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descent distributions of words avoiding a consecutive pattern"};
  app.set_version_flag("--version", std::string(dav_version()));
  app.require_subcommand(1);
  Args a;
  app.add_option("--output,-o", a.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* classify = app.add_subcommand("classify", "overlap sets and closed-form case");
  pattern_options(classify, a);
  classify->add_option("--alphabet,-k", a.alphabet, "alphabet size (default: unbounded)")->check(CLI::Range(1, 16));

  auto* series = app.add_subcommand("series", "avoidance series by one method");
  pattern_options(series, a);
  series_options(series, a);
  series->add_option("--method", a.method, "brute, dp, reciprocity or closed")
      ->check(CLI::IsMember({"brute", "dp", "reciprocity", "closed"}));

  auto* weights = app.add_subcommand("weights", "collapse weight table");
  pattern_options(weights, a);
  series_options(weights, a);

  auto* fixpoints = app.add_subcommand("fixpoints", "fixed point sums against theta_h and 1/N");
  pattern_options(fixpoints, a);
  series_options(fixpoints, a);

  auto* verify = app.add_subcommand("verify", "run every applicable method and diff them");
  pattern_options(verify, a);
  series_options(verify, a);
  verify->add_option("--corrupt-weight", a.corrupt, "")->group("");

  auto* identity = app.add_subcommand("identity", "random-assignment check of a master identity");
  identity->add_option("--which", a.which, "des, ris, lev or wdes")->check(CLI::IsMember({"des", "ris", "lev", "wdes"}));
  identity->add_option("--alphabet,-k", a.alphabet, "alphabet size, 1..5 (default 3)")->check(CLI::Range(1, 5));
  identity->add_option("--order,-N", a.order, "truncation order, 0..8")->check(CLI::Range(0, 8));
  identity->add_option("--trials", a.trials, "number of random assignments")->check(CLI::NonNegativeNumber);
  identity->add_option("--seed", a.seed, "random seed (default 1)");

  for (auto* cmd : {classify, series, weights, fixpoints, verify, identity})
    cmd->add_option("--output,-o", a.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (classify->parsed()) return with_pattern(a, run_classify);
  if (series->parsed()) return with_pattern(a, run_series);
  if (weights->parsed()) return with_pattern(a, run_weights);
  if (fixpoints->parsed()) return with_pattern(a, run_fixpoints);
  if (verify->parsed()) return with_pattern(a, run_verify);
  return run_identity(a);
}
