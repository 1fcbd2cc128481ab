#include <algorithm>
#include <map>
#include <thread>
#include <unordered_map>

#include "desavoid/error.hpp"
#include "desavoid/oracle.hpp"

namespace desavoid {

namespace {

// Symbolic keys pack des into bits 0..3 and the exponent of letter a into
// bits 4a..4a+3. Guard rails keep every field below 16.
constexpr int kDesBits = 4;
constexpr int kZBits = 4;

std::uint64_t z_step(int letter) { return std::uint64_t{1} << (kDesBits + kZBits * (letter - 1)); }

Monomial key_monomial(std::uint64_t key, int k, unsigned* des) {
  *des = static_cast<unsigned>(key & 0xF);
  Monomial m;
  m.z.resize(static_cast<std::size_t>(k));
  for (int a = 1; a <= k; ++a) m.z[a - 1] = static_cast<std::uint16_t>((key >> (kDesBits + kZBits * (a - 1))) & 0xF);
  return m;
}

// saturating k^n
std::uint64_t ipow_sat(std::uint64_t k, int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > UINT64_MAX / k) return UINT64_MAX;
    r *= k;
  }
  return r;
}

Rational as_rational(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v))); }
Rational as_rational(const mpz_class& v) { return Rational(v); }

// Per-length tallies: ones mode by des, symbolic mode by packed key.
struct Tally {
  std::vector<std::vector<std::uint64_t>> by_des;
  std::vector<std::map<std::uint64_t, std::uint64_t>> by_key;

  Tally(int order, bool symbolic) {
    if (symbolic)
      by_key.resize(static_cast<std::size_t>(order) + 1);
    else
      by_des.assign(static_cast<std::size_t>(order) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(order) + 1, 0));
  }

  void merge(const Tally& o) {
    for (std::size_t n = 0; n < std::min(by_des.size(), o.by_des.size()); ++n)
      for (std::size_t d = 0; d < std::min(by_des[n].size(), o.by_des[n].size()); ++d)
        by_des[n][d] += o.by_des[n][d];
    for (std::size_t n = 0; n < std::min(by_key.size(), o.by_key.size()); ++n)
      for (const auto& [key, v] : o.by_key[n]) by_key[n][key] += v;
  }
};

TSeries tally_series(const Tally& tally, int order, int zdim) {
  TSeries s = TSeries::one(order, zdim);
  for (int n = 1; n <= order; ++n) {
    std::vector<Term> terms;
    if (zdim == 0) {
      for (std::size_t d = 0; d < tally.by_des[n].size(); ++d)
        if (tally.by_des[n][d]) terms.push_back({Monomial{static_cast<unsigned>(d) + 1, {}}, as_rational(tally.by_des[n][d])});
    } else {
      for (const auto& [key, v] : tally.by_key[n]) {
        unsigned des = 0;
        Monomial m = key_monomial(key, zdim, &des);
        m.x = des + 1;
        terms.push_back({std::move(m), as_rational(v)});
      }
    }
    s.at(n) = XPoly::from_terms(std::move(terms), zdim);
  }
  return s;
}

struct BruteWalker {
  const Pattern& u;
  int k, order;
  bool symbolic;
  Tally tally;
  Word w;

  BruteWalker(const Pattern& u, int k, int order, bool symbolic)
      : u(u), k(k), order(order), symbolic(symbolic), tally(order, symbolic) {
    w.reserve(static_cast<std::size_t>(order));
  }

  void record(int des, std::uint64_t key) {
    const int n = static_cast<int>(w.size());
    if (symbolic)
      ++tally.by_key[n][key | static_cast<std::uint64_t>(des)];
    else
      ++tally.by_des[n][des];
  }

  void walk(int des, std::uint64_t key) {
    record(des, key);
    if (static_cast<int>(w.size()) == order) return;
    const int j = u.length();
    for (int c = 1; c <= k; ++c) {
      int d = des + (w.empty() ? 0 : (w.back() > c));
      w.push_back(c);
      int n = static_cast<int>(w.size());
      if (n < j || !u.matches_window(w.data() + n - j)) walk(d, key + z_step(c));
      w.pop_back();
    }
  }

  void walk_from(int first) {
    const int j = u.length();
    w.assign(1, first);
    if (j == 1 && u.matches_window(w.data())) return;
    walk(0, z_step(first));
  }
};

template <class Count>
TSeries dp_ones(const Pattern& u, int k, int order, std::uint64_t budget) {
  const int j = u.length();
  const int L = std::max(j - 1, 1);
  const std::uint64_t states = ipow_sat(static_cast<std::uint64_t>(k), L);
  if (states > budget) throw BudgetExceeded("dp_series needs " + std::to_string(states) + " states, over budget");
  const std::size_t S = states;
  const std::size_t D = static_cast<std::size_t>(order) + 1;

  std::vector<std::vector<Count>> total(D, std::vector<Count>(D, Count(0)));

  // Short words: no window fits, enumerate directly.
  Word w;
  for (int n = 1; n < L && n <= order; ++n) {
    w.assign(static_cast<std::size_t>(n), 1);
    while (true) {
      total[n][static_cast<std::size_t>(word_stats(w).des)] += Count(1);
      int p = n - 1;
      while (p >= 0 && w[p] == k) w[p--] = 1;
      if (p < 0) break;
      ++w[p];
    }
  }
  if (order < L) {
    TSeries s = TSeries::one(order, 0);
    for (int n = 1; n <= order; ++n) {
      std::vector<Term> terms;
      for (std::size_t d = 0; d < D; ++d)
        if (total[n][d] != 0) terms.push_back({Monomial{static_cast<unsigned>(d) + 1, {}}, as_rational(total[n][d])});
      s.at(n) = XPoly::from_terms(std::move(terms), 0);
    }
    return s;
  }

  // Digits 0..k-1 stand for letters 1..k; the newest letter is the low digit.
  std::vector<std::uint8_t> reject(S * static_cast<std::size_t>(k), 0);
  Word window(static_cast<std::size_t>(L) + 1);
  for (std::size_t s = 0; s < S; ++s) {
    std::size_t v = s;
    for (int p = L - 1; p >= 0; --p) {
      window[p] = static_cast<int>(v % k) + 1;
      v /= k;
    }
    for (int c = 1; c <= k; ++c) {
      window[L] = c;
      reject[s * k + (c - 1)] = u.matches_window(window.data() + (L + 1 - j));
    }
  }

  std::vector<Count> cur(S * D, Count(0)), next(S * D, Count(0));
  {
    Word start(static_cast<std::size_t>(L), 1);
    for (std::size_t s = 0; s < S; ++s) {
      std::size_t v = s;
      for (int p = L - 1; p >= 0; --p) {
        start[p] = static_cast<int>(v % k) + 1;
        v /= k;
      }
      if (j == 1 && u.matches_window(start.data())) continue;
      cur[s * D + static_cast<std::size_t>(word_stats(start).des)] = Count(1);
    }
  }
  auto add_total = [&](int n) {
    for (std::size_t s = 0; s < S; ++s)
      for (int d = 0; d < n; ++d) total[n][d] += cur[s * D + d];
  };
  add_total(L);
  const std::size_t keep = S / static_cast<std::size_t>(k);
  for (int n = L + 1; n <= order; ++n) {
    std::fill(next.begin(), next.end(), Count(0));
    for (std::size_t s = 0; s < S; ++s) {
      const Count* src = &cur[s * D];
      int maxd = n - 2;
      while (maxd >= 0 && src[maxd] == 0) --maxd;
      if (maxd < 0) continue;
      const int last = static_cast<int>(s % k) + 1;
      const std::size_t base = (s % keep) * static_cast<std::size_t>(k);
      for (int c = 1; c <= k; ++c) {
        if (reject[s * k + (c - 1)]) continue;
        Count* dst = &next[(base + (c - 1)) * D + (last > c ? 1 : 0)];
        for (int d = 0; d <= maxd; ++d) dst[d] += src[d];
      }
    }
    std::swap(cur, next);
    add_total(n);
  }

  TSeries s = TSeries::one(order, 0);
  for (int n = 1; n <= order; ++n) {
    std::vector<Term> terms;
    for (std::size_t d = 0; d < D; ++d)
      if (total[n][d] != 0) terms.push_back({Monomial{static_cast<unsigned>(d) + 1, {}}, as_rational(total[n][d])});
    s.at(n) = XPoly::from_terms(std::move(terms), 0);
  }
  return s;
}

TSeries dp_symbolic(const Pattern& u, int k, int order, std::uint64_t budget) {
  const int j = u.length();
  const int L = std::max(j - 1, 1);
  const std::uint64_t states = ipow_sat(static_cast<std::uint64_t>(k), L);
  if (states > budget) throw BudgetExceeded("dp_series needs " + std::to_string(states) + " states, over budget");
  const std::size_t S = states;
  Tally tally(order, true);

  if (order < L) {
    BruteWalker walker(u, k, order, true);
    walker.w.clear();
    walker.walk(0, 0);
    return tally_series(walker.tally, order, k);
  }
  {
    BruteWalker walker(u, k, L - 1, true);
    walker.walk(0, 0);
    tally.merge(walker.tally);
  }

  std::vector<std::uint8_t> reject(S * static_cast<std::size_t>(k), 0);
  Word window(static_cast<std::size_t>(L) + 1);
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> cur(S), next(S);
  for (std::size_t s = 0; s < S; ++s) {
    std::size_t v = s;
    for (int p = L - 1; p >= 0; --p) {
      window[p] = static_cast<int>(v % k) + 1;
      v /= k;
    }
    for (int c = 1; c <= k; ++c) {
      window[L] = c;
      reject[s * k + (c - 1)] = u.matches_window(window.data() + (L + 1 - j));
    }
    if (j == 1 && u.matches_window(window.data())) continue;
    std::uint64_t key = static_cast<std::uint64_t>(word_stats(Word(window.begin(), window.begin() + L)).des);
    for (int p = 0; p < L; ++p) key += z_step(window[p]);
    cur[s][key] = 1;
  }
  auto add_total = [&](int n) {
    for (const auto& m : cur)
      for (const auto& [key, v] : m) tally.by_key[n][key] += v;
  };
  add_total(L);
  const std::size_t keep = S / static_cast<std::size_t>(k);
  for (int n = L + 1; n <= order; ++n) {
    for (auto& m : next) m.clear();
    for (std::size_t s = 0; s < S; ++s) {
      if (cur[s].empty()) continue;
      const int last = static_cast<int>(s % k) + 1;
      const std::size_t base = (s % keep) * static_cast<std::size_t>(k);
      for (int c = 1; c <= k; ++c) {
        if (reject[s * k + (c - 1)]) continue;
        auto& dst = next[base + (c - 1)];
        const std::uint64_t shift = z_step(c) + (last > c ? 1 : 0);
        for (const auto& [key, v] : cur[s]) dst[key + shift] += v;
      }
    }
    std::swap(cur, next);
    add_total(n);
  }
  return tally_series(tally, order, k);
}

}  // namespace

int zdim_for(const SeriesRequest& req) { return req.zmode == ZMode::symbolic ? req.k : 0; }

Pattern validate_request(const SeriesRequest& req) {
  if (req.k < 1 || req.k > kMaxAlphabet)
    throw InvalidArgument("alphabet size must lie in [1," + std::to_string(kMaxAlphabet) + "]");
  if (req.order < 0) throw InvalidArgument("order must be >= 0");
  Pattern u(req.pattern, req.mode);
  if (req.zmode == ZMode::symbolic &&
      (req.k > kSymbolicMaxAlphabet || req.order > kSymbolicMaxOrder))
    throw InvalidArgument("symbolic z needs k <= " + std::to_string(kSymbolicMaxAlphabet) +
                          " and order <= " + std::to_string(kSymbolicMaxOrder));
  if (req.mode == MatchMode::exact && max_letter(u.word()) > req.k)
    throw InvalidArgument("exact mode needs every pattern letter in [k]");
  return u;
}

TSeries brute_series(const SeriesRequest& req, const OracleOptions& opt) {
  Pattern u = validate_request(req);
  std::uint64_t work = 0;
  for (int n = 0; n <= req.order; ++n) {
    std::uint64_t p = ipow_sat(static_cast<std::uint64_t>(req.k), n);
    work = p > UINT64_MAX - work ? UINT64_MAX : work + p;
  }
  if (work > opt.budget)
    throw BudgetExceeded("brute_series needs " + std::to_string(work) +
                         " word steps, over budget " + std::to_string(opt.budget) + "; use dp");
  const bool symbolic = req.zmode == ZMode::symbolic;
  Tally tally(req.order, symbolic);
  if (symbolic)
    tally.by_key[0][0] = 1;
  else
    tally.by_des[0][0] = 1;
  if (req.order >= 1) {
    // One shard per first letter, merged in letter order.
    std::vector<Tally> shards(static_cast<std::size_t>(req.k), Tally(req.order, symbolic));
    auto run = [&](int first) {
      BruteWalker walker(u, req.k, req.order, symbolic);
      walker.walk_from(first);
      shards[first - 1] = std::move(walker.tally);
    };
    const int threads = std::clamp(opt.threads, 1, req.k);
    if (threads == 1) {
      for (int a = 1; a <= req.k; ++a) run(a);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          for (int a = 1 + t; a <= req.k; a += threads) run(a);
        });
      for (auto& th : pool) th.join();
    }
    for (const auto& s : shards) tally.merge(s);
  }
  return tally_series(tally, req.order, zdim_for(req));
}

TSeries dp_series(const SeriesRequest& req, const OracleOptions& opt) {
  Pattern u = validate_request(req);
  if (req.zmode == ZMode::symbolic) return dp_symbolic(u, req.k, req.order, opt.budget);
  // uint64 holds every coefficient while k^order < 2^64
  if (ipow_sat(static_cast<std::uint64_t>(req.k), req.order) < UINT64_MAX)
    return dp_ones<std::uint64_t>(u, req.k, req.order, opt.budget);
  return dp_ones<mpz_class>(u, req.k, req.order, opt.budget);
}

}  // namespace desavoid
