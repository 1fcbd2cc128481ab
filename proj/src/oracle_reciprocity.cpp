#include <map>

#include "desavoid/error.hpp"
#include "desavoid/oracle.hpp"

namespace desavoid {

namespace {

struct FixedPointSearch {
  const Pattern& u;
  int k, n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  Word w;
  std::vector<int> starts;  // brick starts, 0-based
  // visit(word, starts) at every completed fixed point
  std::function<void(const Word&, const std::vector<int>&)> visit;

  bool window_match_ending_at(int p) const {
    const int j = u.length();
    const int a = p - j + 1;
    return a >= 0 && u.matches_window(w.data() + a);
  }

  // After placing w[p], update the pending boundary q (or -1). Returns false
  // when the placement is dead.
  bool settle(int p, int brick_start, int prev_start, int& q) const {
    const int j = u.length();
    const int a = p - j + 1;
    if (a < 0) return q < 0 || p < q + j - 1;
    bool match = u.matches_window(w.data() + a);
    if (match && a >= brick_start) return false;  // match inside a brick
    if (q >= 0) {
      if (match && a >= prev_start && a <= q) {
        q = -1;
      } else if (p >= q + j - 1) {
        return false;  // no later window can cover the boundary
      }
    }
    return true;
  }

  void run(int p, int brick_start, int prev_start, int q) {
    if (++nodes > budget) throw BudgetExceeded("fixed point search exceeded its node budget");
    if (p == n) {
      if (q < 0) visit(w, starts);
      return;
    }
    for (int c = 1; c <= k; ++c) {
      w[p] = c;
      // extend the current brick
      if (p > 0 && c >= w[p - 1]) {
        int q2 = q;
        if (settle(p, brick_start, prev_start, q2)) run(p + 1, brick_start, prev_start, q2);
      }
      // open a new brick at p; the closing brick must have no open boundary
      if (p == 0 || q < 0) {
        int q2 = (p > 0 && w[p - 1] > c) ? p - 1 : -1;
        starts.push_back(p);
        if (settle(p, p, brick_start, q2)) run(p + 1, p, brick_start, q2);
        starts.pop_back();
      }
    }
  }
};

void check_fixed_point_request(const SeriesRequest& req, const Pattern& u, int n) {
  if (u.descent_count() > 1)
    throw UnsupportedClass("des(u) <= 1", "fixed points are only characterized for des(u) <= 1");
  if (n < 0) throw InvalidArgument("n must be >= 0");
  if (req.zmode == ZMode::symbolic && n > kSymbolicMaxOrder)
    throw InvalidArgument("symbolic z needs n <= " + std::to_string(kSymbolicMaxOrder));
}

}  // namespace

void for_each_composition(int n, const std::function<void(const Composition&)>& f) {
  if (n <= 0) return;
  Composition c;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      f(c);
      return;
    }
    for (int b = 1; b <= left; ++b) {
      c.parts.push_back(b);
      rec(left - b);
      c.parts.pop_back();
    }
  };
  rec(n);
}

XPoly theta_h(const TSeries& avoiding, int n) {
  if (n < 0 || n > avoiding.order()) throw InvalidArgument("theta_h needs 0 <= n <= series order");
  if (n > 14) throw InvalidArgument("theta_h enumerates compositions only for n <= 14");
  const int zdim = avoiding.zdim();
  if (n == 0) return XPoly::constant(1, zdim);
  XPoly sum(zdim);
  for_each_composition(n, [&](const Composition& c) {
    XPoly prod = XPoly::constant((c.parts.size() % 2) ? -1 : 1, zdim);
    for (int b : c.parts) prod = prod * avoiding[b];
    sum += prod;
  });
  return sum;
}

XPoly theta_h(const SeriesRequest& req, int n, const OracleOptions& opt) {
  SeriesRequest r = req;
  r.order = n;
  return theta_h(dp_series(r, opt), n);
}

void for_each_fixed_point(const SeriesRequest& req, int n,
                          const std::function<void(const FixedPoint&)>& f, std::uint64_t budget) {
  SeriesRequest r = req;
  r.order = std::max(req.order, 0);
  Pattern u = validate_request(r);
  check_fixed_point_request(req, u, n);
  if (n == 0) {
    f(FixedPoint{});
    return;
  }
  FixedPointSearch search{u, req.k, n, budget, 0, Word(static_cast<std::size_t>(n), 0), {}, {}};
  search.visit = [&](const Word& w, const std::vector<int>& starts) {
    FixedPoint fp;
    fp.word = w;
    for (std::size_t i = 0; i < starts.size(); ++i) {
      int end = i + 1 < starts.size() ? starts[i + 1] : n;
      fp.composition.parts.push_back(end - starts[i]);
    }
    f(fp);
  };
  search.run(0, 0, 0, -1);
}

XPoly fixed_point_sum(const SeriesRequest& req, int n, std::uint64_t budget) {
  SeriesRequest r = req;
  r.order = std::max(req.order, 0);
  Pattern u = validate_request(r);
  check_fixed_point_request(req, u, n);
  const int zdim = zdim_for(req);
  if (n == 0) return XPoly::constant(1, zdim);

  // (bricks, z-exponents) -> count; the sign is (-1)^bricks
  std::map<std::pair<unsigned, std::vector<std::uint16_t>>, long long> acc;
  FixedPointSearch search{u, req.k, n, budget, 0, Word(static_cast<std::size_t>(n), 0), {}, {}};
  std::vector<std::uint16_t> z(static_cast<std::size_t>(zdim), 0);
  search.visit = [&](const Word& w, const std::vector<int>& starts) {
    if (zdim) {
      std::fill(z.begin(), z.end(), 0);
      for (int a : w) ++z[a - 1];
    }
    ++acc[{static_cast<unsigned>(starts.size()), z}];
  };
  search.run(0, 0, 0, -1);

  std::vector<Term> terms;
  for (const auto& [key, count] : acc) {
    Rational c(mpz_class(static_cast<long>(count)));
    if (key.first % 2) c = -c;
    terms.push_back({Monomial{key.first, key.second}, c});
  }
  return XPoly::from_terms(std::move(terms), zdim);
}

std::uint64_t fixed_point_count(const SeriesRequest& req, int n, std::uint64_t budget) {
  std::uint64_t count = 0;
  for_each_fixed_point(req, n, [&](const FixedPoint&) { ++count; }, budget);
  return count;
}

}  // namespace desavoid
