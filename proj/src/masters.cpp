#include "desavoid/closed_forms.hpp"
#include "desavoid/error.hpp"

namespace desavoid {

namespace {

struct Vars {
  const XAssignment& A;
  int N, zdim;

  TSeries constant(const XPoly& p) const { return TSeries::constant(p, N); }
  TSeries one() const { return TSeries::one(N, zdim); }
  TSeries x() const { return constant(XPoly::monomial(1, 1, zdim)); }
  TSeries y() const { return constant(A.y); }
  // z_i t
  TSeries zt(int i) const { return TSeries::term(A.z[i - 1], 1, N); }
};

void check_assignment(const XAssignment& A) {
  if (A.k < 0) throw InvalidArgument("assignment needs k >= 0");
  if (static_cast<int>(A.z.size()) != A.k) throw InvalidArgument("assignment needs one z per letter");
  if (A.y.zdim() != A.zdim) throw ZModeMismatch("y lives in a different z-mode");
}

// sum over nonempty S of prod_{i in S} leaf(i) prod_{consecutive i<j} link(i,j)
template <class Leaf, class Link>
TSeries chain_sum(const Vars& v, Summation how, Leaf leaf, Link link) {
  const int k = v.A.k;
  TSeries total(v.N, v.zdim);
  if (how == Summation::recurrence) {
    std::vector<TSeries> c;
    for (int j = 1; j <= k; ++j) {
      TSeries acc = v.one();
      for (int i = 1; i < j; ++i) acc += c[i - 1] * link(i, j);
      c.push_back(leaf(j) * acc);
      total += c.back();
    }
    return total;
  }
  if (k > kMaxAlphabet) throw InvalidArgument("subset enumeration needs k <= 16");
  std::vector<TSeries> leaves;
  for (int j = 1; j <= k; ++j) leaves.push_back(leaf(j));
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    TSeries term = v.one();
    int prev = 0;
    for (int j = 1; j <= k; ++j) {
      if (!(mask & (1u << (j - 1)))) continue;
      if (prev) term = term * link(prev, j);
      term = term * leaves[j - 1];
      prev = j;
    }
    total += term;
  }
  return total;
}

void weakly_decreasing_words(int k, int n, std::vector<int>& w,
                             const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(w.size()) == n) {
    f(w);
    return;
  }
  int top = w.empty() ? k : w.back();
  for (int c = top; c >= 1; --c) {
    w.push_back(c);
    weakly_decreasing_words(k, n, w, f);
    w.pop_back();
  }
}

}  // namespace

const TSeries& XAssignment::x_at(int a, int b) const {
  auto it = x.find({a, b});
  if (it == x.end())
    throw InvalidArgument("assignment has no x_" + std::to_string(a) + "," + std::to_string(b));
  return it->second;
}

XAssignment XAssignment::from_table(const WeightTable& table) {
  XAssignment A;
  A.k = table.k;
  A.order = table.order;
  A.zdim = table.zdim;
  A.x = table.entries;
  A.y = XPoly::one_minus_x(table.zdim);
  for (int i = 1; i <= table.k; ++i)
    A.z.push_back(table.zdim ? XPoly::z_var(i, table.zdim) : XPoly::constant(1));
  return A;
}

MasterParts master_des(const XAssignment& A, Summation how) {
  check_assignment(A);
  Vars v{A, A.order, A.zdim};
  TSeries y = v.y();
  TSeries D = chain_sum(
      v, how, [&](int j) { return v.zt(j); },
      [&](int i, int j) { return A.x_at(j, i) - y; });
  MasterParts p;
  p.inner = D;
  p.numerator = v.one() - (v.x() + y) * D;
  p.denominator = v.one() - y * D;
  return p;
}

TSeries master_ris(const XAssignment& A, Summation how) {
  check_assignment(A);
  Vars v{A, A.order, A.zdim};
  TSeries y = v.y();
  TSeries S = chain_sum(
      v, how, [&](int j) { return v.zt(j) * (v.zt(j) * y).geom(); },
      [&](int i, int j) { return A.x_at(i, j); });
  return v.one() - v.x() * S;
}

TSeries master_lev(const XAssignment& A, Summation how) {
  check_assignment(A);
  Vars v{A, A.order, A.zdim};
  TSeries y = v.y();
  // G = (prod_i (1 + y A_i) - 1)/y = sum_{S nonempty} y^(|S|-1) prod A_i
  std::vector<TSeries> leaves;
  for (int i = 1; i <= A.k; ++i) leaves.push_back(v.zt(i) * (A.x_at(i, i) * v.zt(i)).geom());
  TSeries G(v.N, v.zdim);
  if (how == Summation::recurrence) {
    for (const auto& a : leaves) G = G + a + y * G * a;
  } else {
    for (unsigned mask = 1; mask < (1u << A.k); ++mask) {
      TSeries term = v.one();
      bool first = true;
      for (int i = 1; i <= A.k; ++i) {
        if (!(mask & (1u << (i - 1)))) continue;
        if (!first) term = term * y;
        term = term * leaves[i - 1];
        first = false;
      }
      G += term;
    }
  }
  return v.one() - v.x() * G;
}

MasterParts master_wdes(const XAssignment& A, Summation how) {
  check_assignment(A);
  Vars v{A, A.order, A.zdim};
  TSeries y = v.y();
  TSeries W(v.N, v.zdim);
  if (how == Summation::recurrence) {
    // F(c): weakly decreasing words ending in c, built from the largest letter down
    std::vector<TSeries> F(static_cast<std::size_t>(A.k) + 1);
    for (int c = A.k; c >= 1; --c) {
      TSeries acc = v.one();
      for (int a = c + 1; a <= A.k; ++a) acc += F[a] * (A.x_at(a, c) - y);
      F[c] = v.zt(c) * acc * (v.zt(c) * (A.x_at(c, c) - y)).geom();
      W += F[c];
    }
  } else {
    std::vector<int> w;
    for (int n = 1; n <= v.N; ++n)
      weakly_decreasing_words(A.k, n, w, [&](const std::vector<int>& word) {
        TSeries term = v.zt(word[0]);
        for (std::size_t i = 1; i < word.size(); ++i)
          term = term * (A.x_at(word[i - 1], word[i]) - y) * v.zt(word[i]);
        W += term;
      });
  }
  MasterParts p;
  p.inner = W;
  p.numerator = v.one() - (v.x() + y) * W;
  p.denominator = v.one() - y * W;
  return p;
}

}  // namespace desavoid
