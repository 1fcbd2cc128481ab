#include <algorithm>

#include "desavoid/algebra.hpp"
#include "desavoid/error.hpp"

namespace desavoid {

TSeries::TSeries(int order, int zdim) : order_(order), zdim_(zdim) {
  if (order < 0) throw InvalidArgument("series order must be >= 0");
  c_.assign(static_cast<std::size_t>(order) + 1, XPoly(zdim));
}

TSeries TSeries::constant(const XPoly& c, int order) {
  TSeries s(order, c.zdim());
  s.c_[0] = c;
  return s;
}

TSeries TSeries::one(int order, int zdim) { return constant(XPoly::constant(1, zdim), order); }

TSeries TSeries::term(const XPoly& c, int n, int order) {
  TSeries s(order, c.zdim());
  if (n < 0) throw InvalidArgument("negative t power");
  if (n <= order) s.c_[static_cast<std::size_t>(n)] = c;
  return s;
}

const XPoly& TSeries::operator[](int n) const {
  if (n < 0 || n > order_)
    throw Error("coefficient t^" + std::to_string(n) + " is beyond the series order " +
                std::to_string(order_));
  return c_[static_cast<std::size_t>(n)];
}

XPoly& TSeries::at(int n) {
  if (n < 0 || n > order_)
    throw Error("coefficient t^" + std::to_string(n) + " is beyond the series order " +
                std::to_string(order_));
  return c_[static_cast<std::size_t>(n)];
}

void TSeries::check_same(const TSeries& o) const {
  if (zdim_ != o.zdim_)
    throw ZModeMismatch("z-mode mismatch: zdim " + std::to_string(zdim_) + " vs " +
                        std::to_string(o.zdim_));
}

TSeries& TSeries::operator+=(const TSeries& o) {
  check_same(o);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int n = 0; n <= order_; ++n) c_[n] += o.c_[n];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  check_same(o);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int n = 0; n <= order_; ++n) c_[n] -= o.c_[n];
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  a.check_same(b);
  TSeries r(std::min(a.order_, b.order_), a.zdim_);
  for (int i = 0; i <= r.order_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order_; ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TSeries operator*(const TSeries& a, const XPoly& c) {
  if (a.zdim_ != c.zdim()) throw ZModeMismatch("z-mode mismatch in scalar product");
  TSeries r(a.order_, a.zdim_);
  for (int n = 0; n <= a.order_; ++n) r.c_[n] = a.c_[n] * c;
  return r;
}

TSeries TSeries::operator-() const {
  TSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool TSeries::operator==(const TSeries& o) const {
  return order_ == o.order_ && zdim_ == o.zdim_ && c_ == o.c_;
}

TSeries TSeries::truncated(int order) const {
  if (order > order_) throw Error("cannot extend a series beyond its order");
  TSeries r(order, zdim_);
  std::copy(c_.begin(), c_.begin() + order + 1, r.c_.begin());
  return r;
}

TSeries TSeries::times_t(int m) const {
  TSeries r(order_, zdim_);
  for (int n = 0; n + m <= order_; ++n) r.c_[n + m] = c_[n];
  return r;
}

TSeries TSeries::reciprocal() const {
  if (!c_[0].is_constant(1))
    throw NonUnit("series_reciprocal needs constant term 1");
  TSeries r(order_, zdim_);
  r.c_[0] = c_[0];
  for (int n = 1; n <= order_; ++n) {
    XPoly acc(zdim_);
    for (int m = 1; m <= n; ++m)
      if (!c_[m].is_zero() && !r.c_[n - m].is_zero()) acc += c_[m] * r.c_[n - m];
    r.c_[n] = -acc;
  }
  return r;
}

TSeries TSeries::geom() const {
  if (!c_[0].is_zero()) throw NonUnit("series_geom needs zero constant term");
  return (one(order_, zdim_) - *this).reciprocal();
}

TSeries TSeries::specialize_z_ones() const {
  TSeries r(order_, 0);
  for (int n = 0; n <= order_; ++n) r.c_[n] = c_[n].specialize_z_ones();
  return r;
}

TSeries TSeries::at_x(const Rational& value) const {
  TSeries r(order_, zdim_);
  for (int n = 0; n <= order_; ++n) r.c_[n] = c_[n].at_x(value);
  return r;
}

TSeries TSeries::divide_exact_by_one_minus_x() const {
  TSeries r(order_, zdim_);
  for (int n = 0; n <= order_; ++n) r.c_[n] = c_[n].divide_exact_by_one_minus_x();
  return r;
}

std::vector<Rational> TSeries::x_slice(unsigned m) const {
  if (zdim_ != 0) throw ZModeMismatch("x_slice needs z = 1 mode");
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.coeff(m));
  return out;
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

RationalPoly poly_pow(const RationalPoly& a, unsigned e) {
  RationalPoly r{1};
  for (unsigned i = 0; i < e; ++i) r = poly_mul(r, a);
  return r;
}

RationalPoly series_times(const std::vector<Rational>& s, const RationalPoly& den) {
  RationalPoly out(s.size());
  for (std::size_t n = 0; n < s.size(); ++n)
    for (std::size_t i = 0; i <= n && i < den.size(); ++i) out[n] += den[i] * s[n - i];
  return out;
}

bool rational_match(const std::vector<Rational>& s, const RationalPoly& num,
                    const RationalPoly& den) {
  if (den.empty() || den[0] == 0) throw InvalidArgument("rational_match needs den(0) != 0");
  RationalPoly lhs = series_times(s, den);
  for (std::size_t n = 0; n < s.size(); ++n) {
    Rational want = n < num.size() ? num[n] : Rational(0);
    if (lhs[n] != want) return false;
  }
  return true;
}

}  // namespace desavoid
