// Helpers for writing expected series in tests.
#pragma once

#include <initializer_list>

#include "desavoid/algebra.hpp"

namespace testing_support {

using desavoid::Rational;
using desavoid::TSeries;
using desavoid::XPoly;

struct Sym {
  int zdim = 0;
  int order = 0;

  XPoly c(const Rational& v) const { return XPoly::constant(v, zdim); }
  XPoly x(unsigned e = 1) const { return XPoly::monomial(1, e, zdim); }
  XPoly z(int i) const { return zdim ? XPoly::z_var(i, zdim) : c(1); }
  XPoly zs(std::initializer_list<int> idx) const {
    XPoly p = c(1);
    for (int i : idx) p = p * z(i);
    return p;
  }
  // z_lo + ... + z_hi, zero when empty
  XPoly zsum(int lo, int hi) const {
    XPoly p(zdim);
    for (int i = lo; i <= hi; ++i) p += z(i);
    return p;
  }
  // sum over lo <= c < d <= hi of z_c z_d
  XPoly zpairs(int lo, int hi) const {
    XPoly p(zdim);
    for (int a = lo; a <= hi; ++a)
      for (int b = a + 1; b <= hi; ++b) p += z(a) * z(b);
    return p;
  }
  TSeries t(const XPoly& coeff, int n) const { return TSeries::term(coeff, n, order); }
  TSeries s(const XPoly& coeff) const { return TSeries::constant(coeff, order); }
  TSeries zero() const { return TSeries(order, zdim); }
  TSeries one_minus_x() const { return s(XPoly::one_minus_x(zdim)); }
};

inline TSeries from_ints(std::initializer_list<std::initializer_list<long>> rows, int order) {
  TSeries s = TSeries::one(order);
  int n = 1;
  for (const auto& row : rows) {
    unsigned e = 1;
    XPoly p;
    for (long v : row) p += XPoly::monomial(v, e++);
    if (n <= order) s.at(n) = p;
    ++n;
  }
  return s;
}

}  // namespace testing_support
