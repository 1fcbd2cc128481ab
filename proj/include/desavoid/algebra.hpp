#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace desavoid {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// x^x_exp times z^z. In ones mode z is empty.
struct Monomial {
  unsigned x = 0;
  std::vector<std::uint16_t> z;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

struct Term {
  Monomial m;
  Rational c;
};

// Sparse polynomial in x over the rationals, optionally carrying a
// z-multidegree of fixed length zdim. zdim == 0 is the z = 1 mode.
// Terms are kept sorted by monomial with no zero coefficients.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(int zdim) : zdim_(zdim) {}

  static XPoly constant(const Rational& c, int zdim = 0);
  static XPoly monomial(const Rational& c, unsigned x_exp, int zdim = 0);
  static XPoly monomial(const Rational& c, Monomial m, int zdim);
  static XPoly z_var(int i, int zdim);  // z_i, i in 1..zdim
  static XPoly one_minus_x(int zdim = 0);
  static XPoly from_terms(std::vector<Term> terms, int zdim);

  int zdim() const { return zdim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  unsigned x_degree() const;
  bool is_constant(const Rational& c) const;

  Rational coeff(const Monomial& m) const;
  Rational coeff(unsigned x_exp) const;  // ones mode only

  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const Rational& c);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(XPoly a, const Rational& c) { return a *= c; }
  XPoly operator-() const;
  bool operator==(const XPoly& o) const;

  // Evaluate at x = value, leaving z untouched.
  XPoly at_x(const Rational& value) const;
  // Set every z_i to 1.
  XPoly specialize_z_ones() const;
  // Exact quotient by (1 - x); throws Error when there is a remainder.
  XPoly divide_exact_by_one_minus_x() const;
  // Same z-multidegree, lifted into a symbolic space. Only from ones mode
  // constants (polys in x alone).
  XPoly lifted(int zdim) const;

 private:
  void check_same(const XPoly& o) const;
  void normalize();

  std::vector<Term> terms_;
  int zdim_ = 0;
};

// Truncated power series in t with XPoly coefficients for t^0..t^order.
class TSeries {
 public:
  TSeries() = default;
  TSeries(int order, int zdim);

  static TSeries constant(const XPoly& c, int order);
  static TSeries one(int order, int zdim = 0);
  // c * t^n
  static TSeries term(const XPoly& c, int n, int order);

  int order() const { return order_; }
  int zdim() const { return zdim_; }
  // Throws Error for n > order.
  const XPoly& operator[](int n) const;
  XPoly& at(int n);

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const TSeries& a, const XPoly& c);
  TSeries operator-() const;
  bool operator==(const TSeries& o) const;

  TSeries truncated(int order) const;
  TSeries times_t(int m = 1) const;
  TSeries reciprocal() const;  // needs S[0] == 1, else NonUnit
  TSeries geom() const;        // 1/(1-a), needs a[0] == 0
  TSeries specialize_z_ones() const;
  TSeries at_x(const Rational& value) const;
  TSeries divide_exact_by_one_minus_x() const;
  // Coefficient of x^m t^n for n = 0..order. Ones mode only.
  std::vector<Rational> x_slice(unsigned m) const;

 private:
  void check_same(const TSeries& o) const;

  int order_ = 0;
  int zdim_ = 0;
  std::vector<XPoly> c_;
};

// Polynomial in t with rational coefficients, lowest degree first.
using RationalPoly = std::vector<Rational>;

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_pow(const RationalPoly& a, unsigned e);
// S * den == num through the length of S.
bool rational_match(const std::vector<Rational>& s, const RationalPoly& num,
                    const RationalPoly& den);
// The unique num of degree < |s| with s * den == num + O(t^|s|).
RationalPoly series_times(const std::vector<Rational>& s, const RationalPoly& den);

}  // namespace desavoid
