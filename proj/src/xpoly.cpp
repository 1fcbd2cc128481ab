#include <algorithm>

#include "desavoid/algebra.hpp"
#include "desavoid/error.hpp"

namespace desavoid {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw InvalidArgument("bad rational '" + text + "'");
  if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.x = a.x + b.x;
  m.z = a.z;
  for (std::size_t i = 0; i < b.z.size(); ++i) m.z[i] += b.z[i];
  return m;
}

bool by_monomial(const Term& a, const Term& b) { return a.m < b.m; }

}  // namespace

XPoly XPoly::constant(const Rational& c, int zdim) { return monomial(c, 0, zdim); }

XPoly XPoly::monomial(const Rational& c, unsigned x_exp, int zdim) {
  Monomial m;
  m.x = x_exp;
  m.z.assign(static_cast<std::size_t>(zdim), 0);
  return monomial(c, std::move(m), zdim);
}

XPoly XPoly::monomial(const Rational& c, Monomial m, int zdim) {
  XPoly p(zdim);
  if (static_cast<int>(m.z.size()) != zdim) throw ZModeMismatch("monomial z length differs from zdim");
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

XPoly XPoly::z_var(int i, int zdim) {
  if (i < 1 || i > zdim) throw InvalidArgument("z index out of range");
  Monomial m;
  m.z.assign(static_cast<std::size_t>(zdim), 0);
  m.z[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(1, std::move(m), zdim);
}

XPoly XPoly::one_minus_x(int zdim) {
  return constant(1, zdim) - monomial(1, 1, zdim);
}

XPoly XPoly::from_terms(std::vector<Term> terms, int zdim) {
  XPoly p(zdim);
  for (const auto& t : terms)
    if (static_cast<int>(t.m.z.size()) != zdim) throw ZModeMismatch("term z length differs from zdim");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void XPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), by_monomial);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  terms_ = std::move(out);
}

void XPoly::check_same(const XPoly& o) const {
  if (zdim_ != o.zdim_)
    throw ZModeMismatch("z-mode mismatch: zdim " + std::to_string(zdim_) + " vs " +
                        std::to_string(o.zdim_));
}

unsigned XPoly::x_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.x);
  return d;
}

bool XPoly::is_constant(const Rational& c) const {
  if (c == 0) return terms_.empty();
  if (terms_.size() != 1 || terms_[0].c != c || terms_[0].m.x != 0) return false;
  return std::all_of(terms_[0].m.z.begin(), terms_[0].m.z.end(), [](auto e) { return e == 0; });
}

Rational XPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, by_monomial);
  if (it != terms_.end() && it->m == m) return it->c;
  return 0;
}

Rational XPoly::coeff(unsigned x_exp) const {
  if (zdim_ != 0) throw ZModeMismatch("coeff(x^m) needs z = 1 mode");
  return coeff(Monomial{x_exp, {}});
}

XPoly& XPoly::operator+=(const XPoly& o) {
  check_same(o);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->m < b->m)) {
      out.push_back(std::move(*a++));
    } else if (a == ae || b->m < a->m) {
      out.push_back(*b++);
    } else {
      Rational c = a->c + b->c;
      if (c != 0) out.push_back({std::move(a->m), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) { return *this += -o; }

XPoly& XPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= c;
  return *this;
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

bool XPoly::operator==(const XPoly& o) const {
  if (zdim_ != o.zdim_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  a.check_same(b);
  XPoly r(a.zdim_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.zdim_ == 0) {
    // dense convolution in x
    std::vector<Rational> dense(a.x_degree() + b.x_degree() + 1);
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) dense[s.m.x + t.m.x] += s.c * t.c;
    for (unsigned e = 0; e < dense.size(); ++e)
      if (dense[e] != 0) r.terms_.push_back({Monomial{e, {}}, std::move(dense[e])});
    return r;
  }
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) r.terms_.push_back({mul(s.m, t.m), s.c * t.c});
  r.normalize();
  return r;
}

XPoly XPoly::at_x(const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.c;
    for (unsigned e = 0; e < t.m.x; ++e) c *= value;
    out.push_back({Monomial{0, t.m.z}, std::move(c)});
  }
  return from_terms(std::move(out), zdim_);
}

XPoly XPoly::specialize_z_ones() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({Monomial{t.m.x, {}}, t.c});
  return from_terms(std::move(out), 0);
}

XPoly XPoly::divide_exact_by_one_minus_x() const {
  // p = (1 - x) q. Group by z; within a group q_e = sum_{i <= e} p_i,
  // and the full sum of p must vanish.
  std::vector<Term> src = terms_;
  std::sort(src.begin(), src.end(), [](const Term& a, const Term& b) {
    return a.m.z != b.m.z ? a.m.z < b.m.z : a.m.x < b.m.x;
  });
  std::vector<Term> out;
  std::size_t i = 0;
  while (i < src.size()) {
    std::size_t end = i;
    while (end < src.size() && src[end].m.z == src[i].m.z) ++end;
    Rational run = 0;
    for (std::size_t p = i; p < end; ++p) {
      run += src[p].c;
      unsigned next = p + 1 < end ? src[p + 1].m.x : src[p].m.x + 1;
      if (run != 0)
        for (unsigned e = src[p].m.x; e < next; ++e) out.push_back({Monomial{e, src[p].m.z}, run});
    }
    if (run != 0) throw Error("polynomial is not divisible by 1 - x");
    i = end;
  }
  return from_terms(std::move(out), zdim_);
}

XPoly XPoly::lifted(int zdim) const {
  if (zdim_ == zdim) return *this;
  if (zdim_ != 0) throw ZModeMismatch("only z = 1 polynomials can be lifted");
  std::vector<Term> out;
  for (const auto& t : terms_)
    out.push_back({Monomial{t.m.x, std::vector<std::uint16_t>(static_cast<std::size_t>(zdim), 0)}, t.c});
  return from_terms(std::move(out), zdim);
}

}  // namespace desavoid
