#include "heckez/laurent.hpp"

#include <sstream>
#include <vector>

namespace heckez {

LaurentPoly LaurentPoly::monomial(Int c, int exp) {
  LaurentPoly p;
  p.set(exp, std::move(c));
  return p;
}

bool LaurentPoly::is_one() const {
  return coeff_.size() == 1 && coeff_.begin()->first == 0 &&
         coeff_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
  if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
  return coeff_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
  return coeff_.rbegin()->first;
}

Int LaurentPoly::coeff(int exp) const {
  auto it = coeff_.find(exp);
  return it == coeff_.end() ? Int(0) : it->second;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : coeff_) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? Int(-g) : g;
}

Int LaurentPoly::eval_one() const {
  Int s = 0;
  for (const auto& [e, c] : coeff_) s += c;
  return s;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeff_) r.coeff_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeff_) r.set(e, r.coeff(e) + c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeff_) r.set(e, r.coeff(e) - c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeff_)
    for (const auto& [e2, c2] : o.coeff_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeff_) r.coeff_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::divided_by_int(const Int& d) const {
  if (d == 0) throw std::domain_error("division by zero integer");
  LaurentPoly r;
  for (const auto& [e, c] : coeff_) {
    if (c % d != 0) throw std::domain_error("inexact integer division of polynomial");
    r.coeff_.emplace(e, c / d);
  }
  return r;
}

namespace {

// Dense coefficient vector for polynomials with nonnegative exponents,
// index = exponent.
std::vector<Int> to_dense(const LaurentPoly& p) {
  std::vector<Int> d(static_cast<size_t>(p.max_exp()) + 1, Int(0));
  for (const auto& [e, c] : p.terms()) {
    if (e < 0) throw std::domain_error("negative exponent in gcd path");
    d[static_cast<size_t>(e)] = c;
  }
  return d;
}

LaurentPoly from_dense(const std::vector<Int>& d) {
  LaurentPoly p;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) p = p + LaurentPoly::monomial(d[i], static_cast<int>(i));
  return p;
}

void trim(std::vector<Int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Pseudo-remainder of a by b (b nonzero), dense representation.
std::vector<Int> prem(std::vector<Int> a, const std::vector<Int>& b) {
  trim(a);
  const Int& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    Int la = a.back();
    size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

void make_primitive(std::vector<Int>& a) {
  Int g = 0;
  for (const auto& c : a) g = boost::multiprecision::gcd(g, c);
  if (g > 1)
    for (auto& c : a) c /= g;
}

}  // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero())
    throw std::domain_error("gcd of zero polynomial");
  // Monomial fast path: gcd with c*v^k is v^min(trailing exponents).
  if (a.is_monomial() || b.is_monomial()) {
    int k = std::min(a.min_exp(), b.min_exp());
    return v_power(k);
  }
  std::vector<Int> x = to_dense(a), y = to_dense(b);
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<Int> r = prem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.back() < 0)
    for (auto& c : x) c = -c;
  return from_dense(x);
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return LaurentPoly();
  if (b.is_monomial()) {
    const auto& [be, bc] = *b.terms().begin();
    LaurentPoly q;
    for (const auto& [e, c] : a.terms()) {
      if (c % bc != 0) throw std::domain_error("inexact polynomial division");
      q.coeff_.emplace(e - be, c / bc);
    }
    return q;
  }
  LaurentPoly aa = a.shifted(a.min_exp() < 0 ? -a.min_exp() : 0);
  LaurentPoly bb = b.shifted(b.min_exp() < 0 ? -b.min_exp() : 0);
  std::vector<Int> x = to_dense(aa), y = to_dense(bb);
  std::vector<Int> q(x.size(), Int(0));
  while (x.size() >= y.size() && !x.empty()) {
    if (x.back() % y.back() != 0) throw std::domain_error("inexact polynomial division");
    Int f = x.back() / y.back();
    size_t shift = x.size() - y.size();
    q[shift] = f;
    for (size_t i = 0; i < y.size(); ++i) x[i + shift] -= f * y[i];
    trim(x);
  }
  if (!x.empty()) throw std::domain_error("inexact polynomial division");
  LaurentPoly r = from_dense(q);
  // Undo the exponent shifts applied above.
  int back = (a.min_exp() < 0 ? a.min_exp() : 0) - (b.min_exp() < 0 ? b.min_exp() : 0);
  return r.shifted(back);
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    const int e = it->first;
    const Int& c = it->second;
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace heckez
