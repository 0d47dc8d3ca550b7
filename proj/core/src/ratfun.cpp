#include "heckez/ratfun.hpp"

#include <cctype>
#include <sstream>

namespace heckez {

RatFun::RatFun(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
  canonicalize();
}

RatFun RatFun::v_power(int k) {
  if (k >= 0) return RatFun(LaurentPoly::v_power(k));
  return RatFun(LaurentPoly(1), LaurentPoly::v_power(-k));
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Clear negative exponents: v is a unit, so this is lossless.
  int m = std::min(num_.min_exp(), den_.min_exp());
  if (m != 0) {
    num_ = num_.shifted(-m);
    den_ = den_.shifted(-m);
  }
  // Reduce the integer contents against each other.
  Int cn = num_.content(), cd = den_.content();
  Int g = boost::multiprecision::gcd(cn, cd);
  if (g > 1) {
    num_ = num_.divided_by_int(g);
    den_ = den_.divided_by_int(g);
  }
  // Cancel the polynomial gcd of the primitive parts.
  if (!den_.is_one()) {
    LaurentPoly h = LaurentPoly::gcd(num_, den_);
    if (!h.is_one()) {
      num_ = LaurentPoly::divide_exact(num_, h);
      den_ = LaurentPoly::divide_exact(den_, h);
    }
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    RatFun r;
    r.num_ = num_ + o.num_;
    r.den_ = LaurentPoly(1);
    if (r.num_.is_zero()) return RatFun();
    return r;
  }
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  if (is_zero() || o.is_zero()) return RatFun();
  if (den_.is_one() && o.den_.is_one()) {
    RatFun r;
    r.num_ = num_ * o.num_;
    r.den_ = LaurentPoly(1);
    return r;
  }
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
  if (is_zero()) return RatFun();
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::pow(int k) const {
  if (k == 0) return RatFun(1);
  if (k < 0) return RatFun(1) / pow(-k);
  RatFun r(1), base = *this;
  int e = k;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

RatFun RatFun::eval_at_one() const {
  Int d = den_.eval_one();
  if (d == 0)
    throw std::domain_error("RatFun: pole at v = 1 (denominator " + den_.str() +
                            " vanishes)");
  return RatFun(LaurentPoly(num_.eval_one()), LaurentPoly(d));
}

namespace {

// A printed polynomial needs no parentheses in a fraction when it is a
// single positive term with coefficient 1 (v, v^k) or a bare nonnegative
// integer.
bool is_bare_atom(const LaurentPoly& p) {
  if (p.is_zero()) return true;
  if (!p.is_monomial()) return false;
  const auto& [e, c] = *p.terms().begin();
  if (e == 0) return c >= 0;
  return c == 1;
}

}  // namespace

std::string RatFun::str() const {
  if (den_.is_one()) return num_.str();
  std::ostringstream os;
  if (is_bare_atom(num_))
    os << num_.str();
  else
    os << "(" << num_.str() << ")";
  os << "/";
  if (is_bare_atom(den_))
    os << den_.str();
  else
    os << "(" << den_.str() << ")";
  return os.str();
}

namespace {

class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  RatFun parse() {
    RatFun r = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw std::invalid_argument("RatFun parse error at offset " +
                                  std::to_string(pos_) + " in: " + s_);
    return r;
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  RatFun expr() {
    RatFun r = term();
    while (true) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }

  RatFun term() {
    RatFun r = factor();
    while (true) {
      if (eat('*'))
        r = r * factor();
      else if (eat('/'))
        r = r / factor();
      else
        return r;
    }
  }

  RatFun factor() {
    bool neg = false;
    while (true) {
      if (eat('-'))
        neg = !neg;
      else if (eat('+'))
        ;
      else
        break;
    }
    RatFun a = atom();
    if (eat('^')) {
      bool eneg = eat('-');
      long k = integer();
      a = a.pow(static_cast<int>(eneg ? -k : k));
    }
    return neg ? -a : a;
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw std::invalid_argument("RatFun parse: expected integer in: " + s_);
    return std::stol(s_.substr(start, pos_ - start));
  }

  RatFun atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw std::invalid_argument("RatFun parse: unexpected end of: " + s_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFun r = expr();
      if (!eat(')')) throw std::invalid_argument("RatFun parse: missing ')' in: " + s_);
      return r;
    }
    if (c == 'v') {
      ++pos_;
      return RatFun::v();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFun(Int(s_.substr(start, pos_ - start)));
    }
    throw std::invalid_argument("RatFun parse: unexpected character '" +
                                std::string(1, c) + "' in: " + s_);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

RatFun RatFun::parse(const std::string& text) { return Parser(text).parse(); }

}  // namespace heckez
