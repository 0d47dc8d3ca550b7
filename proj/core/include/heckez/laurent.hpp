#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace heckez {

/// Arbitrary-precision integer. Coefficients grow quickly in
/// class-polynomial reductions, so fixed-width types are not an option.
using Int = boost::multiprecision::cpp_int;

/// An element of Z[v, v^-1]: sparse map from exponent to nonzero
/// coefficient. The zero polynomial is the empty map.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long c) { set(0, Int(c)); }
  explicit LaurentPoly(const Int& c) { set(0, c); }

  static LaurentPoly monomial(Int c, int exp);
  /// v^exp
  static LaurentPoly v_power(int exp) { return monomial(Int(1), exp); }

  bool is_zero() const { return coeff_.empty(); }
  bool is_one() const;
  /// Single-term polynomial c*v^k.
  bool is_monomial() const { return coeff_.size() == 1; }

  /// Lowest/highest exponent with nonzero coefficient; requires nonzero.
  int min_exp() const;
  int max_exp() const;

  Int coeff(int exp) const;
  const std::map<int, Int>& terms() const { return coeff_; }

  /// Coefficient of the highest-exponent term; 0 for the zero polynomial.
  Int leading() const { return is_zero() ? Int(0) : coeff_.rbegin()->second; }

  /// Positive gcd of all coefficients; 0 for the zero polynomial.
  Int content() const;

  /// Sum of coefficients, i.e. the value at v = 1.
  Int eval_one() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;

  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;

  /// Divide every coefficient by d, which must divide exactly.
  LaurentPoly divided_by_int(const Int& d) const;

  bool operator==(const LaurentPoly& o) const { return coeff_ == o.coeff_; }

  /// gcd of the primitive parts over Z[v], primitive with positive leading
  /// coefficient. Both arguments must be nonzero with nonnegative exponents.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  /// Exact division a / b in Z[v]; throws std::domain_error if not exact.
  static LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

  /// Dense canonical printing in decreasing exponent: terms `c*v^k` joined
  /// by ` + `/` - `, coefficient 1 elided, exponent 1 as `v`, exponent 0 as
  /// a bare integer. The zero polynomial prints `0`.
  std::string str() const;

private:
  void set(int exp, Int c) {
    if (c == 0)
      coeff_.erase(exp);
    else
      coeff_[exp] = std::move(c);
  }

  std::map<int, Int> coeff_;

  friend class RatFun;
};

}  // namespace heckez
