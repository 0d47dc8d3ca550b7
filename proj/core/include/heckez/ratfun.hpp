#pragma once

#include "heckez/laurent.hpp"

#include <string>

namespace heckez {

/// An exact element of Q(v): reduced fraction num/den of integer
/// Laurent polynomials, shifted so both have only nonnegative exponents.
///
/// Canonical form (unique per rational function):
///   - den nonzero, with positive leading coefficient;
///   - gcd of the primitive parts of num and den is 1 over Q[v];
///   - gcd of the integer contents of num and den is 1.
///
/// Values are immutable after construction; all operations are pure.
class RatFun {
public:
  RatFun() : num_(), den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}
  explicit RatFun(const Int& c) : num_(c), den_(1) {}
  explicit RatFun(const LaurentPoly& p) : num_(p), den_(1) { canonicalize(); }
  RatFun(LaurentPoly num, LaurentPoly den);

  /// v^k as a rational function (k may be negative).
  static RatFun v_power(int k);
  static RatFun v() { return v_power(1); }

  /// Parse the canonical printing (and ordinary arithmetic expressions in
  /// v: integers, `v`, `^`, `*`, `/`, `+`, `-`, parentheses).
  static RatFun parse(const std::string& text);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True iff den = 1 after canonicalization, i.e. the value lies in Z[v].
  bool is_polynomial() const { return den_.is_one(); }
  /// True iff den is a power of v, i.e. the value lies in Z[v, v^-1].
  bool is_laurent() const { return den_.is_monomial() && den_.leading() == 1; }
  /// True iff the value is a rational constant.
  bool is_constant() const {
    return (num_.is_zero() || num_.max_exp() == 0) && den_.max_exp() == 0;
  }

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  /// Throws std::domain_error on division by zero.
  RatFun operator/(const RatFun& o) const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  RatFun pow(int k) const;

  bool operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  bool has_pole_at_one() const { return den_.eval_one() == 0; }

  /// Exact value at v = 1, as a constant RatFun. Since the stored fraction
  /// is reduced, a vanishing denominator is a genuine pole: throws
  /// std::domain_error.
  RatFun eval_at_one() const;

  /// Canonical printing: `NUM` when den = 1, else `NUM/DEN` where each side
  /// is parenthesized unless it is a bare atom (a nonnegative integer, `v`,
  /// or `v^k`). Examples: `v - 1`, `1/v`, `1/2`, `(v - 1)/(v + 1)`.
  std::string str() const;

private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

inline RatFun operator*(long c, const RatFun& r) { return RatFun(c) * r; }

}  // namespace heckez
