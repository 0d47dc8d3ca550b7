#pragma once

#include "heckez/linalg.hpp"
#include "heckez/partitions.hpp"
#include "heckez/ratfun.hpp"

#include <map>
#include <string>
#include <vector>

namespace heckez {

/// The five classical bases of the ring of symmetric functions.
enum class Basis : char { m = 'm', e = 'e', h = 'h', p = 'p', s = 's' };

Basis basis_from_char(char c);
char basis_char(Basis b);

/// A homogeneous symmetric function over Q(v), stored as exact coefficients
/// on a declared basis. Graded sums are handled by lists of SymFun.
class SymFun {
public:
  SymFun() = default;
  SymFun(int degree, Basis basis) : degree_(degree), basis_(basis) {}
  SymFun(int degree, Basis basis, std::map<Partition, RatFun> coeffs);

  /// The basis element b_lambda itself.
  static SymFun basis_element(Basis basis, const Partition& lambda);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::map<Partition, RatFun>& coeffs() const { return coeffs_; }
  RatFun coeff(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }

  SymFun& add_term(const Partition& lambda, const RatFun& c);
  SymFun operator+(const SymFun& o) const;
  SymFun operator-(const SymFun& o) const;
  SymFun scaled(const RatFun& c) const;

  /// Terms `(coeff)*b[parts]` joined by ` + ` in canonical partition order.
  std::string str() const;

private:
  int degree_ = 0;
  Basis basis_ = Basis::m;
  std::map<Partition, RatFun> coeffs_;
};

/// Row lambda expresses the from-basis element lambda in the to-basis;
/// rows and columns run over partitions_of(n) in canonical order.
struct TransitionMatrix {
  int n = 0;
  Basis from = Basis::m;
  Basis to = Basis::m;
  std::vector<Partition> order;
  RfMatrix entries;
};

/// Exact transition matrix between two classical bases, memoized per
/// (from, to, n) with at-most-once computation under concurrency.
const TransitionMatrix& transition_matrix(Basis from, Basis to, int n);

/// D = diag((v-1)^(n - length(lambda))) over partitions of n.
TransitionMatrix d_matrix(int n);

/// Re-express f in the target basis, exactly.
SymFun convert(const SymFun& f, Basis target);

/// Equality as symmetric functions (independent of declared basis).
bool sf_equal(const SymFun& a, const SymFun& b);

/// Product, homogeneous of degree deg f + deg g, in the basis of f.
SymFun sf_mul(const SymFun& f, const SymFun& g);
inline SymFun operator*(const SymFun& f, const SymFun& g) { return sf_mul(f, g); }

enum class PlethysmMode { expand, contract };

/// The lambda-ring substitutions f((v-1)x) / f(x/(v-1)): converts f to the
/// power-sum basis, scales the coefficient of p_lambda by
/// prod_i (v^(lambda_i) - 1)^(+1 | -1), and converts back to f's basis.
SymFun plethysm_scale(const SymFun& f, PlethysmMode mode);

/// m-bar: (v-1)^length(lambda) * m_lambda(x/(v-1)), in the m basis.
SymFun m_bar(const Partition& lambda);

/// h-bar: prod_i h_{mu_i}((v-1)x)/(v-1), in the p basis.
SymFun h_bar(const Partition& mu);

/// Hall pairing with <p_lambda, p_mu> = delta * z_lambda (Schur functions
/// orthonormal). Throws std::invalid_argument on degree mismatch.
RatFun hall_inner(const SymFun& f, const SymFun& g);

/// c^nu_{mu,lambda} = coefficient of s_nu in s_mu * s_lambda, computed via
/// the product and conversion engine. Values are nonnegative integers.
std::map<Partition, Int> lr_coefficients(const Partition& mu, const Partition& lambda);

/// Coefficient-wise evaluation at v = 1; throws std::domain_error on a pole.
SymFun specialize_v1(const SymFun& f);

/// Verifies sum_lambda hbar_lambda(x) mbar_lambda(y) =
/// sum_lambda s_lambda(x) s_lambda(y) for partitions of n, as an exact
/// polynomial identity in 2k truncated variables (k >= n).
bool cauchy_check(int n, int k);

}  // namespace heckez
