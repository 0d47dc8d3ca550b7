#pragma once

#include "heckez/center.hpp"
#include "heckez/linalg.hpp"
#include "heckez/symfunc.hpp"

#include <map>
#include <memory>

namespace heckez {

/// Irreducible character values: rows are the characters chi^lambda_v,
/// columns the elements T_{w_mu}, both in canonical partition order.
/// Entry (lambda, mu) is the coefficient of s_lambda in h_bar(mu); at
/// v = 1 the matrix is the ordinary character table of S_n and the
/// identity column carries the degrees.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> order;
  RfMatrix values;

  const RatFun& value(const Partition& lambda, const Partition& mu) const;
};

/// Memoized per n; persists through the on-disk cache when configured.
std::shared_ptr<const CharacterTable> character_table(int n);

/// chi^lambda_v(T_w) = sum_mu f_{w,mu} chi^lambda_v(T_{w_mu}).
RatFun char_value(const Partition& lambda, const Permutation& w);

/// Schur element kappa_lambda(v), by the orthogonality sum
/// (1/d_lambda) sum_w v^(-length(w)) chi(T_w) chi(T_{w^-1}).
RatFun schur_element(const Partition& lambda);

/// Poincare polynomial of S_n: sum_w v^(length(w)).
RatFun poincare(int n);

/// Generic degree d_lambda(v) = P_n(v) / kappa_lambda(v); a polynomial
/// with d_lambda(1) the ordinary degree.
RatFun generic_degree(const Partition& lambda);

/// Central primitive idempotent
/// e^lambda_v = (1/kappa) sum_w chi(T_w) T_w^v; the equivalent expansion
/// (1/kappa) sum_mu chi(T_{w_mu}) f*_mu is cross-checked internally.
HeckeElement central_idempotent(const Partition& lambda);

/// The same idempotent in Geck-Rouquier coordinates.
CentralElement central_idempotent_coords(const Partition& lambda);

/// The Frobenius map: f*_lambda -> m_bar(lambda), extended linearly.
SymFun psi(const CentralElement& z);

/// Inverse of psi on homogeneous degree-n symmetric functions: expand over
/// the m-bar family by an exact linear solve.
CentralElement psi_inv(const SymFun& f);

/// A virtual character: coefficients on the irreducible characters
/// chi^lambda_v. Rational-function coefficients are allowed; integrality
/// is asserted only where the theory asserts it.
class VirtualCharacter {
public:
  explicit VirtualCharacter(int n) : n_(n) {}
  VirtualCharacter(int n, std::map<Partition, RatFun> coords);

  static VirtualCharacter irreducible(const Partition& lambda);

  int n() const { return n_; }
  const std::map<Partition, RatFun>& coords() const { return coords_; }
  RatFun coord(const Partition& lambda) const;

  VirtualCharacter& add(const Partition& lambda, const RatFun& c);

  /// Value chi(T_w).
  RatFun operator()(const Permutation& w) const;

private:
  int n_;
  std::map<Partition, RatFun> coords_;
};

/// The v-characteristic map, computed from its definition:
/// chi^lambda_v -> (P_n / d_lambda) Psi(e^lambda_v). (By the theory the
/// image of an irreducible is s_lambda; that equality is verified by the
/// test suite, not wired in.)
SymFun ch_v(const VirtualCharacter& chi);

/// Theta: chi -> chi* = sum_w chi(T_w) T_w^v, decomposed over the
/// Geck-Rouquier basis.
CentralElement theta(const VirtualCharacter& chi);

/// Induction product on virtual characters: on irreducibles the
/// multiplicities are the Littlewood-Richardson coefficients.
VirtualCharacter induce(const VirtualCharacter& a, const VirtualCharacter& b);

/// The classical Frobenius map: class-sum coordinates -> sum a_lambda
/// p_lambda / z_lambda, over Q.
SymFun classical_psi(int n, const std::map<Partition, RatFun>& class_coords);

/// The deformed product on degree-n symmetric functions determined by
/// s_lambda * s_mu = delta kappa_lambda s_lambda (diagonal in the Schur
/// basis).
SymFun star_product(const SymFun& f, const SymFun& g);

}  // namespace heckez
