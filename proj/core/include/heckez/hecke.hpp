#pragma once

#include "heckez/partitions.hpp"
#include "heckez/permutations.hpp"
#include "heckez/ratfun.hpp"

#include <map>
#include <string>
#include <vector>

namespace heckez {

/// An element of the Hecke algebra H_n over Q(v) in the T_w basis:
/// finitely-supported map from S_n to Q(v). Immutable in spirit; all
/// operations return new values, so sharing across threads is safe.
///
/// Generators satisfy (T_i - v)(T_i + 1) = 0 together with the braid and
/// commutation relations; T_w T_i = T_{w s_i} when the length goes up,
/// else (v-1) T_w + v T_{w s_i}.
class HeckeElement {
public:
  explicit HeckeElement(int n) : n_(n) {}

  /// The unit T_1.
  static HeckeElement unit(int n);
  /// The basis element T_w.
  static HeckeElement t(const Permutation& w);

  int n() const { return n_; }
  const std::map<Permutation, RatFun>& terms() const { return terms_; }
  RatFun coeff(const Permutation& w) const;
  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }

  HeckeElement& add_term(const Permutation& w, const RatFun& c);
  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement scaled(const RatFun& c) const;
  bool operator==(const HeckeElement& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  /// h * T_i, termwise by the quadratic relation.
  HeckeElement t_mul_gen(int i) const;
  /// T_i * h.
  HeckeElement gen_mul_t(int i) const;
  /// h * T_w along a reduced word of w.
  HeckeElement t_mul_word(const Permutation& w) const;

  /// Terms `(coeff)*T[w]` joined by ` + `, in one-line lexicographic order.
  std::string str() const;

private:
  int n_;
  std::map<Permutation, RatFun> terms_;
};

/// Associative bilinear product: b is expanded term by term along reduced
/// words, applying the generator rule letter by letter. Throws
/// std::invalid_argument on size mismatch.
HeckeElement he_mul(const HeckeElement& a, const HeckeElement& b);
inline HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  return he_mul(a, b);
}

/// The canonical symmetrizing trace: coefficient of T_1.
RatFun tau(const HeckeElement& h);

/// The bilinear form induced by tau: (a, b) = tau(a * b);
/// (T_w, T_sigma) = delta_{w, sigma^-1} v^{length(w)}.
RatFun bilinear(const HeckeElement& a, const HeckeElement& b);

/// The dual basis element T_w^v = v^(-length(w)) T_{w^-1}.
HeckeElement t_check(const Permutation& w);

/// T-tilde-squared: v^(-length(w)) T_w T_w. Only the square of the
/// rescaled basis is exposed; it keeps all coefficients inside Q(v).
HeckeElement t_tilde_sq(const Permutation& w);

/// Image in H_n of z_1 x ... x z_l under the Young-subalgebra embedding
/// for alpha: block i (an element of H_{alpha_i}) maps T_w to T of the
/// shifted permutation. Throws std::invalid_argument on block size
/// mismatch.
HeckeElement embed_from_young(const Composition& alpha,
                              const std::vector<HeckeElement>& blocks);

/// True iff h commutes with every generator T_i.
bool is_central(const HeckeElement& h);

/// True iff h lies in the embedded subalgebra H_alpha (every support
/// permutation preserves the alpha-blocks) and commutes with the
/// subalgebra generators.
bool is_central_in_young(const HeckeElement& h, const Composition& alpha);

/// Coefficient-wise evaluation at v = 1 (T_w -> w); throws
/// std::domain_error if any coefficient has a pole at v = 1.
HeckeElement specialize_v1_hecke(const HeckeElement& h);

/// Coordinates of a group-algebra element on class sums; throws
/// std::invalid_argument if the coefficients are not constant on
/// conjugacy classes.
std::map<Partition, RatFun> class_sum_coordinates(const HeckeElement& h);

}  // namespace heckez
