#pragma once

#include "heckez/hecke.hpp"
#include "heckez/partitions.hpp"
#include "heckez/permutations.hpp"

#include <map>
#include <memory>

namespace heckez {

/// The table of class polynomials f_{w,lambda}: T_w is congruent to
/// sum_lambda f_{w,lambda} T_{w_lambda} modulo the commutator subspace.
/// Rows at minimal-length class elements are delta rows; every entry is an
/// integer Laurent polynomial and specializes at v = 1 to the indicator of
/// the cycle type.
struct ClassPolyTable {
  int n = 0;
  std::map<Permutation, std::map<Partition, RatFun>> rows;

  const std::map<Partition, RatFun>& row(const Permutation& w) const;
};

/// Complete table for S_n, computed by length-preserving conjugation
/// search plus the two-sided-descent rewrite
/// T_w = (v-1) T_{ws} + v T_{sws}; memoized per n, shared read-only.
/// Persists through the on-disk cache when HECKEZ_CACHE_DIR is set.
std::shared_ptr<const ClassPolyTable> class_polynomials(int n);

/// A central element in Geck-Rouquier coordinates: h = sum c_lambda f*_lambda.
class CentralElement {
public:
  explicit CentralElement(int n) : n_(n) {}
  CentralElement(int n, std::map<Partition, RatFun> coords);

  int n() const { return n_; }
  const std::map<Partition, RatFun>& coords() const { return coords_; }
  RatFun coord(const Partition& lambda) const;
  bool is_zero() const { return coords_.empty(); }

  CentralElement& add(const Partition& lambda, const RatFun& c);
  CentralElement operator+(const CentralElement& o) const;
  CentralElement scaled(const RatFun& c) const;
  bool operator==(const CentralElement& o) const {
    return n_ == o.n_ && coords_ == o.coords_;
  }

  std::string str() const;

private:
  int n_;
  std::map<Partition, RatFun> coords_;
};

/// The Geck-Rouquier central element
/// f*_lambda = sum_w v^(-length(w)) f_{w,lambda} T_{w^-1}.
HeckeElement gr_element(const Partition& lambda);

/// Expand a CentralElement back to the T_w basis.
HeckeElement central_to_hecke(const CentralElement& z);

/// Exact coordinates of a central element over the Geck-Rouquier basis.
/// The linear system is solved on the T-coordinates at the w_lambda^-1
/// probes (where the basis is triangular by the delta-row property) and the
/// full expansion is then verified; throws std::invalid_argument on
/// non-central input and std::logic_error if the residual is nonzero.
CentralElement decompose_central(const HeckeElement& h);

/// Relative norm N_alpha(h) = sum over minimal coset representatives w of
/// v^(-length(w)) T_w h T_{w^-1}. Requires h in the embedded subalgebra
/// H_alpha and central there (throws std::invalid_argument otherwise);
/// the result is central in H_n.
HeckeElement relative_norm(const Composition& alpha, const HeckeElement& h);

/// The graded product on the direct sum of the centers:
/// z1 of H_m and z2 of H_n multiply to N_{(m,n)}(z1 x z2) in H_{m+n}.
CentralElement circ(const CentralElement& z1, const CentralElement& z2);

/// N_lambda(1), assembled by iterated circ over the parts.
CentralElement norm_one(const Partition& lambda);
/// N_lambda of the squared rescaled longest elements of the Young blocks.
CentralElement norm_tsq(const Partition& lambda);
/// N_lambda(F_lambda) with F the tensor of one-part Geck-Rouquier elements.
CentralElement norm_F(const Partition& lambda);

/// Direct relative-norm evaluations over D_lambda (no iterated circ);
/// cross-check path for small n.
CentralElement norm_one_direct(const Partition& lambda);
CentralElement norm_tsq_direct(const Partition& lambda);
CentralElement norm_F_direct(const Partition& lambda);

}  // namespace heckez
