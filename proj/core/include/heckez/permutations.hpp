#pragma once

#include "heckez/partitions.hpp"

#include <string>
#include <vector>

namespace heckez {

/// An element of S_n in one-line notation (1-based images).
///
/// Composition convention, fixed once for the whole project: permutations
/// compose as functions, (u*w)(i) = u(w(i)). The Hecke algebra relation
/// T_u T_w = T_{uw} for length-additive products uses the same convention.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The simple transposition s_i = (i, i+1), 1 <= i <= n-1.
  static Permutation s(int n, int i);

  int n() const { return static_cast<int>(images_.size()); }
  /// Image of i (1-based).
  int operator()(int i) const { return images_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;

  bool is_identity() const;

  /// Inversion count.
  int length() const;

  /// Right descent at i: length(w * s_i) < length(w), i.e. w(i) > w(i+1).
  bool right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  /// Left descent at i: length(s_i * w) < length(w).
  bool left_descent(int i) const;

  /// w * s_i (swap positions i, i+1).
  Permutation right_mul_s(int i) const;
  /// s_i * w (swap values i, i+1).
  Permutation left_mul_s(int i) const;

  /// A reduced word for w: generator indices i_1..i_r with
  /// w = s_{i_1} * ... * s_{i_r} and r = length(w). Deterministic: the
  /// smallest right descent is stripped first.
  std::vector<int> reduced_word() const;

  /// Multiset of cycle lengths sorted decreasingly (fixed points as 1s).
  Partition cycle_type() const;

  /// Ordering on one-line notation (used for deterministic element maps).
  bool operator<(const Permutation& o) const { return images_ < o.images_; }
  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

  /// Space-joined one-line notation, e.g. `3 1 2 4`.
  std::string str() const;
  /// Parse space-joined one-line notation.
  static Permutation parse(const std::string& text);

private:
  std::vector<int> images_;
};

/// The block-cycle permutation (1,...,l1)(l1+1,...,l1+l2)... of minimal
/// length in the conjugacy class of cycle type lambda.
Permutation w_min(const Partition& lambda);

/// The longest element of the Young subgroup S_alpha: reverses each
/// alpha-block of positions; its length is sum_i alpha_i (alpha_i - 1) / 2.
Permutation longest_in_young(const Composition& alpha);

/// D_alpha: minimal length representatives of the cosets w S_alpha, i.e.
/// all w increasing within each alpha-block of positions. Deterministic
/// (lexicographic in one-line notation); |D_alpha| = n! / prod alpha_i!.
std::vector<Permutation> min_coset_reps(const Composition& alpha);

/// All n! permutations in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace heckez
