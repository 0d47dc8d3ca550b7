#pragma once

#include "heckez/laurent.hpp"

#include <compare>
#include <string>
#include <vector>

namespace heckez {

/// A partition: weakly decreasing sequence of positive integers. The empty
/// partition is valid and has size 0.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }

  /// Canonical order: decreasing lexicographic. (3) precedes (2,1) precedes
  /// (1,1,1), so ordered containers iterate in canonical order.
  bool operator<(const Partition& o) const { return parts_ > o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

  /// Comma-joined parts, `2,1,1`; the empty partition renders as `-`.
  std::string str() const;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A composition: arbitrary sequence of positive integers.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }

  bool operator==(const Composition& o) const { return parts_ == o.parts_; }

  /// The parts sorted decreasingly.
  Partition sorted() const;

  std::string str() const;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// All 2^(n-1) compositions of n (n >= 1) in decreasing lexicographic
/// order; compositions_of(0) = { () }.
std::vector<Composition> compositions_of(int n);

/// z_lambda = prod_i i^{m_i} m_i! where m_i is the multiplicity of i.
Int z_factor(const Partition& lambda);

/// Number of 0-1 matrices with row sums alpha and column sums mu, by
/// exhaustive enumeration with remaining-sum pruning. This is the
/// combinatorial oracle for the e-to-m expansion. Throws
/// std::invalid_argument when |alpha| != |mu|.
Int zero_one_matrix_count(const Composition& alpha, const Partition& mu);

/// Parts of mu and lambda merged and re-sorted decreasingly.
Partition union_sorted(const Partition& mu, const Partition& lambda);

/// Number of standard Young tableaux of shape lambda, by recursive corner
/// removal.
Int standard_tableaux_count(const Partition& lambda);

Int factorial(int n);

}  // namespace heckez
