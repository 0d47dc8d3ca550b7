#pragma once

#include "heckez/ratfun.hpp"

#include <cstddef>
#include <vector>

namespace heckez {

/// Small dense matrix over Q(v). Used for transition matrices and the
/// exact linear solves behind basis decompositions.
class RfMatrix {
public:
  RfMatrix() = default;
  RfMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RfMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  RatFun& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const RatFun& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  RfMatrix operator*(const RfMatrix& o) const;
  bool operator==(const RfMatrix& o) const;

  /// Exact inverse via Gauss-Jordan elimination; throws std::domain_error
  /// if singular.
  RfMatrix inverse() const;

  bool is_identity() const;

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<RatFun> data_;
};

}  // namespace heckez
