#include "heckez/linalg.hpp"

#include <stdexcept>

namespace heckez {

RfMatrix RfMatrix::identity(size_t n) {
  RfMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = RatFun(1);
  return m;
}

RfMatrix RfMatrix::operator*(const RfMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RfMatrix: shape mismatch");
  RfMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const RatFun& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const RatFun& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

bool RfMatrix::operator==(const RfMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RfMatrix RfMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("RfMatrix: inverse of non-square");
  size_t n = rows_;
  RfMatrix a = *this, inv = identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("RfMatrix: singular matrix");
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    RatFun d = a.at(col, col);
    for (size_t j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      RatFun f = a.at(i, col);
      if (f.is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool RfMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

}  // namespace heckez
