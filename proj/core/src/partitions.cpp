#include "heckez/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heckez {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("Composition: parts must be positive");
    size_ += p;
  }
}

Partition Composition::sorted() const {
  std::vector<int> p = parts_;
  std::sort(p.rbegin(), p.rend());
  return Partition(std::move(p));
}

std::string Composition::str() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

void gen_compositions(int n, std::vector<int>& cur, std::vector<Composition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = n; k >= 1; --k) {
    cur.push_back(k);
    gen_compositions(n - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: n must be nonnegative");
  std::vector<Composition> out;
  std::vector<int> cur;
  gen_compositions(n, cur, out);
  return out;
}

Int z_factor(const Partition& lambda) {
  std::map<int, int> mult;
  for (int p : lambda.parts()) ++mult[p];
  Int z = 1;
  for (auto [i, m] : mult) {
    for (int j = 0; j < m; ++j) z *= i;
    z *= factorial(m);
  }
  return z;
}

namespace {

Int count_01(const std::vector<int>& rows, size_t i, std::vector<int>& colrem) {
  if (i == rows.size()) {
    for (int c : colrem)
      if (c != 0) return 0;
    return 1;
  }
  // Remaining-sum pruning: the rows left must be able to absorb the columns.
  int rows_left = 0;
  for (size_t j = i; j < rows.size(); ++j) rows_left += rows[j];
  int cols_left = 0;
  for (int c : colrem) cols_left += c;
  if (rows_left != cols_left) return 0;

  const int need = rows[i];
  const int m = static_cast<int>(colrem.size());
  Int total = 0;
  std::vector<int> pick;
  // Choose the columns receiving a 1 in this row.
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      total += count_01(rows, i + 1, colrem);
      return;
    }
    for (int j = start; j <= m - left; ++j) {
      if (colrem[static_cast<size_t>(j)] > 0) {
        --colrem[static_cast<size_t>(j)];
        pick.push_back(j);
        rec(j + 1, left - 1);
        pick.pop_back();
        ++colrem[static_cast<size_t>(j)];
      }
    }
  };
  if (need > m) return 0;
  rec(0, need);
  return total;
}

}  // namespace

Int zero_one_matrix_count(const Composition& alpha, const Partition& mu) {
  if (alpha.size() != mu.size())
    throw std::invalid_argument("zero_one_matrix_count: |alpha| != |mu|");
  std::vector<int> colrem = mu.parts();
  return count_01(alpha.parts(), 0, colrem);
}

Partition union_sorted(const Partition& mu, const Partition& lambda) {
  std::vector<int> p = mu.parts();
  p.insert(p.end(), lambda.parts().begin(), lambda.parts().end());
  std::sort(p.rbegin(), p.rend());
  return Partition(std::move(p));
}

Int standard_tableaux_count(const Partition& lambda) {
  if (lambda.size() <= 1) return 1;
  const auto& p = lambda.parts();
  Int total = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    // Removable corner: last row, or strictly longer than the next row.
    if (i + 1 == p.size() || p[i] > p[i + 1]) {
      std::vector<int> q = p;
      if (--q[i] == 0) q.erase(q.begin() + static_cast<long>(i));
      total += standard_tableaux_count(Partition(std::move(q)));
    }
  }
  return total;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace heckez
