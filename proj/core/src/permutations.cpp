#include "heckez/permutations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heckez {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || x > static_cast<int>(images_.size()) || seen[static_cast<size_t>(x - 1)])
      throw std::invalid_argument("Permutation: images must be a bijection of {1..n}");
    seen[static_cast<size_t>(x - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::s(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("Permutation::s: index out of range");
  return identity(n).right_mul_s(i);
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (n() != o.n()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < im.size(); ++i)
    im[i] = images_[static_cast<size_t>(o.images_[i] - 1)];
  Permutation r;
  r.images_ = std::move(im);
  return r;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    im[static_cast<size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  Permutation r;
  r.images_ = std::move(im);
  return r;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (size_t i = 0; i < images_.size(); ++i)
    for (size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

bool Permutation::left_descent(int i) const {
  // length(s_i w) < length(w) iff the position of value i+1 precedes the
  // position of value i.
  int pi = 0, pi1 = 0;
  for (size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] == i) pi = static_cast<int>(j);
    if (images_[j] == i + 1) pi1 = static_cast<int>(j);
  }
  return pi1 < pi;
}

Permutation Permutation::right_mul_s(int i) const {
  std::vector<int> im = images_;
  std::swap(im[static_cast<size_t>(i - 1)], im[static_cast<size_t>(i)]);
  Permutation r;
  r.images_ = std::move(im);
  return r;
}

Permutation Permutation::left_mul_s(int i) const {
  std::vector<int> im = images_;
  for (auto& x : im) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
  Permutation r;
  r.images_ = std::move(im);
  return r;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  while (true) {
    int d = 0;
    for (int i = 1; i < w.n(); ++i)
      if (w.right_descent(i)) {
        d = i;
        break;
      }
    if (d == 0) break;
    w = w.right_mul_s(d);
    word.push_back(d);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> parts;
  for (size_t i = 0; i < images_.size(); ++i) {
    if (!seen[i]) {
      int len = 0;
      size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = static_cast<size_t>(images_[j] - 1);
        ++len;
      }
      parts.push_back(len);
    }
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < images_.size(); ++i) {
    if (i) os << " ";
    os << images_[i];
  }
  return os.str();
}

Permutation Permutation::parse(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> im;
  int x;
  while (is >> x) im.push_back(x);
  return Permutation(std::move(im));
}

Permutation w_min(const Partition& lambda) {
  int n = lambda.size();
  std::vector<int> im(static_cast<size_t>(n));
  int off = 0;
  for (int p : lambda.parts()) {
    for (int j = 0; j < p - 1; ++j) im[static_cast<size_t>(off + j)] = off + j + 2;
    im[static_cast<size_t>(off + p - 1)] = off + 1;
    off += p;
  }
  return Permutation(std::move(im));
}

Permutation longest_in_young(const Composition& alpha) {
  int n = alpha.size();
  std::vector<int> im(static_cast<size_t>(n));
  int off = 0;
  for (int p : alpha.parts()) {
    for (int j = 0; j < p; ++j) im[static_cast<size_t>(off + j)] = off + p - j;
    off += p;
  }
  return Permutation(std::move(im));
}

std::vector<Permutation> min_coset_reps(const Composition& alpha) {
  const int n = alpha.size();
  // A coset representative is determined by the increasing sequences of
  // values assigned to each block; enumerate value subsets block by block.
  std::vector<Permutation> out;
  std::vector<int> im(static_cast<size_t>(n), 0);
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);

  std::function<void(size_t, int)> fill_block = [&](size_t bi, int off) {
    if (bi == alpha.parts().size()) {
      out.emplace_back(im);
      return;
    }
    int blen = alpha.part(static_cast<int>(bi));
    // Choose an increasing sequence of unused values for this block.
    std::function<void(int, int)> choose = [&](int pos, int min_val) {
      if (pos == blen) {
        fill_block(bi + 1, off + blen);
        return;
      }
      for (int x = min_val; x <= n; ++x) {
        if (!used[static_cast<size_t>(x)]) {
          used[static_cast<size_t>(x)] = true;
          im[static_cast<size_t>(off + pos)] = x;
          choose(pos + 1, x + 1);
          used[static_cast<size_t>(x)] = false;
        }
      }
    };
    choose(0, 1);
  };
  fill_block(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace heckez
