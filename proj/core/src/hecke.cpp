#include "heckez/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace heckez {

HeckeElement HeckeElement::unit(int n) {
  HeckeElement h(n);
  h.terms_.emplace(Permutation::identity(n), RatFun(1));
  return h;
}

HeckeElement HeckeElement::t(const Permutation& w) {
  HeckeElement h(w.n());
  h.terms_.emplace(w, RatFun(1));
  return h;
}

RatFun HeckeElement::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFun() : it->second;
}

HeckeElement& HeckeElement::add_term(const Permutation& w, const RatFun& c) {
  if (w.n() != n_) throw std::invalid_argument("HeckeElement: permutation size mismatch");
  RatFun next = coeff(w) + c;
  if (next.is_zero())
    terms_.erase(w);
  else
    terms_[w] = next;
  return *this;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("HeckeElement: size mismatch");
  HeckeElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  return *this + o.scaled(RatFun(-1));
}

HeckeElement HeckeElement::scaled(const RatFun& c) const {
  HeckeElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

HeckeElement HeckeElement::t_mul_gen(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("t_mul_gen: generator index out of range");
  HeckeElement r(n_);
  const RatFun v = RatFun::v();
  const RatFun vm1 = v - RatFun(1);
  for (const auto& [w, c] : terms_) {
    Permutation ws = w.right_mul_s(i);
    if (!w.right_descent(i)) {
      r.add_term(ws, c);
    } else {
      r.add_term(w, c * vm1);
      r.add_term(ws, c * v);
    }
  }
  return r;
}

HeckeElement HeckeElement::gen_mul_t(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("gen_mul_t: generator index out of range");
  HeckeElement r(n_);
  const RatFun v = RatFun::v();
  const RatFun vm1 = v - RatFun(1);
  for (const auto& [w, c] : terms_) {
    Permutation sw = w.left_mul_s(i);
    if (!w.left_descent(i)) {
      r.add_term(sw, c);
    } else {
      r.add_term(w, c * vm1);
      r.add_term(sw, c * v);
    }
  }
  return r;
}

HeckeElement HeckeElement::t_mul_word(const Permutation& w) const {
  HeckeElement r = *this;
  for (int i : w.reduced_word()) r = r.t_mul_gen(i);
  return r;
}

std::string HeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*T[" << w.str() << "]";
  }
  return os.str();
}

HeckeElement he_mul(const HeckeElement& a, const HeckeElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("he_mul: size mismatch");
  HeckeElement out(a.n());
  for (const auto& [u, cu] : b.terms()) {
    HeckeElement part = a.t_mul_word(u);
    for (const auto& [w, c] : part.terms()) out.add_term(w, c * cu);
  }
  return out;
}

RatFun tau(const HeckeElement& h) { return h.coeff(Permutation::identity(h.n())); }

RatFun bilinear(const HeckeElement& a, const HeckeElement& b) { return tau(he_mul(a, b)); }

HeckeElement t_check(const Permutation& w) {
  return HeckeElement::t(w.inverse()).scaled(RatFun::v_power(-w.length()));
}

HeckeElement t_tilde_sq(const Permutation& w) {
  HeckeElement tw = HeckeElement::t(w);
  return he_mul(tw, tw).scaled(RatFun::v_power(-w.length()));
}

HeckeElement embed_from_young(const Composition& alpha,
                              const std::vector<HeckeElement>& blocks) {
  if (blocks.size() != alpha.parts().size())
    throw std::invalid_argument("embed_from_young: block count mismatch");
  const int n = alpha.size();
  HeckeElement out = HeckeElement::unit(n);
  int off = 0;
  for (size_t bi = 0; bi < blocks.size(); ++bi) {
    const int a = alpha.part(static_cast<int>(bi));
    if (blocks[bi].n() != a)
      throw std::invalid_argument("embed_from_young: block size mismatch");
    HeckeElement shifted(n);
    for (const auto& [u, c] : blocks[bi].terms()) {
      std::vector<int> im(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j) im[static_cast<size_t>(j)] = j + 1;
      for (int j = 0; j < a; ++j) im[static_cast<size_t>(off + j)] = off + u(j + 1);
      shifted.add_term(Permutation(std::move(im)), c);
    }
    out = he_mul(out, shifted);
    off += a;
  }
  return out;
}

bool is_central(const HeckeElement& h) {
  for (int i = 1; i < h.n(); ++i)
    if (!(h.t_mul_gen(i) == h.gen_mul_t(i))) return false;
  return true;
}

bool is_central_in_young(const HeckeElement& h, const Composition& alpha) {
  // Block boundaries: generator i crosses a boundary when i is a partial sum.
  std::vector<bool> boundary(static_cast<size_t>(h.n()) + 1, false);
  int acc = 0;
  for (int p : alpha.parts()) {
    acc += p;
    if (acc <= h.n()) boundary[static_cast<size_t>(acc)] = true;
  }
  // Membership: every support permutation must preserve the blocks.
  for (const auto& [w, c] : h.terms()) {
    int off = 0;
    for (int p : alpha.parts()) {
      for (int j = 1; j <= p; ++j) {
        int img = w(off + j);
        if (img <= off || img > off + p) return false;
      }
      off += p;
    }
  }
  for (int i = 1; i < h.n(); ++i) {
    if (boundary[static_cast<size_t>(i)]) continue;
    if (!(h.t_mul_gen(i) == h.gen_mul_t(i))) return false;
  }
  return true;
}

HeckeElement specialize_v1_hecke(const HeckeElement& h) {
  HeckeElement out(h.n());
  for (const auto& [w, c] : h.terms()) out.add_term(w, c.eval_at_one());
  return out;
}

std::map<Partition, RatFun> class_sum_coordinates(const HeckeElement& h) {
  std::map<Partition, RatFun> coords;
  for (const auto& [w, c] : h.terms()) {
    Partition type = w.cycle_type();
    auto it = coords.find(type);
    if (it == coords.end())
      coords.emplace(type, c);
    else if (!(it->second == c))
      throw std::invalid_argument(
          "class_sum_coordinates: coefficients not constant on classes");
  }
  // Every member of each touched class must actually be present.
  for (const Permutation& w : all_permutations(h.n())) {
    auto it = coords.find(w.cycle_type());
    if (it != coords.end() && h.coeff(w) != it->second)
      throw std::invalid_argument(
          "class_sum_coordinates: support is not a union of classes");
  }
  return coords;
}

}  // namespace heckez
