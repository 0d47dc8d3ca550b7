#include "heckez/symfunc.hpp"

#include "heckez/cache.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace heckez {

Basis basis_from_char(char c) {
  switch (c) {
    case 'm': return Basis::m;
    case 'e': return Basis::e;
    case 'h': return Basis::h;
    case 'p': return Basis::p;
    case 's': return Basis::s;
  }
  throw std::invalid_argument(std::string("unknown basis tag '") + c + "'");
}

char basis_char(Basis b) { return static_cast<char>(b); }

SymFun::SymFun(int degree, Basis basis, std::map<Partition, RatFun> coeffs)
    : degree_(degree), basis_(basis) {
  for (auto& [lam, c] : coeffs) {
    if (lam.size() != degree)
      throw std::invalid_argument("SymFun: index partition size != degree");
    if (!c.is_zero()) coeffs_.emplace(lam, std::move(c));
  }
}

SymFun SymFun::basis_element(Basis basis, const Partition& lambda) {
  SymFun f(lambda.size(), basis);
  f.coeffs_.emplace(lambda, RatFun(1));
  return f;
}

RatFun SymFun::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? RatFun() : it->second;
}

SymFun& SymFun::add_term(const Partition& lambda, const RatFun& c) {
  if (lambda.size() != degree_)
    throw std::invalid_argument("SymFun: index partition size != degree");
  RatFun next = coeff(lambda) + c;
  if (next.is_zero())
    coeffs_.erase(lambda);
  else
    coeffs_[lambda] = next;
  return *this;
}

SymFun SymFun::operator+(const SymFun& o) const {
  if (degree_ != o.degree_ || basis_ != o.basis_)
    throw std::invalid_argument("SymFun: degree/basis mismatch in sum");
  SymFun r = *this;
  for (const auto& [lam, c] : o.coeffs_) r.add_term(lam, c);
  return r;
}

SymFun SymFun::operator-(const SymFun& o) const { return *this + o.scaled(RatFun(-1)); }

SymFun SymFun::scaled(const RatFun& c) const {
  SymFun r(degree_, basis_);
  if (c.is_zero()) return r;
  for (const auto& [lam, x] : coeffs_) r.coeffs_.emplace(lam, x * c);
  return r;
}

std::string SymFun::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << basis_char(basis_) << "[";
    const auto& parts = lam.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) os << ",";
      os << parts[i];
    }
    os << "]";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Expansion engine: symmetric polynomials in k variables, exponent-vector
// dictionaries. A degree-n symmetric polynomial in n variables determines
// its m-expansion uniquely, so all basis expansions route through here.
// ---------------------------------------------------------------------------

namespace {

using ExpVec = std::vector<int>;
using IntDict = std::map<ExpVec, Int>;

IntDict dict_one(int k) { return {{ExpVec(static_cast<size_t>(k), 0), Int(1)}}; }

IntDict dict_mul(const IntDict& a, const IntDict& b) {
  IntDict out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      ExpVec e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

IntDict var_e(int r, int k) {
  IntDict out;
  if (r > k) return out;
  ExpVec e(static_cast<size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      out[e] = 1;
      return;
    }
    for (int i = start; i <= k - left; ++i) {
      e[static_cast<size_t>(i)] = 1;
      rec(i + 1, left - 1);
      e[static_cast<size_t>(i)] = 0;
    }
  };
  rec(0, r);
  return out;
}

IntDict var_h(int r, int k) {
  IntDict out;
  ExpVec e(static_cast<size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      out[e] += 1;
      return;
    }
    if (start == k) return;
    for (int take = left; take >= 0; --take) {
      e[static_cast<size_t>(start)] = take;
      rec(start + 1, left - take);
    }
    e[static_cast<size_t>(start)] = 0;
  };
  rec(0, r);
  return out;
}

IntDict var_p(int r, int k) {
  IntDict out;
  for (int i = 0; i < k; ++i) {
    ExpVec e(static_cast<size_t>(k), 0);
    e[static_cast<size_t>(i)] = r;
    out[e] = 1;
  }
  return out;
}

std::map<Partition, Int> extract_m(const IntDict& d, int n, int k) {
  std::map<Partition, Int> out;
  for (const Partition& lam : partitions_of(n)) {
    if (lam.length() > k) continue;
    ExpVec key = lam.parts();
    key.resize(static_cast<size_t>(k), 0);
    auto it = d.find(key);
    if (it != d.end() && it->second != 0) out.emplace(lam, it->second);
  }
  return out;
}

std::map<Partition, Int> product_row(char tag, const Partition& lam, int k) {
  IntDict d = dict_one(k);
  for (int r : lam.parts()) {
    IntDict f = tag == 'e' ? var_e(r, k) : tag == 'h' ? var_h(r, k) : var_p(r, k);
    d = dict_mul(d, f);
  }
  return extract_m(d, lam.size(), k);
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}); expanded over
// permutations, each signed term a product of complete homogeneous rows.
std::map<Partition, Int> schur_row(const Partition& lam, int k) {
  const int l = lam.length();
  if (l == 0) return {{Partition(), Int(1)}};
  std::map<Partition, Int> hterms;  // signed h-multiset collection
  std::vector<int> sigma(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) sigma[static_cast<size_t>(i)] = i;
  do {
    int inv = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (sigma[static_cast<size_t>(i)] > sigma[static_cast<size_t>(j)]) ++inv;
    std::vector<int> hs;
    bool ok = true;
    for (int i = 0; i < l; ++i) {
      int d = lam.part(i) - (i + 1) + (sigma[static_cast<size_t>(i)] + 1);
      if (d < 0) {
        ok = false;
        break;
      }
      if (d > 0) hs.push_back(d);
    }
    if (!ok) continue;
    std::sort(hs.rbegin(), hs.rend());
    hterms[Partition(hs)] += (inv % 2 == 0) ? 1 : -1;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::map<Partition, Int> out;
  for (const auto& [mu, sign] : hterms) {
    if (sign == 0) continue;
    for (const auto& [kappa, c] : product_row('h', mu, k)) {
      Int& acc = out[kappa];
      acc += sign * c;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

using MatrixKey = std::tuple<int, char, char>;
OnceCache<MatrixKey, TransitionMatrix>& matrix_cache() {
  static OnceCache<MatrixKey, TransitionMatrix> c;
  return c;
}

TransitionMatrix compute_to_m(Basis from, int n) {
  std::vector<Partition> order = partitions_of(n);
  TransitionMatrix t{n, from, Basis::m, order, RfMatrix(order.size(), order.size())};
  for (size_t i = 0; i < order.size(); ++i) {
    std::map<Partition, Int> row;
    switch (from) {
      case Basis::m:
        row = {{order[i], Int(1)}};
        break;
      case Basis::s:
        row = schur_row(order[i], n);
        break;
      default:
        row = product_row(basis_char(from), order[i], n);
    }
    for (size_t j = 0; j < order.size(); ++j) {
      auto it = row.find(order[j]);
      if (it != row.end()) t.entries.at(i, j) = RatFun(it->second);
    }
  }
  return t;
}

}  // namespace

const TransitionMatrix& transition_matrix(Basis from, Basis to, int n) {
  // The cache retains ownership of every computed matrix, so the returned
  // reference stays valid for the lifetime of the process.
  auto ptr = matrix_cache().get_or_compute(
      MatrixKey{n, basis_char(from), basis_char(to)}, [&]() -> TransitionMatrix {
        if (to == Basis::m) return compute_to_m(from, n);
        const TransitionMatrix& to_m = transition_matrix(to, Basis::m, n);
        RfMatrix inv = to_m.entries.inverse();
        if (from == Basis::m)
          return TransitionMatrix{n, from, to, partitions_of(n), std::move(inv)};
        const TransitionMatrix& f_m = transition_matrix(from, Basis::m, n);
        return TransitionMatrix{n, from, to, partitions_of(n), f_m.entries * inv};
      });
  return *ptr;
}

TransitionMatrix d_matrix(int n) {
  std::vector<Partition> order = partitions_of(n);
  TransitionMatrix t{n, Basis::m, Basis::m, order, RfMatrix(order.size(), order.size())};
  RatFun vm1 = RatFun::v() - RatFun(1);
  for (size_t i = 0; i < order.size(); ++i)
    t.entries.at(i, i) = vm1.pow(n - order[i].length());
  return t;
}

SymFun convert(const SymFun& f, Basis target) {
  if (f.basis() == target) return f;
  const TransitionMatrix& t = transition_matrix(f.basis(), target, f.degree());
  SymFun out(f.degree(), target);
  for (size_t j = 0; j < t.order.size(); ++j) {
    RatFun c;
    for (size_t i = 0; i < t.order.size(); ++i) {
      RatFun fi = f.coeff(t.order[i]);
      if (!fi.is_zero() && !t.entries.at(i, j).is_zero()) c += fi * t.entries.at(i, j);
    }
    if (!c.is_zero()) out.add_term(t.order[j], c);
  }
  return out;
}

bool sf_equal(const SymFun& a, const SymFun& b) {
  if (a.degree() != b.degree()) return false;
  SymFun bb = convert(b, a.basis());
  return a.coeffs() == bb.coeffs();
}

namespace {

// Distinct rearrangements of lambda padded to k entries.
std::vector<ExpVec> orbit_vectors(const Partition& lam, int k) {
  ExpVec e = lam.parts();
  e.resize(static_cast<size_t>(k), 0);
  std::sort(e.begin(), e.end());
  std::vector<ExpVec> out;
  do {
    out.push_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

bool weakly_decreasing(const ExpVec& e) {
  for (size_t i = 1; i < e.size(); ++i)
    if (e[i - 1] < e[i]) return false;
  return true;
}

// Product of two m-expansions. The coefficient of m_kappa in
// m_lambda m_mu counts pairs (alpha, beta) of rearrangements with
// alpha + beta equal to the sorted vector of kappa, i.e. exactly those
// pairs whose sum comes out weakly decreasing.
std::map<Partition, RatFun> m_product(const std::map<Partition, RatFun>& a, int da,
                                      const std::map<Partition, RatFun>& b, int db) {
  const int k = da + db;
  std::map<Partition, RatFun> out;
  for (const auto& [lam, ca] : a) {
    std::vector<ExpVec> oa = orbit_vectors(lam, k);
    for (const auto& [mu, cb] : b) {
      RatFun c = ca * cb;
      for (const ExpVec& beta : orbit_vectors(mu, k)) {
        for (const ExpVec& alpha : oa) {
          ExpVec sum(alpha.size());
          for (size_t i = 0; i < sum.size(); ++i) sum[i] = alpha[i] + beta[i];
          if (!weakly_decreasing(sum)) continue;
          while (!sum.empty() && sum.back() == 0) sum.pop_back();
          Partition kappa(sum);
          RatFun& acc = out[kappa];
          acc += c;
        }
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Partition concat_sorted(const Partition& a, const Partition& b) {
  return union_sorted(a, b);
}

}  // namespace

SymFun sf_mul(const SymFun& f, const SymFun& g) {
  const int n = f.degree() + g.degree();
  if (f.basis() == Basis::p && g.basis() == Basis::p) {
    // Power sums multiply by concatenation.
    SymFun out(n, Basis::p);
    for (const auto& [lam, ca] : f.coeffs())
      for (const auto& [mu, cb] : g.coeffs()) out.add_term(concat_sorted(lam, mu), ca * cb);
    return out;
  }
  SymFun fm = convert(f, Basis::m), gm = convert(g, Basis::m);
  SymFun out(n, Basis::m,
             m_product(fm.coeffs(), f.degree(), gm.coeffs(), g.degree()));
  return convert(out, f.basis());
}

SymFun plethysm_scale(const SymFun& f, PlethysmMode mode) {
  SymFun p = convert(f, Basis::p);
  SymFun out(f.degree(), Basis::p);
  for (const auto& [lam, c] : p.coeffs()) {
    RatFun factor(1);
    for (int part : lam.parts()) {
      RatFun t = RatFun::v_power(part) - RatFun(1);
      factor = mode == PlethysmMode::expand ? factor * t : factor / t;
    }
    out.add_term(lam, c * factor);
  }
  return convert(out, f.basis());
}

SymFun m_bar(const Partition& lambda) {
  SymFun m = SymFun::basis_element(Basis::m, lambda);
  RatFun vm1 = RatFun::v() - RatFun(1);
  return plethysm_scale(m, PlethysmMode::contract).scaled(vm1.pow(lambda.length()));
}

SymFun h_bar(const Partition& mu) {
  RatFun vm1 = RatFun::v() - RatFun(1);
  SymFun out = SymFun::basis_element(Basis::p, Partition());
  for (int r : mu.parts()) {
    SymFun hr = convert(SymFun::basis_element(Basis::h, Partition({r})), Basis::p);
    SymFun scaled = plethysm_scale(hr, PlethysmMode::expand).scaled(RatFun(1) / vm1);
    out = sf_mul(out, scaled);
  }
  return out;
}

RatFun hall_inner(const SymFun& f, const SymFun& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("hall_inner: degree mismatch");
  SymFun fp = convert(f, Basis::p), gp = convert(g, Basis::p);
  RatFun out;
  for (const auto& [lam, c] : fp.coeffs()) {
    RatFun d = gp.coeff(lam);
    if (!d.is_zero()) out += c * d * RatFun(z_factor(lam));
  }
  return out;
}

std::map<Partition, Int> lr_coefficients(const Partition& mu, const Partition& lambda) {
  SymFun prod = sf_mul(SymFun::basis_element(Basis::s, mu),
                       SymFun::basis_element(Basis::s, lambda));
  SymFun s = convert(prod, Basis::s);
  std::map<Partition, Int> out;
  for (const auto& [nu, c] : s.coeffs()) {
    if (!c.is_constant() || !c.is_polynomial())
      throw std::logic_error("lr_coefficients: non-integer coefficient " + c.str());
    Int value = c.num().eval_one();
    if (value < 0)
      throw std::logic_error("lr_coefficients: negative coefficient " + c.str());
    out.emplace(nu, value);
  }
  return out;
}

SymFun specialize_v1(const SymFun& f) {
  SymFun out(f.degree(), f.basis());
  for (const auto& [lam, c] : f.coeffs()) out.add_term(lam, c.eval_at_one());
  return out;
}

bool cauchy_check(int n, int k) {
  if (k < n) throw std::invalid_argument("cauchy_check: requires k >= n");
  using Key = std::pair<ExpVec, ExpVec>;
  std::map<Key, RatFun> lhs, rhs;
  auto accumulate = [&](std::map<Key, RatFun>& acc, const SymFun& fx, const SymFun& fy) {
    SymFun mx = convert(fx, Basis::m), my = convert(fy, Basis::m);
    for (const auto& [lam, cx] : mx.coeffs()) {
      if (lam.length() > k) continue;
      for (const auto& [mu, cy] : my.coeffs()) {
        if (mu.length() > k) continue;
        RatFun c = cx * cy;
        for (const ExpVec& a : orbit_vectors(lam, k))
          for (const ExpVec& b : orbit_vectors(mu, k)) {
            RatFun& slot = acc[Key{a, b}];
            slot += c;
          }
      }
    }
  };
  for (const Partition& lam : partitions_of(n)) {
    accumulate(lhs, h_bar(lam), m_bar(lam));
    SymFun s = SymFun::basis_element(Basis::s, lam);
    accumulate(rhs, s, s);
  }
  auto clean = [](std::map<Key, RatFun>& d) {
    for (auto it = d.begin(); it != d.end();)
      it = it->second.is_zero() ? d.erase(it) : std::next(it);
  };
  clean(lhs);
  clean(rhs);
  return lhs == rhs;
}

}  // namespace heckez
