#include "heckez/center.hpp"

#include "heckez/cache.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace heckez {

const std::map<Partition, RatFun>& ClassPolyTable::row(const Permutation& w) const {
  auto it = rows.find(w);
  if (it == rows.end())
    throw std::invalid_argument("ClassPolyTable: permutation not in S_" + std::to_string(n));
  return it->second;
}

namespace {

using Row = std::map<Partition, RatFun>;

nlohmann::json table_to_json(const ClassPolyTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [w, row] : t.rows) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [lam, f] : row)
      entries.push_back({{"partition", lam.parts()}, {"coeff", f.str()}});
    rows.push_back({{"w", w.images()}, {"f", entries}});
  }
  return {{"schema_version", cache::kSchemaVersion}, {"n", t.n}, {"rows", rows}};
}

ClassPolyTable table_from_json(const nlohmann::json& j) {
  ClassPolyTable t;
  t.n = j.at("n").get<int>();
  for (const auto& r : j.at("rows")) {
    Permutation w(r.at("w").get<std::vector<int>>());
    Row row;
    for (const auto& e : r.at("f"))
      row.emplace(Partition(e.at("partition").get<std::vector<int>>()),
                  RatFun::parse(e.at("coeff").get<std::string>()));
    t.rows.emplace(std::move(w), std::move(row));
  }
  return t;
}

ClassPolyTable compute_class_polynomials(int n) {
  ClassPolyTable table;
  table.n = n;
  const RatFun v = RatFun::v();
  const RatFun vm1 = v - RatFun(1);

  std::vector<Permutation> perms = all_permutations(n);
  std::stable_sort(perms.begin(), perms.end(),
                   [](const Permutation& a, const Permutation& b) {
                     return a.length() < b.length();
                   });

  for (const Permutation& w : perms) {
    if (table.rows.count(w)) continue;
    // Breadth-first search over length-preserving conjugations by simple
    // generators, looking for an element with a two-sided descent.
    std::set<Permutation> orbit{w};
    std::deque<Permutation> queue{w};
    const int lw = w.length();
    bool reduced = false;
    Row result;
    while (!queue.empty() && !reduced) {
      Permutation u = queue.front();
      queue.pop_front();
      for (int i = 1; i < n && !reduced; ++i) {
        Permutation us = u.right_mul_s(i);
        Permutation sus = us.left_mul_s(i);
        int lsus = sus.length();
        if (lsus < lw) {
          // Two-sided descent: T_u = (v-1) T_{us} + v T_{sus}, both of
          // strictly smaller length, hence already computed.
          if (us.length() != lw - 1 || lsus != lw - 2)
            throw std::logic_error("class_polynomials: descent lengths out of step");
          const Row& r1 = table.row(us);
          const Row& r2 = table.row(sus);
          for (const auto& [lam, c] : r1) result[lam] += c * vm1;
          for (const auto& [lam, c] : r2) result[lam] += c * v;
          for (auto it = result.begin(); it != result.end();)
            it = it->second.is_zero() ? result.erase(it) : std::next(it);
          reduced = true;
        } else if (lsus == lw && !orbit.count(sus)) {
          orbit.insert(sus);
          queue.push_back(sus);
        }
      }
    }
    if (!reduced) {
      // No conjugate admits a two-sided descent: w has minimal length in
      // its conjugacy class and its row is the delta row.
      result = Row{{w.cycle_type(), RatFun(1)}};
    }
    // Trace functions agree across the length-preserving orbit, so the
    // whole orbit shares this row.
    for (const Permutation& u : orbit) table.rows.emplace(u, result);
  }
  return table;
}

OnceCache<int, ClassPolyTable>& classpoly_cache() {
  static OnceCache<int, ClassPolyTable> c;
  return c;
}

}  // namespace

std::shared_ptr<const ClassPolyTable> class_polynomials(int n) {
  if (n < 0) throw std::invalid_argument("class_polynomials: n must be nonnegative");
  return classpoly_cache().get_or_compute(n, [n]() -> ClassPolyTable {
    const std::string name = "classpoly_n" + std::to_string(n);
    if (auto text = cache::load(name)) {
      try {
        ClassPolyTable t = table_from_json(nlohmann::json::parse(*text));
        if (t.n == n && t.rows.size() == static_cast<size_t>(factorial(n))) return t;
      } catch (...) {
        // fall through to recompute
      }
    }
    ClassPolyTable t = compute_class_polynomials(n);
    cache::store(name, table_to_json(t).dump(2));
    return t;
  });
}

CentralElement::CentralElement(int n, std::map<Partition, RatFun> coords) : n_(n) {
  for (auto& [lam, c] : coords) {
    if (lam.size() != n)
      throw std::invalid_argument("CentralElement: partition size != n");
    if (!c.is_zero()) coords_.emplace(lam, std::move(c));
  }
}

RatFun CentralElement::coord(const Partition& lambda) const {
  auto it = coords_.find(lambda);
  return it == coords_.end() ? RatFun() : it->second;
}

CentralElement& CentralElement::add(const Partition& lambda, const RatFun& c) {
  if (lambda.size() != n_)
    throw std::invalid_argument("CentralElement: partition size != n");
  RatFun next = coord(lambda) + c;
  if (next.is_zero())
    coords_.erase(lambda);
  else
    coords_[lambda] = next;
  return *this;
}

CentralElement CentralElement::operator+(const CentralElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("CentralElement: size mismatch");
  CentralElement r = *this;
  for (const auto& [lam, c] : o.coords_) r.add(lam, c);
  return r;
}

CentralElement CentralElement::scaled(const RatFun& c) const {
  CentralElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [lam, x] : coords_) r.coords_.emplace(lam, x * c);
  return r;
}

std::string CentralElement::str() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : coords_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*f*[" << (lam.empty() ? "" : lam.str()) << "]";
  }
  return os.str();
}

namespace {

OnceCache<int, std::map<Partition, HeckeElement>>& gr_cache() {
  static OnceCache<int, std::map<Partition, HeckeElement>> c;
  return c;
}

// The cache retains ownership, so the returned reference stays valid.
const std::map<Partition, HeckeElement>& gr_family(int n) {
  auto ptr = gr_cache().get_or_compute(n, [n]() {
    auto table = class_polynomials(n);
    std::map<Partition, HeckeElement> fam;
    for (const Partition& lam : partitions_of(n)) fam.emplace(lam, HeckeElement(n));
    for (const auto& [w, row] : table->rows) {
      Permutation wi = w.inverse();
      RatFun scale = RatFun::v_power(-w.length());
      for (const auto& [lam, f] : row) fam.at(lam).add_term(wi, f * scale);
    }
    return fam;
  });
  return *ptr;
}

}  // namespace

HeckeElement gr_element(const Partition& lambda) {
  return gr_family(lambda.size()).at(lambda);
}

HeckeElement central_to_hecke(const CentralElement& z) {
  HeckeElement out(z.n());
  for (const auto& [lam, c] : z.coords()) {
    const HeckeElement& g = gr_element(lam);
    for (const auto& [w, gc] : g.terms()) out.add_term(w, gc * c);
  }
  return out;
}

CentralElement decompose_central(const HeckeElement& h) {
  if (!is_central(h))
    throw std::invalid_argument("decompose_central: input is not central");
  const int n = h.n();
  // The probe coordinates T_{w_lambda^-1} carry a triangular (in fact
  // diagonal) system thanks to the delta rows of the class polynomial
  // table: the coefficient of T_{w_lambda^-1} in f*_mu is
  // v^(-length(w_lambda)) delta_{lambda,mu}.
  CentralElement z(n);
  for (const Partition& lam : partitions_of(n)) {
    Permutation probe = w_min(lam).inverse();
    RatFun c = h.coeff(probe) * RatFun::v_power(probe.length());
    if (!c.is_zero()) z.add(lam, c);
  }
  HeckeElement residual = central_to_hecke(z) - h;
  if (!residual.is_zero())
    throw std::logic_error("decompose_central: inconsistent system (residual nonzero)");
  return z;
}

HeckeElement relative_norm(const Composition& alpha, const HeckeElement& h) {
  if (alpha.size() != h.n())
    throw std::invalid_argument("relative_norm: |alpha| != n");
  if (!is_central_in_young(h, alpha))
    throw std::invalid_argument("relative_norm: h is not central in H_alpha");
  HeckeElement out(h.n());
  for (const Permutation& w : min_coset_reps(alpha)) {
    HeckeElement t = he_mul(HeckeElement::t(w), h).t_mul_word(w.inverse());
    RatFun scale = RatFun::v_power(-w.length());
    for (const auto& [x, c] : t.terms()) out.add_term(x, c * scale);
  }
  return out;
}

CentralElement circ(const CentralElement& z1, const CentralElement& z2) {
  if (z1.n() == 0) return z2.scaled(z1.coord(Partition()));
  if (z2.n() == 0) return z1.scaled(z2.coord(Partition()));
  const int m = z1.n(), k = z2.n();
  HeckeElement h = embed_from_young(Composition({m, k}),
                                    {central_to_hecke(z1), central_to_hecke(z2)});
  return decompose_central(relative_norm(Composition({m, k}), h));
}

namespace {

CentralElement unit_central(int k) {
  std::vector<int> ones(static_cast<size_t>(k), 1);
  return CentralElement(k, {{Partition(ones), RatFun(1)}});
}

CentralElement tsq_central(int k) {
  Permutation w0 = longest_in_young(Composition({k}));
  return decompose_central(t_tilde_sq(w0));
}

CentralElement gr_one_part(int k) {
  return CentralElement(k, {{Partition({k}), RatFun(1)}});
}

CentralElement iterated_circ(const Partition& lambda,
                             const std::function<CentralElement(int)>& block) {
  if (lambda.empty()) return CentralElement(0, {{Partition(), RatFun(1)}});
  CentralElement z = block(lambda.part(0));
  for (int i = 1; i < lambda.length(); ++i) z = circ(z, block(lambda.part(i)));
  return z;
}

CentralElement direct_norm(const Partition& lambda,
                           const std::function<HeckeElement(int)>& block) {
  const int n = lambda.size();
  if (n == 0) return CentralElement(0, {{Partition(), RatFun(1)}});
  Composition alpha(lambda.parts());
  std::vector<HeckeElement> blocks;
  for (int p : lambda.parts()) blocks.push_back(block(p));
  return decompose_central(relative_norm(alpha, embed_from_young(alpha, blocks)));
}

}  // namespace

CentralElement norm_one(const Partition& lambda) {
  return iterated_circ(lambda, unit_central);
}

CentralElement norm_tsq(const Partition& lambda) {
  return iterated_circ(lambda, tsq_central);
}

CentralElement norm_F(const Partition& lambda) {
  return iterated_circ(lambda, gr_one_part);
}

CentralElement norm_one_direct(const Partition& lambda) {
  return direct_norm(lambda, [](int k) { return HeckeElement::unit(k); });
}

CentralElement norm_tsq_direct(const Partition& lambda) {
  return direct_norm(lambda, [](int k) {
    return t_tilde_sq(longest_in_young(Composition({k})));
  });
}

CentralElement norm_F_direct(const Partition& lambda) {
  return direct_norm(lambda, [](int k) { return gr_element(Partition({k})); });
}

}  // namespace heckez
