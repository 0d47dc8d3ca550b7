#include "heckez/charmap.hpp"

#include "heckez/cache.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace heckez {

const RatFun& CharacterTable::value(const Partition& lambda, const Partition& mu) const {
  size_t i = order.size(), j = order.size();
  for (size_t k = 0; k < order.size(); ++k) {
    if (order[k] == lambda) i = k;
    if (order[k] == mu) j = k;
  }
  if (i == order.size() || j == order.size())
    throw std::invalid_argument("CharacterTable: partition not of size n");
  return values.at(i, j);
}

namespace {

nlohmann::json chartable_to_json(const CharacterTable& t) {
  nlohmann::json ord = nlohmann::json::array();
  for (const auto& p : t.order) ord.push_back(p.parts());
  nlohmann::json vals = nlohmann::json::array();
  for (size_t i = 0; i < t.order.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t j = 0; j < t.order.size(); ++j) row.push_back(t.values.at(i, j).str());
    vals.push_back(row);
  }
  return {{"schema_version", cache::kSchemaVersion},
          {"n", t.n},
          {"row_order", ord},
          {"col_order", ord},
          {"values", vals}};
}

CharacterTable chartable_from_json(const nlohmann::json& j) {
  CharacterTable t;
  t.n = j.at("n").get<int>();
  for (const auto& p : j.at("row_order"))
    t.order.emplace_back(p.get<std::vector<int>>());
  t.values = RfMatrix(t.order.size(), t.order.size());
  const auto& vals = j.at("values");
  for (size_t i = 0; i < t.order.size(); ++i)
    for (size_t j2 = 0; j2 < t.order.size(); ++j2)
      t.values.at(i, j2) = RatFun::parse(vals.at(i).at(j2).get<std::string>());
  return t;
}

CharacterTable compute_character_table(int n) {
  CharacterTable t;
  t.n = n;
  t.order = partitions_of(n);
  t.values = RfMatrix(t.order.size(), t.order.size());
  for (size_t j = 0; j < t.order.size(); ++j) {
    SymFun s = convert(h_bar(t.order[j]), Basis::s);
    for (size_t i = 0; i < t.order.size(); ++i) t.values.at(i, j) = s.coeff(t.order[i]);
  }
  return t;
}

OnceCache<int, CharacterTable>& chartable_cache() {
  static OnceCache<int, CharacterTable> c;
  return c;
}

OnceCache<int, std::map<Partition, RatFun>>& schur_cache() {
  static OnceCache<int, std::map<Partition, RatFun>> c;
  return c;
}

OnceCache<int, std::map<Partition, HeckeElement>>& idem_cache() {
  static OnceCache<int, std::map<Partition, HeckeElement>> c;
  return c;
}

OnceCache<int, RfMatrix>& mbar_inverse_cache() {
  static OnceCache<int, RfMatrix> c;
  return c;
}

}  // namespace

std::shared_ptr<const CharacterTable> character_table(int n) {
  if (n < 0) throw std::invalid_argument("character_table: n must be nonnegative");
  return chartable_cache().get_or_compute(n, [n]() -> CharacterTable {
    const std::string name = "chartable_n" + std::to_string(n);
    if (auto text = cache::load(name)) {
      try {
        CharacterTable t = chartable_from_json(nlohmann::json::parse(*text));
        if (t.n == n && t.order.size() == partitions_of(n).size()) return t;
      } catch (...) {
      }
    }
    CharacterTable t = compute_character_table(n);
    cache::store(name, chartable_to_json(t).dump(2));
    return t;
  });
}

RatFun char_value(const Partition& lambda, const Permutation& w) {
  const int n = lambda.size();
  if (w.n() != n) throw std::invalid_argument("char_value: size mismatch");
  auto table = class_polynomials(n);
  auto chars = character_table(n);
  RatFun out;
  for (const auto& [mu, f] : table->row(w)) out += f * chars->value(lambda, mu);
  return out;
}

namespace {

const std::map<Partition, RatFun>& schur_family(int n) {
  auto ptr = schur_cache().get_or_compute(n, [n]() {
    auto table = class_polynomials(n);
    auto chars = character_table(n);
    std::vector<Partition> parts = partitions_of(n);
    std::map<Partition, RatFun> fam;
    for (const Partition& lam : parts) {
      RatFun sum;
      for (const auto& [w, row] : table->rows) {
        RatFun cw, cwi;
        const auto& rowi = table->row(w.inverse());
        for (const auto& [mu, f] : row) cw += f * chars->value(lam, mu);
        for (const auto& [mu, f] : rowi) cwi += f * chars->value(lam, mu);
        if (!cw.is_zero() && !cwi.is_zero())
          sum += RatFun::v_power(-w.length()) * cw * cwi;
      }
      fam.emplace(lam, sum / RatFun(standard_tableaux_count(lam)));
    }
    return fam;
  });
  return *ptr;
}

}  // namespace

RatFun schur_element(const Partition& lambda) {
  return schur_family(lambda.size()).at(lambda);
}

RatFun poincare(int n) {
  RatFun out;
  for (const Permutation& w : all_permutations(n)) out += RatFun::v_power(w.length());
  return out;
}

RatFun generic_degree(const Partition& lambda) {
  return poincare(lambda.size()) / schur_element(lambda);
}

namespace {

const std::map<Partition, HeckeElement>& idem_family(int n) {
  auto ptr = idem_cache().get_or_compute(n, [n]() {
    auto table = class_polynomials(n);
    auto chars = character_table(n);
    std::map<Partition, HeckeElement> fam;
    for (const Partition& lam : partitions_of(n)) {
      RatFun kappa = schur_element(lam);
      // e^lambda_v = (1/kappa) sum_w chi(T_w) T_w^v.
      HeckeElement e(n);
      for (const auto& [w, row] : table->rows) {
        RatFun chi;
        for (const auto& [mu, f] : row) chi += f * chars->value(lam, mu);
        if (!chi.is_zero())
          e.add_term(w.inverse(), chi * RatFun::v_power(-w.length()) / kappa);
      }
      // Cross-check against (1/kappa) sum_mu chi(T_{w_mu}) f*_mu.
      HeckeElement alt(n);
      for (const Partition& mu : partitions_of(n)) {
        RatFun c = chars->value(lam, mu) / kappa;
        if (c.is_zero()) continue;
        for (const auto& [w, gc] : gr_element(mu).terms()) alt.add_term(w, gc * c);
      }
      if (!(e == alt))
        throw std::logic_error("central_idempotent: the two defining expansions differ");
      fam.emplace(lam, std::move(e));
    }
    return fam;
  });
  return *ptr;
}

}  // namespace

HeckeElement central_idempotent(const Partition& lambda) {
  return idem_family(lambda.size()).at(lambda);
}

CentralElement central_idempotent_coords(const Partition& lambda) {
  const int n = lambda.size();
  auto chars = character_table(n);
  RatFun kappa = schur_element(lambda);
  CentralElement z(n);
  for (const Partition& mu : partitions_of(n))
    z.add(mu, chars->value(lambda, mu) / kappa);
  return z;
}

SymFun psi(const CentralElement& z) {
  SymFun out(z.n(), Basis::m);
  for (const auto& [lam, c] : z.coords()) out = out + m_bar(lam).scaled(c);
  return out;
}

CentralElement psi_inv(const SymFun& f) {
  const int n = f.degree();
  std::vector<Partition> parts = partitions_of(n);
  auto inv_ptr = mbar_inverse_cache().get_or_compute(n, [&]() {
    RfMatrix B(parts.size(), parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
      SymFun mb = m_bar(parts[i]);
      for (size_t j = 0; j < parts.size(); ++j) B.at(i, j) = mb.coeff(parts[j]);
    }
    return B.inverse();
  });
  SymFun fm = convert(f, Basis::m);
  CentralElement z(n);
  for (size_t i = 0; i < parts.size(); ++i) {
    RatFun c;
    for (size_t j = 0; j < parts.size(); ++j) {
      RatFun fj = fm.coeff(parts[j]);
      if (!fj.is_zero()) c += fj * inv_ptr->at(j, i);
    }
    if (!c.is_zero()) z.add(parts[i], c);
  }
  return z;
}

VirtualCharacter::VirtualCharacter(int n, std::map<Partition, RatFun> coords) : n_(n) {
  for (auto& [lam, c] : coords) {
    if (lam.size() != n)
      throw std::invalid_argument("VirtualCharacter: partition size != n");
    if (!c.is_zero()) coords_.emplace(lam, std::move(c));
  }
}

VirtualCharacter VirtualCharacter::irreducible(const Partition& lambda) {
  return VirtualCharacter(lambda.size(), {{lambda, RatFun(1)}});
}

RatFun VirtualCharacter::coord(const Partition& lambda) const {
  auto it = coords_.find(lambda);
  return it == coords_.end() ? RatFun() : it->second;
}

VirtualCharacter& VirtualCharacter::add(const Partition& lambda, const RatFun& c) {
  if (lambda.size() != n_)
    throw std::invalid_argument("VirtualCharacter: partition size != n");
  RatFun next = coord(lambda) + c;
  if (next.is_zero())
    coords_.erase(lambda);
  else
    coords_[lambda] = next;
  return *this;
}

RatFun VirtualCharacter::operator()(const Permutation& w) const {
  RatFun out;
  for (const auto& [lam, c] : coords_) out += c * char_value(lam, w);
  return out;
}

SymFun ch_v(const VirtualCharacter& chi) {
  const int n = chi.n();
  SymFun out(n, Basis::m);
  RatFun P = poincare(n);
  for (const auto& [lam, c] : chi.coords()) {
    RatFun scale = P / generic_degree(lam);
    out = out + psi(central_idempotent_coords(lam)).scaled(scale * c);
  }
  return out;
}

CentralElement theta(const VirtualCharacter& chi) {
  const int n = chi.n();
  auto table = class_polynomials(n);
  HeckeElement h(n);
  for (const auto& [w, row] : table->rows) {
    RatFun val;
    for (const auto& [mu, f] : row) {
      RatFun c;
      for (const auto& [lam, x] : chi.coords())
        c += x * character_table(n)->value(lam, mu);
      val += f * c;
    }
    if (!val.is_zero()) h.add_term(w.inverse(), val * RatFun::v_power(-w.length()));
  }
  return decompose_central(h);
}

VirtualCharacter induce(const VirtualCharacter& a, const VirtualCharacter& b) {
  VirtualCharacter out(a.n() + b.n());
  for (const auto& [mu, ca] : a.coords())
    for (const auto& [lam, cb] : b.coords()) {
      RatFun c = ca * cb;
      for (const auto& [nu, mult] : lr_coefficients(mu, lam))
        out.add(nu, c * RatFun(mult));
    }
  return out;
}

SymFun classical_psi(int n, const std::map<Partition, RatFun>& class_coords) {
  SymFun out(n, Basis::p);
  for (const auto& [lam, c] : class_coords) {
    if (lam.size() != n)
      throw std::invalid_argument("classical_psi: partition size != n");
    out.add_term(lam, c / RatFun(z_factor(lam)));
  }
  return out;
}

SymFun star_product(const SymFun& f, const SymFun& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("star_product: degree mismatch");
  SymFun fs = convert(f, Basis::s), gs = convert(g, Basis::s);
  SymFun out(f.degree(), Basis::s);
  for (const auto& [lam, c] : fs.coeffs()) {
    RatFun d = gs.coeff(lam);
    if (!d.is_zero()) out.add_term(lam, c * d * schur_element(lam));
  }
  return out;
}

}  // namespace heckez
