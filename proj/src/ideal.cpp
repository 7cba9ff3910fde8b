#include "hilbkit/ideal.hpp"

#include <mutex>
#include <random>

#include "hilbkit/error.hpp"
#include "hilbkit/linalg.hpp"

namespace hilbkit {

struct Ideal::Cache {
  std::once_flag once;
  std::optional<GroebnerBasis> gb;
};

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> generators)
    : ring_(ring.with_order(MonomialOrder::grevlex())), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!g.ring().same_variables(ring_)) throw RingMismatch();
    if (g.is_zero()) continue;
    gens_.push_back(g.transfer(ring_));
  }
}

Ideal Ideal::parse(const PolyRing& ring, std::span<const std::string> generators) {
  std::vector<Polynomial> gens;
  for (const auto& text : generators) gens.push_back(parse_polynomial(text, ring));
  return Ideal(ring, std::move(gens));
}

const GroebnerBasis& Ideal::gb() const {
  std::call_once(cache_->once, [this] {
    if (gens_.empty())
      cache_->gb.emplace(ring_, std::vector<Polynomial>{}, std::vector<Polynomial>{},
                         std::vector<std::vector<Polynomial>>{});
    else
      cache_->gb.emplace(buchberger(gens_, MonomialOrder::grevlex()));
  });
  return *cache_->gb;
}

GroebnerBasis Ideal::gb(const MonomialOrder& order) const {
  if (order == MonomialOrder::grevlex()) return gb();
  if (gens_.empty())
    return GroebnerBasis(ring_.with_order(order), {}, {}, {});
  return buchberger(gens_, order);
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

bool Ideal::is_unit() const { return gb().is_unit(); }

bool Ideal::contains(const Polynomial& f) const {
  if (!f.ring().same_variables(ring_)) throw RingMismatch();
  if (f.is_zero()) return true;
  if (gens_.empty()) return false;
  return normal_form(f, gb()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  if (!other.ring_.same_variables(ring_)) throw RingMismatch();
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

Ideal Ideal::canonical() const {
  Ideal out(ring_, gb().elements());
  // The canonical generators are their own reduced basis.
  std::call_once(out.cache_->once, [&] { out.cache_->gb.emplace(gb()); });
  return out;
}

bool Ideal::operator==(const Ideal& other) const {
  if (!ring_.same_variables(other.ring_)) return false;
  const auto& a = gb().elements();
  const auto& b = other.gb().elements();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

namespace {

void require_same(const Ideal& a, const Ideal& b) {
  if (!a.ring().same_variables(b.ring())) throw RingMismatch();
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens)).canonical();
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens)).canonical();
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  const PolyRing& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring, {});
  if (a.is_unit()) return b.canonical();
  if (b.is_unit()) return a.canonical();
  PolyRing big = ring.with_aux(ring.num_aux() + 1);
  int u_idx = big.aux_index(ring.num_aux());
  Polynomial u = Polynomial::variable(big, u_idx);
  Polynomial one_minus_u = Polynomial::constant(big, 1) - u;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(u * f.transfer(big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_u * g.transfer(big));
  std::vector<Polynomial> out;
  for (const auto& p : eliminate(gens, 1u << u_idx)) out.push_back(p.transfer(ring));
  return Ideal(ring, std::move(out)).canonical();
}

Ideal intersect_all(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw DomainError("intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc.canonical();
}

Ideal quotient(const Ideal& ideal, const Polynomial& g) {
  const PolyRing& ring = ideal.ring();
  if (!g.ring().same_variables(ring)) throw RingMismatch();
  if (g.is_zero()) throw DomainError("quotient by the zero ideal");
  if (g.is_constant()) return ideal.canonical();
  if (ideal.contains(g)) return Ideal(ring, {Polynomial::constant(ring, 1)});
  Ideal principal(ring, {g});
  Ideal inter = intersect(ideal, principal);
  Polynomial gg = g.transfer(ring);
  std::vector<Polynomial> out;
  for (const auto& f : inter.generators()) out.push_back(divide_exact(f, gg));
  return Ideal(ring, std::move(out)).canonical();
}

Ideal quotient(const Ideal& ideal, const Ideal& j) {
  require_same(ideal, j);
  if (j.is_zero()) throw DomainError("quotient by the zero ideal");
  std::vector<Ideal> parts;
  for (const auto& g : j.generators()) parts.push_back(quotient(ideal, g));
  return intersect_all(parts);
}

namespace {

// Swap variables a and b.
Polynomial swap_vars(const Polynomial& p, int a, int b) {
  if (a == b) return p;
  const PolyRing& ring = p.ring();
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    int ea = m[a], eb = m[b];
    m.set(a, eb);
    m.set(b, ea);
    terms.push_back({t.coeff, m});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Ideal saturate_variable_homogeneous(const Ideal& ideal, int var) {
  const PolyRing& ring = ideal.ring();
  const int last = ring.total_vars() - 1;
  std::vector<Polynomial> swapped;
  for (const auto& g : ideal.generators()) swapped.push_back(swap_vars(g, var, last));
  Ideal sw(ring, std::move(swapped));
  std::vector<Polynomial> out;
  for (const auto& g : sw.gb().elements()) {
    int k = 65535;
    for (const auto& t : g.terms()) k = std::min(k, t.mono[last]);
    Polynomial h = g;
    if (k > 0) h = divide_exact(g, Polynomial::term(ring, 1, Monomial::variable(last, k)));
    out.push_back(swap_vars(h, var, last));
  }
  return Ideal(ring, std::move(out)).canonical();
}

}  // namespace

Ideal saturate(const Ideal& ideal, const Polynomial& g) {
  const PolyRing& ring = ideal.ring();
  if (!g.ring().same_variables(ring)) throw RingMismatch();
  if (g.is_zero()) throw DomainError("saturation by the zero ideal");
  if (ideal.is_zero() || g.is_constant()) return ideal.canonical();
  if (g.size() == 1 && g.leading_monomial().degree() == 1 && ideal.is_homogeneous()) {
    int var = 0;
    while (g.leading_monomial()[var] == 0) ++var;
    return saturate_variable_homogeneous(ideal, var);
  }
  PolyRing big = ring.with_aux(ring.num_aux() + 1);
  int u_idx = big.aux_index(ring.num_aux());
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(f.transfer(big));
  gens.push_back(Polynomial::constant(big, 1) - Polynomial::variable(big, u_idx) * g.transfer(big));
  std::vector<Polynomial> out;
  for (const auto& p : eliminate(gens, 1u << u_idx)) out.push_back(p.transfer(ring));
  return Ideal(ring, std::move(out)).canonical();
}

Ideal saturate(const Ideal& ideal, const Ideal& j) {
  require_same(ideal, j);
  Ideal cur = ideal.canonical();
  for (;;) {
    Ideal next = quotient(cur, j);
    if (next == cur) return cur;
    cur = next;
  }
}

Ideal irrelevant_ideal(const PolyRing& ring) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < ring.num_vars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal saturate_irrelevant(const Ideal& ideal) {
  const PolyRing& ring = ideal.ring();
  std::vector<Ideal> parts;
  for (int i = 0; i < ring.num_vars(); ++i) {
    Ideal s = saturate(ideal, Polynomial::variable(ring, i));
    if (s.is_unit()) continue;
    parts.push_back(std::move(s));
  }
  if (parts.empty()) return Ideal(ring, {Polynomial::constant(ring, 1)});
  return intersect_all(parts);
}

Ideal minimalize(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw DomainError("minimalize requires homogeneous generators");
  std::vector<Polynomial> kept = ideal.generators();
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (Ideal(ideal.ring(), others).contains(kept[i])) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return Ideal(ideal.ring(), std::move(kept));
}

Ideal linear_change(const Ideal& ideal, const std::vector<std::vector<Rational>>& matrix) {
  const PolyRing& ring = ideal.ring();
  const auto n = static_cast<std::size_t>(ring.num_vars());
  if (matrix.size() != n) throw DomainError("linear change has the wrong size");
  std::vector<Polynomial> images;
  for (int i = 0; i < ring.total_vars(); ++i) images.push_back(Polynomial::variable(ring, i));
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw DomainError("linear change has the wrong size");
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j)
      terms.push_back({matrix[i][j], Monomial::variable(static_cast<int>(j))});
    images[i] = Polynomial::from_terms(ring, std::move(terms));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.substitute_all(images));
  return Ideal(ring, std::move(gens));
}

LinearChange random_linear_change(const Ideal& ideal, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(ideal.ring().num_vars());
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= 4; ++attempt) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    RationalMatrix check(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = static_cast<long>(rng() % 11) - 5;
        check(i, j) = m[i][j];
      }
    if (check.determinant() == 0) continue;
    return {linear_change(ideal, m), std::move(m), attempt};
  }
  throw DomainError("random linear change: singular matrix after three redraws");
}

}  // namespace hilbkit
