#include "hilbkit/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

#include "hilbkit/error.hpp"
#include "hilbkit/linalg.hpp"

namespace hilbkit {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

namespace {

using Row = std::vector<Polynomial>;

void row_sub_mul(Row& row, const Rational& c, const Monomial& m, const Row& other) {
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = row[j].sub_mul(c, m, other[j]);
}

void row_scale(Row& row, const Rational& c) {
  for (auto& p : row) p = p.scale(c);
}

struct Entry {
  Polynomial poly;
  Row row;
  int sugar;
  bool active = true;
};

// Reduce p by the active entries (all entries except `skip`). With full=false
// only the leading term is reduced repeatedly.
Polynomial reduce_by(Polynomial p, Row* row, const std::vector<Entry>& basis, bool full,
                     std::size_t skip = static_cast<std::size_t>(-1)) {
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    const Entry* hit = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || !basis[k].active) continue;
      if (basis[k].poly.leading_monomial().divides(lm)) {
        hit = &basis[k];
        break;
      }
    }
    if (hit) {
      Rational c = p.leading_coeff() / hit->poly.leading_coeff();
      Monomial m = lm / hit->poly.leading_monomial();
      if (row) row_sub_mul(*row, c, m, hit->row);
      p = p.sub_mul(c, m, hit->poly);
    } else if (full) {
      rem.push_back(p.leading_term());
      p.pop_leading();
    } else {
      break;
    }
  }
  if (!full) return p;
  return Polynomial::from_terms(p.ring(), std::move(rem));
}

struct Pair {
  int i;  // -1 marks an input generator waiting to be inserted
  int j;
  Monomial lcm;
  int sugar;
  std::uint64_t tie;
};

class BuchbergerEngine {
 public:
  BuchbergerEngine(const PolyRing& ring, std::vector<Polynomial> gens, const GroebnerOptions& opts)
      : ring_(ring), gens_(std::move(gens)), opts_(opts) {
    if (opts.shuffle_seed) rng_.seed(*opts.shuffle_seed);
  }

  GroebnerBasis run() {
    std::vector<std::size_t> order(gens_.size());
    std::iota(order.begin(), order.end(), 0);
    if (opts_.shuffle_seed) std::shuffle(order.begin(), order.end(), rng_);
    for (auto j : order) {
      const auto& g = gens_[j];
      queue_.push_back({-1, static_cast<int>(j), g.leading_monomial(), g.degree(), next_tie()});
    }
    while (!queue_.empty()) {
      auto it = select();
      Pair pair = *it;
      queue_.erase(it);
      Polynomial h(ring_);
      Row row;
      if (pair.i < 0) {
        h = gens_[static_cast<std::size_t>(pair.j)];
        if (track()) row = unit_row(static_cast<std::size_t>(pair.j));
      } else {
        h = spoly(pair.i, pair.j, track() ? &row : nullptr);
      }
      h = reduce_by(std::move(h), track() ? &row : nullptr, basis_, true);
      if (h.is_zero()) continue;
      normalize(h, row);
      insert(std::move(h), std::move(row), pair.sugar);
    }
    return finish();
  }

 private:
  PolyRing ring_;
  std::vector<Polynomial> gens_;
  GroebnerOptions opts_;
  std::mt19937_64 rng_;
  std::uint64_t seq_ = 0;
  std::vector<Entry> basis_;
  std::vector<Pair> queue_;

  bool track() const { return opts_.track_transform; }

  std::uint64_t next_tie() { return opts_.shuffle_seed ? rng_() : seq_++; }

  Row unit_row(std::size_t j) const {
    Row row(gens_.size(), Polynomial(ring_));
    row[j] = Polynomial::constant(ring_, 1);
    return row;
  }

  std::vector<Pair>::iterator select() {
    return std::min_element(queue_.begin(), queue_.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = ring_.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return a.tie < b.tie;
    });
  }

  Polynomial spoly(int i, int j, Row* row) const {
    const auto& a = basis_[static_cast<std::size_t>(i)];
    const auto& b = basis_[static_cast<std::size_t>(j)];
    Monomial l = a.poly.leading_monomial().lcm(b.poly.leading_monomial());
    Monomial ma = l / a.poly.leading_monomial();
    Monomial mb = l / b.poly.leading_monomial();
    Rational ca = 1 / a.poly.leading_coeff();
    Rational cb = 1 / b.poly.leading_coeff();
    if (row) {
      *row = Row(gens_.size(), Polynomial(ring_));
      row_sub_mul(*row, -ca, ma, a.row);
      row_sub_mul(*row, cb, mb, b.row);
    }
    return a.poly.mul_term(ca, ma).sub_mul(cb, mb, b.poly);
  }

  void normalize(Polynomial& h, Row& row) const {
    Polynomial prim = h.primitive();
    if (track()) {
      Rational factor = prim.leading_coeff() / h.leading_coeff();
      if (factor != 1) row_scale(row, factor);
    }
    h = std::move(prim);
  }

  // Gebauer-Moeller update.
  void insert(Polynomial h, Row row, int sugar) {
    const Monomial lh = h.leading_monomial();
    const int hi = static_cast<int>(basis_.size());

    struct Cand {
      int g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c_set;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!basis_[k].active) continue;
      const Monomial& lg = basis_[k].poly.leading_monomial();
      c_set.push_back({static_cast<int>(k), lh.lcm(lg), lh.coprime(lg)});
    }
    std::vector<Cand> d_set;
    for (std::size_t a = 0; a < c_set.size(); ++a) {
      const Cand& cand = c_set[a];
      bool keep = cand.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c_set.size() && keep; ++b)
          if (c_set[b].lcm.divides(cand.lcm)) keep = false;
        for (const auto& d : d_set)
          if (keep && d.lcm.divides(cand.lcm)) keep = false;
      }
      if (keep) d_set.push_back(cand);
    }

    // Chain criterion on old pairs.
    std::erase_if(queue_, [&](const Pair& p) {
      if (p.i < 0) return false;
      if (!lh.divides(p.lcm)) return false;
      const Monomial& li = basis_[static_cast<std::size_t>(p.i)].poly.leading_monomial();
      const Monomial& lj = basis_[static_cast<std::size_t>(p.j)].poly.leading_monomial();
      return !(li.lcm(lh) == p.lcm) && !(lj.lcm(lh) == p.lcm);
    });

    for (const auto& d : d_set) {
      if (d.coprime) continue;
      const auto& g = basis_[static_cast<std::size_t>(d.g)];
      int s = std::max(sugar + (d.lcm.degree() - lh.degree()),
                       g.sugar + (d.lcm.degree() - g.poly.leading_monomial().degree()));
      queue_.push_back({d.g, hi, d.lcm, s, next_tie()});
    }

    for (auto& e : basis_)
      if (e.active && lh.divides(e.poly.leading_monomial())) e.active = false;
    basis_.push_back({std::move(h), std::move(row), sugar, true});
  }

  GroebnerBasis finish() {
    // Interreduce the (already minimal) active set.
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!basis_[k].active) continue;
      Row* row = track() ? &basis_[k].row : nullptr;
      Polynomial lead = Polynomial::term(ring_, basis_[k].poly.leading_coeff(),
                                         basis_[k].poly.leading_monomial());
      Polynomial tail = basis_[k].poly - lead;
      Row tail_row;
      if (row) tail_row = *row;
      tail = reduce_by(std::move(tail), row ? &tail_row : nullptr, basis_, true, k);
      basis_[k].poly = lead + tail;
      if (row) *row = std::move(tail_row);
    }
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (basis_[k].active) idx.push_back(k);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return ring_.compare(basis_[a].poly.leading_monomial(), basis_[b].poly.leading_monomial()) < 0;
    });
    std::vector<Polynomial> elements;
    std::vector<Row> transform;
    for (auto k : idx) {
      Rational inv = 1 / basis_[k].poly.leading_coeff();
      elements.push_back(basis_[k].poly.scale(inv));
      if (track()) {
        Row r = std::move(basis_[k].row);
        row_scale(r, inv);
        transform.push_back(std::move(r));
      }
    }
    return GroebnerBasis(ring_, std::move(gens_), std::move(elements), std::move(transform));
  }
};

void check_same_ring(std::span<const Polynomial> polys) {
  for (const auto& p : polys)
    if (!p.ring().same_variables(polys.front().ring())) throw RingMismatch();
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  if (gens.empty()) throw DomainError("buchberger needs at least one generator");
  check_same_ring(gens);
  PolyRing ring = gens.front().ring().with_order(order);
  std::vector<Polynomial> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.is_zero()) throw DomainError("zero generator");
    moved.push_back(g.transfer(ring));
  }
  return BuchbergerEngine(ring, std::move(moved), options).run();
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!f.ring().same_variables(gb.ring())) throw RingMismatch();
  Polynomial p = f.transfer(gb.ring());
  std::vector<Term> rem;
  const auto& elems = gb.elements();
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    const Polynomial* hit = nullptr;
    for (const auto& g : elems) {
      if (g.leading_monomial().divides(lm)) {
        hit = &g;
        break;
      }
    }
    if (hit) {
      p = p.sub_mul(p.leading_coeff() / hit->leading_coeff(), lm / hit->leading_monomial(), *hit);
    } else {
      rem.push_back(p.leading_term());
      p.pop_leading();
    }
  }
  return Polynomial::from_terms(gb.ring(), std::move(rem));
}

Division divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  if (divisors.empty()) return {{}, f};
  const PolyRing& ring = divisors.front().ring();
  if (!f.ring().same_variables(ring)) throw RingMismatch();
  Division out{{}, Polynomial(ring)};
  out.quotients.assign(divisors.size(), Polynomial(ring));
  std::vector<std::vector<Term>> qterms(divisors.size());
  Polynomial p = f.transfer(ring);
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    std::size_t k = 0;
    for (; k < divisors.size(); ++k)
      if (!divisors[k].is_zero() && divisors[k].leading_monomial().divides(lm)) break;
    if (k < divisors.size()) {
      Rational c = p.leading_coeff() / divisors[k].leading_coeff();
      Monomial m = lm / divisors[k].leading_monomial();
      qterms[k].push_back({c, m});
      p = p.sub_mul(c, m, divisors[k]);
    } else {
      rem.push_back(p.leading_term());
      p.pop_leading();
    }
  }
  for (std::size_t k = 0; k < divisors.size(); ++k)
    out.quotients[k] = Polynomial::from_terms(ring, std::move(qterms[k]));
  out.remainder = Polynomial::from_terms(ring, std::move(rem));
  return out;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  std::vector<Polynomial> d{g};
  auto res = divide(f, d);
  if (!res.remainder.is_zero()) throw DomainError("polynomial division is not exact");
  return res.quotients[0].transfer(f.ring());
}

bool s_pairs_reduce_to_zero(const GroebnerBasis& gb) {
  const auto& e = gb.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      Monomial l = e[i].leading_monomial().lcm(e[j].leading_monomial());
      Polynomial s = e[i]
                         .mul_term(1 / e[i].leading_coeff(), l / e[i].leading_monomial())
                         .sub_mul(1 / e[j].leading_coeff(), l / e[j].leading_monomial(), e[j]);
      if (!normal_form(s, gb).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  const auto& e = gb.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].leading_coeff() != 1) return false;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : e[i].terms())
        if (e[j].leading_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

bool transform_is_exact(const GroebnerBasis& gb) {
  if (!gb.has_transform()) return false;
  const auto& gens = gb.generators();
  for (std::size_t k = 0; k < gb.size(); ++k) {
    if (!(apply_syzygy(gb.transform()[k], gens) == gb.elements()[k])) return false;
  }
  return true;
}

std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, std::uint32_t front_mask) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return {};
  const PolyRing& ring = nonzero.front().ring();
  if (front_mask == 0) return nonzero;
  auto gb = buchberger(nonzero, MonomialOrder::elimination(front_mask));
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements())
    if (g.degree_in(front_mask) == 0) out.push_back(g.transfer(ring));
  return out;
}

Polynomial apply_syzygy(std::span<const Polynomial> components, std::span<const Polynomial> gens) {
  if (components.size() != gens.size()) throw DomainError("syzygy length mismatch");
  if (gens.empty()) throw DomainError("empty generator list");
  const PolyRing& ring = gens.front().ring();
  Polynomial acc(ring);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (components[j].is_zero()) continue;
    acc = acc + components[j].transfer(ring) * gens[j];
  }
  return acc;
}

namespace {

int syzygy_degree(const std::vector<Polynomial>& s, std::span<const Polynomial> gens, bool* homogeneous) {
  int deg = -1;
  *homogeneous = true;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j].is_zero()) continue;
    if (!s[j].is_homogeneous()) *homogeneous = false;
    int d = s[j].degree() + gens[j].degree();
    if (deg >= 0 && d != deg) *homogeneous = false;
    deg = std::max(deg, d);
  }
  return deg;
}

// Coordinates of homogeneous module elements of a fixed degree over the basis
// {monomial * e_j}.
class GradedCoordinates {
 public:
  std::size_t index(std::size_t component, const Monomial& m) {
    auto key = std::make_pair(component, m);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    std::size_t id = map_.size();
    map_.emplace(key, id);
    return id;
  }
  std::size_t size() const { return map_.size(); }

  std::vector<std::pair<std::size_t, Rational>> sparse(const std::vector<Polynomial>& v) {
    std::vector<std::pair<std::size_t, Rational>> out;
    for (std::size_t j = 0; j < v.size(); ++j)
      for (const auto& t : v[j].terms()) out.emplace_back(index(j, t.mono), t.coeff);
    return out;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::size_t, Monomial>& k) const {
      return k.second.hash() * 31u + k.first;
    }
  };
  std::unordered_map<std::pair<std::size_t, Monomial>, std::size_t, KeyHash> map_;
};

std::vector<Polynomial> shift(const std::vector<Polynomial>& v, const Monomial& m) {
  std::vector<Polynomial> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.mul_term(1, m));
  return out;
}

// Multiples m*s of the spanning syzygies landing in degree `deg`.
std::vector<std::vector<Polynomial>> degree_slice(std::span<const Syzygy> span, int deg, int nvars) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& s : span) {
    if (s.degree > deg) continue;
    for (const auto& m : monomials_of_degree(nvars, deg - s.degree)) out.push_back(shift(s.components, m));
  }
  return out;
}

RationalVector dense(const std::vector<std::pair<std::size_t, Rational>>& sp, std::size_t dim) {
  RationalVector v(dim);
  for (const auto& [i, c] : sp) v[i] += c;
  return v;
}

void normalize_sign(std::vector<Polynomial>& s) {
  for (auto& p : s) {
    if (p.is_zero()) continue;
    Rational inv = 1 / p.leading_coeff();
    for (auto& q : s) q = q.scale(inv);
    return;
  }
}

}  // namespace

bool in_syzygy_span(const Syzygy& v, std::span<const Syzygy> span, std::span<const Polynomial> gens) {
  if (gens.empty()) return false;
  int nvars = gens.front().ring().total_vars();
  GradedCoordinates coords;
  auto target = coords.sparse(v.components);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  for (const auto& w : degree_slice(span, v.degree, nvars)) rows.push_back(coords.sparse(w));
  SpanBuilder builder(coords.size());
  for (const auto& r : rows) builder.add(dense(r, coords.size()));
  return builder.contains(dense(target, coords.size()));
}

SyzygyModule syzygies(std::span<const Polynomial> gens_in) {
  if (gens_in.empty()) throw DomainError("syzygies of an empty list");
  std::vector<Polynomial> gens(gens_in.begin(), gens_in.end());
  for (const auto& g : gens) {
    if (g.is_zero()) throw DomainError("zero generator");
    if (!g.is_homogeneous()) throw DomainError("syzygies require homogeneous generators");
  }
  const PolyRing ring = gens.front().ring().with_order(MonomialOrder::grevlex());
  for (auto& g : gens) g = g.transfer(ring);
  const std::size_t r = gens.size();

  GroebnerOptions opts;
  opts.track_transform = true;
  GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex(), opts);
  const auto& elems = gb.elements();
  const auto& T = gb.transform();
  const std::size_t s = elems.size();

  SyzygyModule out;
  out.generators = gens;
  bool certified = true;

  auto lift = [&](const std::vector<Polynomial>& sigma) {
    std::vector<Polynomial> res(r, Polynomial(ring));
    for (std::size_t k = 0; k < s; ++k) {
      if (sigma[k].is_zero()) continue;
      for (std::size_t j = 0; j < r; ++j)
        if (!T[k][j].is_zero()) res[j] = res[j] + sigma[k] * T[k][j];
    }
    return res;
  };

  std::vector<std::vector<Polynomial>> candidates;
  // Schreyer syzygies of the basis.
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      const Monomial& li = elems[i].leading_monomial();
      const Monomial& lj = elems[j].leading_monomial();
      Monomial l = li.lcm(lj);
      Polynomial sp = elems[i].mul_term(1, l / li).sub_mul(1, l / lj, elems[j]);
      auto div = divide(sp, elems);
      if (!div.remainder.is_zero()) certified = false;
      std::vector<Polynomial> sigma(s, Polynomial(ring));
      for (std::size_t k = 0; k < s; ++k) sigma[k] = -div.quotients[k];
      sigma[i] = sigma[i] + Polynomial::term(ring, 1, l / li);
      sigma[j] = sigma[j] - Polynomial::term(ring, 1, l / lj);
      candidates.push_back(lift(sigma));
    }
  }
  // e_i - sum_k W_ik T_k, where gens[i] = sum_k W_ik elems[k].
  for (std::size_t i = 0; i < r; ++i) {
    auto div = divide(gens[i], elems);
    if (!div.remainder.is_zero()) certified = false;
    auto lifted = lift(div.quotients);
    std::vector<Polynomial> v(r, Polynomial(ring));
    for (std::size_t j = 0; j < r; ++j) v[j] = -lifted[j];
    v[i] = v[i] + Polynomial::constant(ring, 1);
    candidates.push_back(std::move(v));
  }

  std::vector<Syzygy> cands;
  for (auto& c : candidates) {
    bool zero = std::all_of(c.begin(), c.end(), [](const Polynomial& p) { return p.is_zero(); });
    if (zero) continue;
    if (!apply_syzygy(c, gens).is_zero()) certified = false;
    bool homogeneous;
    int deg = syzygy_degree(c, gens, &homogeneous);
    if (!homogeneous) throw DomainError("lifted syzygy is not homogeneous");
    normalize_sign(c);
    cands.push_back({std::move(c), deg});
  }
  auto weight = [](const Syzygy& z) {
    std::size_t n = 0;
    for (const auto& p : z.components) n += p.size();
    return n;
  };
  std::stable_sort(cands.begin(), cands.end(), [&](const Syzygy& a, const Syzygy& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return weight(a) < weight(b);
  });

  // Minimal generating set, degree by degree.
  const int nvars = ring.total_vars();
  std::size_t pos = 0;
  while (pos < cands.size()) {
    int deg = cands[pos].degree;
    std::size_t end = pos;
    while (end < cands.size() && cands[end].degree == deg) ++end;
    GradedCoordinates coords;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    for (const auto& w : degree_slice(out.syzygies, deg, nvars)) rows.push_back(coords.sparse(w));
    std::vector<std::vector<std::pair<std::size_t, Rational>>> crow;
    for (std::size_t k = pos; k < end; ++k) crow.push_back(coords.sparse(cands[k].components));
    SpanBuilder builder(coords.size());
    for (const auto& row : rows) builder.add(dense(row, coords.size()));
    for (std::size_t k = pos; k < end; ++k)
      if (builder.add(dense(crow[k - pos], coords.size()))) out.syzygies.push_back(cands[k]);
    pos = end;
  }
  out.schreyer_certified = certified;
  return out;
}

}  // namespace hilbkit
