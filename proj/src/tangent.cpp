#include "hilbkit/tangent.hpp"

#include <map>

#include "hilbkit/error.hpp"
#include "hilbkit/hilbert.hpp"
#include "hilbkit/linalg.hpp"

namespace hilbkit {

namespace {

void require_plain_homogeneous(const Ideal& ideal) {
  if (ideal.ring().has_param() || ideal.ring().num_aux() > 0)
    throw DomainError("tangent computations need a ring without parameter");
  if (!ideal.is_homogeneous()) throw DomainError("tangent computations need a homogeneous ideal");
  if (ideal.is_zero()) throw DomainError("tangent computations need a nonzero ideal");
}

struct MonoLess {
  const PolyRing* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return ring->compare(a, b) > 0; }
};

// Schreyer syzygies of the reduced basis, unminimalized.
std::vector<std::vector<Polynomial>> schreyer_of_basis(const GroebnerBasis& gb) {
  const auto& e = gb.elements();
  std::vector<std::vector<Polynomial>> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const Monomial& li = e[i].leading_monomial();
      const Monomial& lj = e[j].leading_monomial();
      Monomial l = li.lcm(lj);
      Polynomial s = e[i].mul_term(1, l / li).sub_mul(1, l / lj, e[j]);
      auto div = divide(s, e);
      if (!div.remainder.is_zero()) throw Error("basis is not a Groebner basis");
      std::vector<Polynomial> sigma;
      for (auto& q : div.quotients) sigma.push_back(-q);
      sigma[i] = sigma[i] + Polynomial::term(gb.ring(), 1, l / li);
      sigma[j] = sigma[j] - Polynomial::term(gb.ring(), 1, l / lj);
      out.push_back(std::move(sigma));
    }
  return out;
}

std::vector<std::vector<Polynomial>> syzygy_rows(const std::vector<Polynomial>& gens) {
  std::vector<std::vector<Polynomial>> out;
  for (auto& s : syzygies(gens).syzygies) out.push_back(std::move(s.components));
  return out;
}

// Builds the linear system for the given generators and syzygies.
struct System {
  std::vector<std::vector<Monomial>> unknowns;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  RationalMatrix matrix;
};

System build_system(const Ideal& ideal, const std::vector<Polynomial>& gens,
                    const std::vector<std::vector<Polynomial>>& syz) {
  const GroebnerBasis& gb = ideal.gb();
  const auto lead = gb.leading_monomials();
  const int nv = ideal.ring().total_vars();
  System sys;
  for (const auto& g : gens) {
    sys.offset.push_back(sys.total);
    sys.unknowns.push_back(standard_monomials(lead, nv, g.degree()));
    sys.total += sys.unknowns.back().size();
  }
  std::vector<RationalVector> rows;
  for (const auto& s : syz) {
    // column index -> normal form of s_j * b
    std::map<Monomial, std::map<std::size_t, Rational>, MonoLess> eq(MonoLess{&gb.ring()});
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (s[j].is_zero()) continue;
      for (std::size_t b = 0; b < sys.unknowns[j].size(); ++b) {
        Polynomial prod = s[j].mul_term(1, sys.unknowns[j][b]);
        Polynomial nf = normal_form(prod, gb);
        for (const auto& t : nf.terms()) eq[t.mono][sys.offset[j] + b] += t.coeff;
      }
    }
    for (const auto& [mono, coeffs] : eq) {
      RationalVector row(sys.total);
      bool nonzero = false;
      for (const auto& [col, c] : coeffs) {
        row[col] = c;
        if (c != 0) nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  sys.matrix = RationalMatrix(0, sys.total);
  for (auto& r : rows) sys.matrix.append_row(r);
  return sys;
}

std::vector<Polynomial> assignment_from_vector(const PolyRing& ring, const System& sys, const RationalVector& v) {
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < sys.unknowns.size(); ++j) {
    std::vector<Term> terms;
    for (std::size_t b = 0; b < sys.unknowns[j].size(); ++b) {
      const Rational& c = v[sys.offset[j] + b];
      if (c != 0) terms.push_back({c, sys.unknowns[j][b]});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

}  // namespace

TangentReport hom_degree_zero(const Ideal& ideal, const TangentOptions& options) {
  require_plain_homogeneous(ideal);
  std::vector<Polynomial> gens;
  std::vector<std::vector<Polynomial>> syz;
  if (options.gb_syzygies) {
    gens = ideal.gb().elements();
    if (!(Ideal(ideal.ring(), gens) == minimalize(ideal).canonical()) ||
        minimalize(ideal).generators().size() != gens.size())
      throw DomainError("the reduced basis is not a minimal generating set");
    syz = schreyer_of_basis(ideal.gb());
  } else {
    gens = minimalize(ideal).generators();
    syz = syzygy_rows(gens);
  }
  System sys = build_system(ideal, gens, syz);
  TangentReport report;
  report.generators = gens;
  report.unknowns = sys.unknowns;
  report.total_unknowns = sys.total;
  report.constraints = sys.matrix.rows();
  report.constraint_rank = sys.matrix.rank();
  report.syzygies = syz.size();
  report.dimension = static_cast<int>(sys.total - report.constraint_rank);
  if (options.with_basis) {
    for (const auto& v : sys.matrix.nullspace())
      report.basis.push_back(assignment_from_vector(ideal.gb().ring(), sys, v));
    if (report.basis.size() != static_cast<std::size_t>(report.dimension))
      throw Error("rank and nullspace disagree");
  }
  return report;
}

bool explicit_basis_check(const Ideal& ideal, std::span<const Polynomial> images) {
  require_plain_homogeneous(ideal);
  const auto& gens = ideal.generators();
  if (images.size() != gens.size()) throw DomainError("one image per generator is required");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (images[i].is_zero()) continue;
    if (!images[i].is_homogeneous() || images[i].degree() != gens[i].degree())
      throw DomainError("image " + std::to_string(i) + " has the wrong degree");
  }
  for (const auto& s : syzygies(gens).syzygies)
    if (!ideal.contains(apply_syzygy(s.components, images))) return false;
  return true;
}

std::size_t assignment_rank(const Ideal& ideal, std::span<const std::vector<Polynomial>> assignments) {
  require_plain_homogeneous(ideal);
  const GroebnerBasis& gb = ideal.gb();
  const auto lead = gb.leading_monomials();
  const int nv = ideal.ring().total_vars();
  const auto& gens = ideal.generators();
  std::vector<std::map<Monomial, std::size_t, MonoLess>> index;
  std::size_t total = 0;
  for (const auto& g : gens) {
    index.emplace_back(MonoLess{&gb.ring()});
    for (const auto& m : standard_monomials(lead, nv, g.degree())) index.back()[m] = total++;
  }
  RationalMatrix mat(0, total);
  for (const auto& a : assignments) {
    if (a.size() != gens.size()) throw DomainError("one image per generator is required");
    RationalVector row(total);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Polynomial nf = normal_form(a[j], gb);
      for (const auto& t : nf.terms()) {
        auto it = index[j].find(t.mono);
        if (it == index[j].end()) throw DomainError("image has the wrong degree");
        row[it->second] += t.coeff;
      }
    }
    mat.append_row(row);
  }
  return mat.rank();
}

}  // namespace hilbkit
