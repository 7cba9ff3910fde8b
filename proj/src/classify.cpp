#include "hilbkit/classify.hpp"

#include <random>

#include "hilbkit/error.hpp"
#include "hilbkit/hilbert.hpp"

namespace hilbkit {

std::string to_string(TypeLabel label) {
  switch (label) {
    case TypeLabel::I: return "I";
    case TypeLabel::II: return "II";
    case TypeLabel::III: return "III";
    case TypeLabel::IV: return "IV";
  }
  return "?";
}

TypeLabel parse_type_label(const std::string& text) {
  if (text == "I") return TypeLabel::I;
  if (text == "II") return TypeLabel::II;
  if (text == "III") return TypeLabel::III;
  if (text == "IV") return TypeLabel::IV;
  throw DomainError("unknown type label '" + text + "'");
}

TypeLabel label_from_evidence(const Evidence& e) {
  if (!e.has_embedded) return e.generically_reduced ? TypeLabel::I : TypeLabel::II;
  return e.generically_reduced ? TypeLabel::III : TypeLabel::IV;
}

Ideal normal_form_ideal(int n, TypeLabel label) {
  if (n < 3) throw DomainError("normal forms need n >= 3");
  PolyRing ring = PolyRing::projective(n);
  std::vector<std::string> gens;
  switch (label) {
    case TypeLabel::I: gens = {"x0*x2", "x0*x3", "x1*x2", "x1*x3"}; break;
    case TypeLabel::II: gens = {"x0^2", "x0*x1", "x1^2", "x0*x3 - x1*x2"}; break;
    case TypeLabel::III: gens = {"x0^2", "x0*x1", "x0*x2", "x1*x2"}; break;
    case TypeLabel::IV: gens = {"x0^2", "x0*x1", "x1^2", "x0*x2 - x1*x2"}; break;
  }
  return Ideal::parse(ring, gens);
}

namespace {

Rational draw(std::mt19937_64& rng, int bound) {
  return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
}

Polynomial random_linear(const PolyRing& ring, std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (int i = 0; i < ring.num_vars(); ++i) terms.push_back({draw(rng, 9), Monomial::variable(i)});
  return Polynomial::from_terms(ring, std::move(terms));
}

// Spanning set of the degree-2 part of a homogeneous ideal.
std::vector<Polynomial> quadrics(const Ideal& ideal) {
  std::vector<Polynomial> out;
  const int nv = ideal.ring().num_vars();
  for (const auto& g : ideal.gb().elements()) {
    if (g.degree() > 2) continue;
    for (const auto& m : monomials_of_degree(nv, 2 - g.degree())) out.push_back(g.mul_term(1, m));
  }
  return out;
}

const UPoly& ci_numerator() {
  static const UPoly q({1, 0, -2, 0, 1});
  return q;
}

}  // namespace

HullResult equidimensional_hull(const Ideal& ideal, std::uint64_t seed) {
  if (!ideal.is_homogeneous() || ideal.ring().has_param())
    throw DomainError("hull needs a homogeneous ideal without parameter");
  const PolyRing& ring = ideal.ring();
  HilbertData hd = hilbert_series(ideal);
  if (hd.dimension != ring.num_vars() - 3) throw DomainError("hull needs an ideal of codimension two");
  auto q = quadrics(ideal);
  if (q.size() < 2) throw DomainError("hull needs at least two independent quadrics");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<Polynomial> f;
    for (int k = 0; k < 2; ++k) {
      Polynomial acc(ring);
      for (const auto& g : q) acc = acc + g.scale(draw(rng, 9));
      f.push_back(acc);
    }
    if (f[0].is_zero() || f[1].is_zero()) continue;
    Ideal ci(ring, f);
    if (!(hilbert_series(ci).numerator == ci_numerator())) continue;
    Ideal link = quotient(ci, ideal);
    return {quotient(ci, link), attempt};
  }
  throw DomainError("hull: no complete intersection found in five draws");
}

namespace {

// Restriction to a random plane: x_i -> sum_j a_ij y_j.
Ideal random_plane_section(const Ideal& ideal, std::mt19937_64& rng) {
  PolyRing plane(3);
  std::vector<Polynomial> images;
  for (int i = 0; i < ideal.ring().num_vars(); ++i) images.push_back(random_linear(plane, rng));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    // Evaluate g at the images by Horner-free expansion.
    Polynomial acc(plane);
    for (const auto& t : g.terms()) {
      Polynomial m = Polynomial::constant(plane, t.coeff);
      for (int i = 0; i < ideal.ring().num_vars(); ++i)
        if (t.mono[i] > 0) m = m * images[static_cast<std::size_t>(i)].pow(t.mono[i]);
      acc = acc + m;
    }
    gens.push_back(acc);
  }
  return Ideal(plane, std::move(gens));
}

// Standard monomials of a zero-dimensional ideal, or empty when the colength
// exceeds the degree cap.
std::vector<Monomial> finite_basis(const GroebnerBasis& gb, int nv, int cap) {
  std::vector<Monomial> out;
  auto lead = gb.leading_monomials();
  for (int d = 0; d <= cap; ++d) {
    auto s = standard_monomials(lead, nv, d);
    if (s.empty()) return out;
    out.insert(out.end(), s.begin(), s.end());
  }
  return {};
}

enum class SliceOutcome { Reduced, NonReduced, Degenerate };

SliceOutcome one_slice(const Ideal& hull, std::mt19937_64& rng) {
  Ideal section = saturate_irrelevant(random_plane_section(hull, rng));
  if (section.is_unit()) return SliceOutcome::Degenerate;
  HilbertData hd = hilbert_series(section);
  if (!(hd.polynomial == UPoly::constant(2))) return SliceOutcome::Degenerate;
  const PolyRing& plane = section.ring();
  std::vector<Polynomial> gens = section.generators();
  gens.push_back(random_linear(plane, rng) - Polynomial::constant(plane, 1));
  Ideal affine(plane, gens);
  const GroebnerBasis& gb = affine.gb();
  auto basis = finite_basis(gb, 3, 4);
  if (basis.size() != 2 || !basis[0].is_one()) return SliceOutcome::Degenerate;
  const Monomial s = basis[1];
  Polynomial h = random_linear(plane, rng);
  auto coords = [&](const Polynomial& p) {
    Polynomial nf = normal_form(p, gb);
    Rational c0 = 0, c1 = 0;
    for (const auto& t : nf.terms()) (t.mono.is_one() ? c0 : c1) = t.coeff;
    return std::pair{c0, c1};
  };
  auto [a, b] = coords(h);
  if (b == 0) return SliceOutcome::Degenerate;
  auto [c, d] = coords(h * Polynomial::term(plane, 1, s));
  Rational disc = (a - d) * (a - d) + 4 * b * c;
  return disc != 0 ? SliceOutcome::Reduced : SliceOutcome::NonReduced;
}

}  // namespace

SliceResult generic_slice_reduced(const Ideal& ideal, std::uint64_t seed, int trials) {
  if (!ideal.is_homogeneous() || ideal.ring().has_param())
    throw DomainError("slice test needs a homogeneous ideal without parameter");
  std::mt19937_64 rng(seed);
  SliceResult out;
  for (int trial = 0; trial < trials; ++trial) {
    SliceOutcome outcome = SliceOutcome::Degenerate;
    for (int attempt = 0; attempt < 3 && outcome == SliceOutcome::Degenerate; ++attempt) {
      outcome = one_slice(ideal, rng);
      if (outcome == SliceOutcome::Degenerate) ++out.retries;
    }
    if (outcome == SliceOutcome::Degenerate) throw DomainError("slice test: three degenerate slices in a row");
    if (outcome == SliceOutcome::Reduced) {
      out.reduced = true;
      return out;
    }
  }
  return out;
}

SchemeType classify(const Ideal& ideal, std::uint64_t seed) {
  if (!ideal.is_homogeneous() || ideal.ring().has_param())
    throw DomainError("classify needs a homogeneous ideal without parameter");
  const int n = ideal.ring().num_vars() - 1;
  if (n < 3) throw DomainError("classify needs n >= 3");
  if (!(hilbert_series(ideal).polynomial == pn_reference(n)))
    throw DomainError("Hilbert polynomial differs from P_n");
  if (!(saturate_irrelevant(ideal) == ideal)) throw DomainError("ideal is not saturated");
  HullResult hull = equidimensional_hull(ideal, seed);
  HilbertData hd = hilbert_series(hull.hull);
  if (hd.dimension != n - 2 || hd.degree != 2) throw DomainError("not in H_n normal forms");
  SliceResult slice = generic_slice_reduced(hull.hull, seed ^ 0x9e3779b97f4a7c15ull);
  SchemeType out;
  out.evidence.has_embedded = !(hull.hull == ideal);
  out.evidence.generically_reduced = slice.reduced;
  out.label = label_from_evidence(out.evidence);
  out.retries = hull.retries + slice.retries;
  return out;
}

}  // namespace hilbkit
