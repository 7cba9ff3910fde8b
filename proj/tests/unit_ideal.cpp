#include "doctest.h"
#include "hilbkit/classify.hpp"
#include "hilbkit/error.hpp"
#include "hilbkit/hilbert.hpp"
#include "hilbkit/linalg.hpp"

using namespace hilbkit;

namespace {

Ideal I(const PolyRing& r, std::vector<std::string> g) { return Ideal::parse(r, g); }

// Basis of the degree-d part of an ideal as coefficient rows over the
// degree-d monomials, by multiplying out the generators.
RationalMatrix degree_part(const Ideal& ideal, int d) {
  const int nv = ideal.ring().num_vars();
  auto mons = monomials_of_degree(nv, d);
  RationalMatrix m(0, mons.size());
  for (const auto& g : ideal.generators()) {
    if (g.degree() > d) continue;
    for (const auto& u : monomials_of_degree(nv, d - g.degree())) {
      Polynomial p = g.mul_term(1, u);
      RationalVector row(mons.size());
      for (const auto& t : p.terms())
        for (std::size_t i = 0; i < mons.size(); ++i)
          if (mons[i] == t.mono) row[i] = t.coeff;
      m.append_row(row);
    }
  }
  return m;
}

// dim {f in S_d : f*g in I}, by brute force: the kernel of
// (a, b) -> sum a_i m_i g - sum b_r h_r over the spanning set h_r of I_{d+deg g},
// projected to the a-coordinates.
std::size_t quotient_dim_brute(const Ideal& ideal, const Polynomial& g, int d) {
  const int nv = ideal.ring().num_vars();
  auto mons = monomials_of_degree(nv, d);
  auto target = monomials_of_degree(nv, d + g.degree());
  RationalMatrix span = degree_part(ideal, d + g.degree());
  RationalMatrix a(target.size(), mons.size() + span.rows());
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const Polynomial p = g.mul_term(1, mons[i]);
    for (const auto& t : p.terms())
      for (std::size_t c = 0; c < target.size(); ++c)
        if (target[c] == t.mono) a(c, i) = t.coeff;
  }
  for (std::size_t r = 0; r < span.rows(); ++r)
    for (std::size_t c = 0; c < target.size(); ++c) a(c, mons.size() + r) = span(r, c);
  const std::size_t kernel = mons.size() + span.rows() - a.rank();
  return kernel - (span.rows() - span.rank());
}

}  // namespace

TEST_CASE("two planes: union of meeting and disjoint pairs") {
  PolyRing r = PolyRing::projective(3);
  Ideal disjoint = intersect(I(r, {"x0", "x1"}), I(r, {"x2", "x3"}));
  CHECK(disjoint == normal_form_ideal(3, TypeLabel::I));
  CHECK(disjoint.gb().size() == 4);
  Ideal meeting = intersect(I(r, {"x0", "x1"}), I(r, {"x0", "x2"}));
  CHECK(meeting == I(r, {"x0", "x1*x2"}));
  // (x0,x1) + (x2,x3) is irrelevant, so the product saturates to the intersection
  CHECK(saturate_irrelevant(ideal_product(I(r, {"x0", "x1"}), I(r, {"x2", "x3"}))) == disjoint);
}

TEST_CASE("type III and IV as intersections with the square of a point ideal") {
  PolyRing r = PolyRing::projective(4);
  Ideal m3 = ideal_product(I(r, {"x0", "x1", "x2"}), I(r, {"x0", "x1", "x2"}));
  CHECK(intersect(I(r, {"x0", "x1*x2"}), m3) == normal_form_ideal(4, TypeLabel::III));
  CHECK(intersect(I(r, {"x0 - x1", "x0^2"}), m3) == normal_form_ideal(4, TypeLabel::IV));
}

TEST_CASE("quotient by a variable") {
  PolyRing r = PolyRing::projective(3);
  Ideal q = quotient(normal_form_ideal(3, TypeLabel::I), parse_polynomial("x0", r));
  CHECK(q == I(r, {"x2", "x3"}));
  CHECK(quotient(q, I(r, {"x2", "x3"})).is_unit());
}

TEST_CASE("quotient degree parts agree with brute force up to degree 3") {
  for (int n = 3; n <= 4; ++n) {
    PolyRing r = PolyRing::projective(n);
    for (TypeLabel label : {TypeLabel::II, TypeLabel::III, TypeLabel::IV}) {
      Ideal ideal = normal_form_ideal(n, label);
      for (const char* gtext : {"x0", "x1", "x2", "x0 + x2"}) {
        Polynomial g = parse_polynomial(gtext, r);
        Ideal q = quotient(ideal, g);
        for (int d = 0; d <= 3; ++d) {
          const std::size_t all = monomials_of_degree(n + 1, d).size();
          CHECK(all - hilbert_function(q, d).get_ui() == quotient_dim_brute(ideal, g, d));
        }
      }
    }
  }
}

TEST_CASE("saturation") {
  PolyRing r = PolyRing::projective(3);
  Ideal iii = normal_form_ideal(3, TypeLabel::III);
  CHECK(saturate_irrelevant(iii) == iii);
  const Polynomial h = parse_polynomial("x1 + x2", r);
  CHECK(saturate(saturate(iii, h), h) == saturate(iii, h));
  // x3 is a unit at the embedded point, x1 + x2 vanishes there but on neither plane
  CHECK(saturate(iii, parse_polynomial("x3", r)) == iii);
  CHECK(saturate(iii, h) == I(r, {"x0", "x1*x2"}));
  CHECK(saturate(iii, I(r, {"x0", "x1", "x2"})) == I(r, {"x0", "x1*x2"}));
  // an irrelevant component disappears
  Ideal with_junk = ideal_product(normal_form_ideal(3, TypeLabel::I), irrelevant_ideal(r));
  CHECK_FALSE(with_junk == normal_form_ideal(3, TypeLabel::I));
  CHECK(saturate_irrelevant(with_junk) == normal_form_ideal(3, TypeLabel::I));
  // inhomogeneous saturation goes through the auxiliary variable
  PolyRing a(2);
  CHECK(saturate(I(a, {"x0*x1 - x0"}), parse_polynomial("x0", a)) == I(a, {"x1 - 1"}));
}

TEST_CASE("membership and containment") {
  PolyRing r = PolyRing::projective(3);
  Ideal iv = normal_form_ideal(3, TypeLabel::IV);
  CHECK(iv.contains(parse_polynomial("x0*x2*x3 - x1*x2*x3", r)));
  CHECK_FALSE(iv.contains(parse_polynomial("x0*x2", r)));
  CHECK(I(r, {"x0", "x1"}).contains(iv));
  CHECK(iv.canonical() == iv);
  CHECK(iv.to_string() == "(x0^2, x0*x1, x1^2, x0*x2 - x1*x2)");
}

TEST_CASE("minimalize drops redundant generators") {
  PolyRing r = PolyRing::projective(3);
  Ideal m = minimalize(I(r, {"x0^2", "x0*x1", "x0^2*x3", "x1^2", "x0*x1 + x1^2"}));
  CHECK(m.generators().size() == 3);
  CHECK(m == I(r, {"x0^2", "x0*x1", "x1^2"}));
}

TEST_CASE("random linear changes are invertible and deterministic") {
  Ideal iv = normal_form_ideal(4, TypeLabel::IV);
  for (std::uint64_t s = 0; s < 10; ++s) {
    LinearChange a = random_linear_change(iv, s), b = random_linear_change(iv, s);
    CHECK(a.ideal == b.ideal);
    RationalMatrix m(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = a.matrix[i][j];
    CHECK(m.determinant() != 0);
    CHECK(hilbert_series(a.ideal).numerator == hilbert_series(iv).numerator);
  }
}
