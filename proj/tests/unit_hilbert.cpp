#include "doctest.h"
#include "hilbkit/classify.hpp"
#include "hilbkit/error.hpp"
#include "hilbkit/fixtures.hpp"
#include "hilbkit/hilbert.hpp"
#include "hilbkit/linalg.hpp"

using namespace hilbkit;

namespace {

// dim (S/I)_d as C(n+d, d) minus the rank of the multiplied-out generators.
Integer hf_brute(const Ideal& ideal, int d) {
  const int nv = ideal.ring().num_vars();
  auto mons = monomials_of_degree(nv, d);
  RationalMatrix m(0, mons.size());
  for (const auto& g : ideal.generators()) {
    if (g.degree() > d) continue;
    for (const auto& u : monomials_of_degree(nv, d - g.degree())) {
      RationalVector row(mons.size());
      const Polynomial p = g.mul_term(1, u);
      for (const auto& t : p.terms())
        for (std::size_t i = 0; i < mons.size(); ++i)
          if (mons[i] == t.mono) row[i] = t.coeff;
      m.append_row(row);
    }
  }
  return static_cast<unsigned long>(mons.size() - m.rank());
}

}  // namespace

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(-1, 0) == 1);
  CHECK(UPoly::binomial(2, 2).to_string() == "1/2*m^2 + 3/2*m + 1");
}

TEST_CASE("reference polynomial") {
  CHECK(pn_reference(3).to_string() == "2*m + 2");
  CHECK(pn_reference(4).to_string() == "m^2 + 3*m + 1");
  CHECK(pn_reference(5).to_string() == "1/3*m^3 + 2*m^2 + 8/3*m + 1");
  for (int n = 3; n <= 8; ++n)
    for (int m = 0; m <= 6; ++m)
      CHECK(pn_reference(n)(m) == 2 * binomial(m + n - 2, n - 2) - binomial(m + n - 4, n - 4));
}

TEST_CASE("normal forms have the reference polynomial") {
  for (int n = 3; n <= 8; ++n)
    for (TypeLabel label : {TypeLabel::I, TypeLabel::II, TypeLabel::III, TypeLabel::IV}) {
      HilbertData hd = hilbert_series(normal_form_ideal(n, label));
      CHECK(hd.polynomial == pn_reference(n));
      CHECK(hd.dimension == n - 2);
      CHECK(hd.degree == 2);
    }
}

TEST_CASE("Hilbert function agrees with brute-force rank") {
  CHECK(hf_brute(normal_form_ideal(3, TypeLabel::IV), 2) == 6);
  for (int n = 3; n <= 4; ++n)
    for (TypeLabel label : {TypeLabel::I, TypeLabel::II, TypeLabel::III, TypeLabel::IV}) {
      Ideal ideal = normal_form_ideal(n, label);
      HilbertData hd = hilbert_series(ideal);
      for (int d = 0; d <= 4; ++d) {
        CHECK(hilbert_function(ideal, d) == hf_brute(ideal, d));
        CHECK(hd.series_coefficient(d) == hilbert_function(ideal, d));
        if (d >= hd.agreement_bound) CHECK(hd.polynomial(d) == hilbert_function(ideal, d));
      }
    }
}

TEST_CASE("agreement bound is sharp for type III at n = 3") {
  // h(0) = 1 while P(0) = 2
  HilbertData hd = hilbert_series(normal_form_ideal(3, TypeLabel::III));
  CHECK(hd.polynomial(0) != hilbert_function(normal_form_ideal(3, TypeLabel::III), 0));
  CHECK(hd.agreement_bound >= 1);
}

TEST_CASE("double structures follow the closed count") {
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k <= 3; ++k) {
      Ideal ideal = fixtures::double_structure_ideal(n, k);
      for (int m = k + 1; m <= k + 5; ++m) CHECK(hilbert_function(ideal, m) == fixtures::double_structure_count(n, k, m));
      CHECK((hilbert_series(ideal).polynomial == pn_reference(n)) == (k == 1));
    }
}

TEST_CASE("lex and grevlex give the same series") {
  for (const auto& id : fixtures::ids()) {
    fixtures::Fixture f = fixtures::get(id);
    if (f.kind != "ideal" || f.n == 0 || f.n > 5) continue;
    Ideal ideal = Ideal::parse(PolyRing::projective(f.n), f.lines);
    CHECK(hilbert_series(ideal).numerator == hilbert_series(ideal, MonomialOrder::lex()).numerator);
  }
  for (const Ideal& ideal : {fixtures::plane_conic_ideal(), fixtures::space_conic_ideal()})
    CHECK(hilbert_series(ideal).numerator == hilbert_series(ideal, MonomialOrder::lex()).numerator);
}

TEST_CASE("Hilbert polynomial is invariant under linear changes") {
  for (int n = 3; n <= 6; ++n)
    for (TypeLabel label : {TypeLabel::I, TypeLabel::II, TypeLabel::III, TypeLabel::IV}) {
      Ideal ideal = normal_form_ideal(n, label);
      LinearChange lc = random_linear_change(ideal, static_cast<std::uint64_t>(n * 10));
      CHECK(hilbert_series(lc.ideal).polynomial == pn_reference(n));
    }
}

TEST_CASE("monomial numerator") {
  // S/(x0*x1) in two variables: (1 - T^2) / (1 - T)^2
  PolyRing r(2);
  UPoly num = monomial_numerator({parse_polynomial("x0*x1", r).leading_monomial()}, 2);
  CHECK(num == UPoly({1, 0, -1}));
  HilbertData hd = hilbert_data_from_numerator(num, 2);
  CHECK(hd.polynomial.to_string() == "2");
  CHECK(hd.dimension == 0);
}
