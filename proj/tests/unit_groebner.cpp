#include <map>

#include "doctest.h"
#include "hilbkit/classify.hpp"
#include "hilbkit/error.hpp"
#include "hilbkit/fixtures.hpp"
#include "hilbkit/linalg.hpp"

using namespace hilbkit;

namespace {

std::vector<Polynomial> polys(const PolyRing& r, std::vector<std::string> v) {
  std::vector<Polynomial> out;
  for (const auto& s : v) out.push_back(parse_polynomial(s, r));
  return out;
}

// Dimension of {(l_1..l_k) linear : sum l_j f_j = 0} for quadrics f_j, by
// brute force over the coefficients of the l_j.
std::size_t linear_syzygy_count(const std::vector<Polynomial>& f, int nv) {
  std::map<std::vector<int>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
  for (const auto& fj : f)
    for (int v = 0; v < nv; ++v) {
      std::vector<std::pair<std::size_t, Rational>> col;
      const Polynomial p = fj.mul_term(1, Monomial::variable(v));
      for (const auto& t : p.terms()) {
        std::vector<int> key;
        for (int i = 0; i < nv; ++i) key.push_back(t.mono[i]);
        auto [it, fresh] = row_of.emplace(key, row_of.size());
        col.emplace_back(it->second, t.coeff);
      }
      cols.push_back(col);
    }
  RationalMatrix m(row_of.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) m(r, c) = v;
  return cols.size() - m.rank();
}

}  // namespace

TEST_CASE("twisted cubic basis") {
  PolyRing r(4);
  auto g = polys(r, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  GroebnerBasis gb = buchberger(g, MonomialOrder::grevlex());
  CHECK(gb.size() == 3);
  CHECK(is_reduced(gb));
  CHECK(s_pairs_reduce_to_zero(gb));
  GroebnerBasis lex = buchberger(g, MonomialOrder::lex(), {.track_transform = true});
  CHECK(is_reduced(lex));
  CHECK(s_pairs_reduce_to_zero(lex));
  CHECK(transform_is_exact(lex));
  CHECK(normal_form(parse_polynomial("x0*x3^2 - x2^3", r), gb).is_zero());
}

TEST_CASE("unit ideal and empty input") {
  PolyRing r(2);
  GroebnerBasis gb = buchberger(polys(r, {"x0*x1 - 1", "x0"}), MonomialOrder::grevlex());
  CHECK(gb.is_unit());
  // no generators means no ring to work in
  CHECK_THROWS_AS(buchberger(std::vector<Polynomial>{}, MonomialOrder::grevlex()), DomainError);
}

TEST_CASE("reduced basis does not depend on pair order") {
  for (int n = 3; n <= 4; ++n)
    for (TypeLabel label : {TypeLabel::I, TypeLabel::II, TypeLabel::III, TypeLabel::IV}) {
      Ideal ideal = normal_form_ideal(n, label);
      auto ref = buchberger(ideal.generators(), MonomialOrder::lex()).elements();
      for (std::uint64_t s = 0; s < 20; ++s) {
        GroebnerOptions o;
        o.shuffle_seed = s;
        o.track_transform = (s % 2) == 0;
        GroebnerBasis gb = buchberger(ideal.generators(), MonomialOrder::lex(), o);
        CHECK(gb.elements() == ref);
        if (o.track_transform) CHECK(transform_is_exact(gb));
      }
    }
}

TEST_CASE("division identity") {
  PolyRing r(3);
  auto divs = polys(r, {"x0*x1 - x2^2", "x1^2 - x0*x2"});
  Polynomial f = parse_polynomial("x0^2*x1^2 + 3*x1^3 - x2^4 + x0", r);
  Division d = divide(f, divs);
  Polynomial back = d.remainder;
  for (std::size_t i = 0; i < divs.size(); ++i) back = back + d.quotients[i] * divs[i];
  CHECK(back == f);
  for (const auto& t : d.remainder.terms())
    for (const auto& g : divs) CHECK_FALSE(g.leading_monomial().divides(t.mono));
  CHECK(divide_exact(parse_polynomial("x0^2 - x1^2", r), parse_polynomial("x0 - x1", r)) ==
        parse_polynomial("x0 + x1", r));
  CHECK_THROWS_AS(divide_exact(parse_polynomial("x0^2 + x1", r), parse_polynomial("x0", r)), DomainError);
}

TEST_CASE("elimination of a variable") {
  PolyRing r(3);
  // x0 = x1^2 and x2 = x1^3: eliminating x1 gives x0^3 - x2^2
  auto elim = eliminate(polys(r, {"x0 - x1^2", "x2 - x1^3"}), 0b010);
  REQUIRE(elim.size() == 1);
  CHECK(elim[0].monic() == parse_polynomial("x0^3 - x2^2", r).monic());
}

TEST_CASE("linear syzygies of the type I ideal match a brute-force count") {
  for (int n = 3; n <= 5; ++n) {
    Ideal ideal = normal_form_ideal(n, TypeLabel::I);
    SyzygyModule mod = syzygies(ideal.generators());
    CHECK(mod.schreyer_certified);
    std::size_t linear = 0;
    for (const auto& s : mod.syzygies) linear += s.degree == 3 ? 1 : 0;
    CHECK(linear == linear_syzygy_count(ideal.generators(), n + 1));
    CHECK(linear == 4);
  }
}

TEST_CASE("syzygies annihilate the generators and contain mu") {
  for (int n = 3; n <= 5; ++n) {
    auto lambda = fixtures::lambda_ideal(n).generators();
    SyzygyModule mod = syzygies(lambda);
    CHECK(mod.schreyer_certified);
    CHECK(mod.syzygies.size() == 4);
    for (const auto& s : mod.syzygies) CHECK(apply_syzygy(s.components, lambda).is_zero());
    for (const auto& col : fixtures::mu_columns(n)) {
      Syzygy v{col, 3};
      CHECK(in_syzygy_span(v, mod.syzygies, lambda));
    }
    // and mu spans them back
    std::vector<Syzygy> mu;
    for (const auto& col : fixtures::mu_columns(n)) mu.push_back({col, 3});
    for (const auto& s : mod.syzygies) CHECK(in_syzygy_span(s, mu, lambda));
  }
}

TEST_CASE("syzygies need homogeneous input") {
  PolyRing r(2);
  CHECK_THROWS_AS(syzygies(polys(r, {"x0^2 + x1", "x1"})), DomainError);
}
