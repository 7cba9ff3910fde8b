#include <random>

#include "doctest.h"
#include "hilbkit/error.hpp"
#include "hilbkit/polynomial.hpp"

using namespace hilbkit;

namespace {

Polynomial random_poly(const PolyRing& ring, std::mt19937_64& rng, int terms, int max_exp) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(static_cast<std::size_t>(ring.total_vars()));
    for (auto& x : e) x = static_cast<int>(rng() % static_cast<unsigned>(max_exp + 1));
    Rational c(static_cast<long>(rng() % 19) - 9, static_cast<unsigned long>(rng() % 4 + 1));
    c.canonicalize();
    ts.push_back({c, Monomial(e)});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

int sgn(int v) { return (v > 0) - (v < 0); }

Monomial random_mono(std::mt19937_64& rng, int nv) {
  std::vector<int> e(static_cast<std::size_t>(nv));
  for (auto& x : e) x = static_cast<int>(rng() % 4);
  return Monomial(e);
}

}  // namespace

TEST_CASE("parse and print round trip") {
  PolyRing r = PolyRing::projective(3);
  Polynomial f = parse_polynomial("-x0*x3 + x1*x2", r);
  CHECK(f.to_string() == "x1*x2 - x0*x3");
  CHECK(parse_polynomial(f.to_string(), r) == f);
  CHECK(parse_polynomial("1/2*x0^2 - 3/4", r).to_string() == "1/2*x0^2 - 3/4");
  CHECK(parse_polynomial("x0 - x0", r).is_zero());
  CHECK(parse_polynomial("0", r).to_string() == "0");
  PolyRing rt = PolyRing::projective(3, true);
  CHECK(parse_polynomial("t*x3 + x0 - t*x0", rt).to_string() == parse_polynomial("x0 - x0*t + x3*t", rt).to_string());
}

TEST_CASE("parse errors carry a position") {
  PolyRing r = PolyRing::projective(2);
  CHECK_THROWS_AS(parse_polynomial("x0 +", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x7", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("t*x0", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x0 + x1)", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0", r), ParseError);
}

TEST_CASE("operands from different rings are rejected") {
  Polynomial a = parse_polynomial("x0", PolyRing::projective(2));
  Polynomial b = parse_polynomial("x0", PolyRing::projective(3));
  CHECK_THROWS_AS(a + b, RingMismatch);
  CHECK_THROWS_AS(a * b, RingMismatch);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(11);
  PolyRing r(4);
  for (int it = 0; it < 60; ++it) {
    Polynomial a = random_poly(r, rng, 4, 2), b = random_poly(r, rng, 4, 2), c = random_poly(r, rng, 3, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Polynomial::constant(r, 1) == a);
    CHECK(a.sub_mul(2, Monomial::variable(1), b) == a - b.mul_term(2, Monomial::variable(1)));
  }
}

TEST_CASE("monomial orders are total, transitive and multiplicative") {
  std::mt19937_64 rng(5);
  const int nv = 5;
  for (const auto& ord : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination(0b11)}) {
    for (int it = 0; it < 1000; ++it) {
      Monomial a = random_mono(rng, nv), b = random_mono(rng, nv), c = random_mono(rng, nv);
      const int ab = sgn(ord.compare(a, b, nv)), ba = sgn(ord.compare(b, a, nv));
      CHECK(ab == -ba);
      CHECK((ab == 0) == (a == b));
      if (ab < 0 && ord.compare(b, c, nv) < 0) CHECK(ord.compare(a, c, nv) < 0);
      CHECK(sgn(ord.compare(a * c, b * c, nv)) == ab);
      CHECK(ord.compare(Monomial(), a * c, nv) <= 0);
    }
  }
}

TEST_CASE("grevlex and lex on three variables") {
  const int nv = 3;
  auto m = [](int a, int b, int c) { return Monomial(std::vector<int>{a, b, c}); };
  // x1^2 > x0*x2 in grevlex, the other way in lex
  CHECK(MonomialOrder::grevlex().compare(m(0, 2, 0), m(1, 0, 1), nv) > 0);
  CHECK(MonomialOrder::lex().compare(m(0, 2, 0), m(1, 0, 1), nv) < 0);
}

TEST_CASE("substitution and evaluation") {
  PolyRing r = PolyRing::projective(3, true);
  Polynomial f = parse_polynomial("x0*x2 + t*x1", r);
  CHECK(f.evaluate(r.param_index(), 0).to_string() == "x0*x2");
  CHECK(f.substitute(2, parse_polynomial("x1 + t*x2", r)) == parse_polynomial("x0*x1 + x0*x2*t + x1*t", r));
  CHECK(f.is_x_homogeneous() == false);
  CHECK(parse_polynomial("x0^2 + t*x1*x3", r).is_x_homogeneous());
  CHECK(parse_polynomial("6*x0 + 4*x1", PolyRing(2)).primitive().to_string() == "3*x0 + 2*x1");
}
