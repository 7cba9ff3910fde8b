#include <set>

#include "doctest.h"
#include "hilbkit/classify.hpp"
#include "hilbkit/error.hpp"
#include "hilbkit/fixtures.hpp"
#include "hilbkit/flat_limit.hpp"

using namespace hilbkit;

TEST_CASE("degeneration families reach their limits") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& fc : fixtures::degeneration_families(n)) {
      CAPTURE(fc.id);
      CAPTURE(n);
      Ideal limit = limit_ideal(fc.family);
      CHECK(limit == fc.expected_limit);
      CHECK(limit.to_string() == fc.expected_limit.to_string());
      FlatnessReport rep = flatness_probe(fc.family);
      CHECK(rep.flat);
      CHECK(rep.limit_polynomial == pn_reference(n));
      for (const auto& f : rep.fibers) CHECK(f.matches_limit);
    }
}

TEST_CASE("the substitution limit is of type IV") {
  for (int n = 3; n <= 4; ++n) {
    Ideal limit = limit_ideal(fixtures::degeneration_families(n)[3].family);
    CHECK(classify(limit, 5).label == TypeLabel::IV);
  }
}

TEST_CASE("general fibre of the type II family is two disjoint planes") {
  Family fam = fixtures::degeneration_families(3)[1].family;
  Ideal f2 = fiber(fam, 2);
  CHECK(classify(f2, 1).label == TypeLabel::I);
}

TEST_CASE("the B4 pencil stays in H_n and ends at a type IV point") {
  for (int n = 3; n <= 4; ++n) {
    Family pencil = fixtures::b4_pencil(n);
    FlatnessReport rep = flatness_probe(pencil, 4);
    CHECK(rep.flat);
    CHECK(rep.limit_polynomial == pn_reference(n));
    CHECK(classify(fiber(pencil, 3), 2).label == TypeLabel::II);
    CHECK(classify(limit_ideal(pencil), 2).label == TypeLabel::IV);
  }
}

TEST_CASE("a jumping family is reported as not flat") {
  FlatnessReport rep = flatness_probe(fixtures::non_flat_family(3), 3);
  CHECK_FALSE(rep.flat);
  CHECK_THROWS_AS(flatness_probe(fixtures::non_flat_family(3), 1), DomainError);
}

TEST_CASE("family preconditions") {
  CHECK_THROWS_AS(Family(Ideal::parse(PolyRing::projective(3), std::vector<std::string>{"x0"})), DomainError);
  CHECK_THROWS_AS(Family(Ideal::parse(PolyRing::projective(3, true), std::vector<std::string>{"x0 + x1^2"})),
                  DomainError);
}

TEST_CASE("default samples are distinct and nonzero") {
  auto s = default_samples(20);
  std::set<std::string> seen;
  for (const auto& q : s) {
    CHECK(q != 0);
    seen.insert(q.get_str());
  }
  CHECK(seen.size() == 20);
  CHECK(s[0] == 1);
  CHECK(s[2] == Rational(1, 3));
}
