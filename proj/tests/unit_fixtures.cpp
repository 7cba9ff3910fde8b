#include "doctest.h"
#include "hilbkit/error.hpp"
#include "hilbkit/fixtures.hpp"
#include "hilbkit/groebner.hpp"

using namespace hilbkit;

TEST_CASE("every fixture parses") {
  auto ids = fixtures::ids();
  CHECK(ids.size() > 90);
  for (const auto& id : ids) {
    CAPTURE(id);
    fixtures::Fixture f = fixtures::get(id);
    CHECK(f.id == id);
    CHECK_FALSE(f.source.empty());
    CHECK_FALSE(f.lines.empty());
    if (f.kind == "pairing") continue;
    PolyRing ring = f.n > 0 ? PolyRing::projective(f.n, f.param) : PolyRing(id == "conic_plane" ? 3 : 4);
    for (const auto& line : f.lines) {
      std::string rest = line;
      std::size_t pos;
      while ((pos = rest.find(';')) != std::string::npos) {
        CHECK_NOTHROW(parse_polynomial(rest.substr(0, pos), ring));
        rest = rest.substr(pos + 1);
      }
      CHECK_NOTHROW(parse_polynomial(rest, ring));
    }
  }
  CHECK_THROWS_AS(fixtures::get("no_such_fixture"), DomainError);
}

TEST_CASE("named fixtures") {
  CHECK(fixtures::get("ideal_type_I_n3").lines == std::vector<std::string>{"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
  CHECK(fixtures::get("mu_matrix").lines.size() == 4);
  CHECK(fixtures::get("pairing_hn").lines.size() == 16);
  CHECK(fixtures::get("pairing_wn").lines.size() == 30);
}

TEST_CASE("lambda, mu and nu compose to zero") {
  for (int n = 3; n <= 6; ++n) {
    auto lambda = fixtures::lambda_ideal(n).generators();
    auto mu = fixtures::mu_columns(n);
    for (const auto& col : mu) CHECK(apply_syzygy(col, lambda).is_zero());
    auto nu = fixtures::nu_vector(n);
    for (std::size_t i = 0; i < 4; ++i) {
      std::vector<Polynomial> row;
      for (const auto& col : mu) row.push_back(col[i]);
      CHECK(apply_syzygy(row, nu).is_zero());
    }
  }
}

TEST_CASE("count formula matches its closed pieces") {
  // n = 3, k = 1: (m+1) + 2m - (m-1) = 2m + 2
  for (int m = 2; m <= 8; ++m) CHECK(fixtures::double_structure_count(3, 1, m) == 2 * m + 2);
}
