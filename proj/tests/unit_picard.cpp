#include "doctest.h"
#include "hilbkit/error.hpp"
#include "hilbkit/picard.hpp"

using namespace hilbkit;

TEST_CASE("relations on H_n") {
  RelationReport rep = solve_relations(default_pairing_table(Space::H));
  CHECK(rep.classes.at("N") == std::vector<long>{2, -2});
  CHECK(rep.classes.at("E") == std::vector<long>{-1, 2});
  CHECK(rep.derived_checked >= 3);
  PicLattice lat(Space::H, 4);
  CHECK(pairing(lat.curve("B3"), lat.named("F")) == 1);
  CHECK(pairing(lat.curve("B2"), lat.named("E")) == -1);
  CHECK(pairing(lat.curve("B4"), lat.named("N")) == -2);
}

TEST_CASE("relations on W_n") {
  RelationReport rep = solve_relations(default_pairing_table(Space::W));
  CHECK(rep.classes.at("N'") == std::vector<long>{2, -2, 0});
  CHECK(rep.classes.at("E'") == std::vector<long>{-1, 2, -1});
  PicLattice lat(Space::W, 5);
  CHECK(pairing(lat.curve("B6"), lat.named("E'")) == -1);
  CHECK(lat.rank() == 3);
}

TEST_CASE("every stored row is consistent with the solved classes") {
  for (Space space : {Space::H, Space::W}) {
    const PairingTable& t = default_pairing_table(space);
    PicLattice lat(space, 5);
    for (const auto& c : t.curves)
      for (const auto& [name, e] : c.entries) CHECK(pairing(lat.curve(c.curve), lat.named(name)) == e.value);
  }
}

TEST_CASE("corrupted tables are rejected") {
  PairingTable inconsistent = default_pairing_table(Space::H);
  inconsistent.curves[0].entries["N"].value = 5;
  CHECK_THROWS_AS(solve_relations(inconsistent), DomainError);

  PairingTable underdetermined = default_pairing_table(Space::H);
  underdetermined.curves.resize(1);
  CHECK_THROWS_AS(solve_relations(underdetermined), DomainError);

  PairingTable bad_derived = default_pairing_table(Space::H);
  bad_derived.curves[1].entries["E"].value = 3;
  CHECK_THROWS_AS(solve_relations(bad_derived), DomainError);

  PairingTable fractional = default_pairing_table(Space::H);
  // B2 = (2, 0) with B2.N = 1 forces N.M = 1/2
  fractional.curves[1].entries["M"].value = 2;
  fractional.curves[1].entries["N"].value = 1;
  CHECK_THROWS_AS(solve_relations(fractional), DomainError);
}

TEST_CASE("H_n chambers") {
  PicLattice lat(Space::H, 4);
  auto ch = [&](long a, long b) { return chamber_of(lat, lat.divisor({a, b})); };
  CHECK(ch(1, 1).ample);
  CHECK(ch(1, 1).model == "H_n");
  CHECK(ch(2, 0).model == "Sym^2 G(n-2,n)");
  CHECK(ch(0, 3).model == "Theta_n");
  CHECK(ch(3, -2).base_locus == std::vector<std::string>{"II", "IV"});
  CHECK_FALSE(ch(1, -1).model.has_value());
  CHECK(ch(-1, 3).base_locus == std::vector<std::string>{"III", "IV"});
  CHECK(ch(-1, 3).model == "Psi_n (flip)");
  CHECK(ch(-1, 2).model == "G(3,n)");
  for (auto d : {std::pair{1L, 1L}, {3L, -2L}, {1L, -1L}, {-1L, 3L}, {-1L, 2L}}) CHECK(ch(d.first, d.second).validated);
  CHECK_THROWS_AS(ch(0, 0), DomainError);
  CHECK_THROWS_AS(ch(-1, 1), DomainError);
  CHECK_THROWS_AS(ch(1, -2), DomainError);
  PicLattice three(Space::H, 3);
  CHECK(chamber_of(three, three.divisor({-1, 3})).model == "Psi_3 = G(3,5)");
  CHECK_FALSE(chamber_of(three, three.divisor({-1, 2})).model.has_value());
}

TEST_CASE("W_n chambers") {
  PicLattice lat(Space::W, 5);
  auto ch = [&](long a, long b, long c) { return chamber_of(lat, lat.divisor({a, b, c})); };
  CHECK(ch(1, 1, 1).model == "W_n");
  CHECK(ch(1, 1, 1).ample);
  CHECK(ch(0, 0, 1).model == "G(3,n)");
  CHECK(ch(0, 1, 0).model == "Theta_n");
  CHECK(ch(1, 0, 0).model == "Sym^2 G(1,n)");
  CHECK(ch(-1, 2, -1).base_locus == std::vector<std::string>{"E'"});
  CHECK(ch(2, -2, 0).base_locus == std::vector<std::string>{"N'"});
  CHECK(ch(1, 0, -1).base_locus == std::vector<std::string>{"E'", "N'"});
  for (auto v : {std::vector<long>{-1, 2, -1}, {2, -2, 0}, {1, 0, -1}, {0, 3, -1}, {3, -2, 1}})
    CHECK(chamber_of(lat, lat.divisor(v)).validated);
  CHECK_THROWS_AS(ch(0, 0, -1), DomainError);
}

TEST_CASE("canonical classes and Fano") {
  CHECK(canonical_class(Space::H, 3).coords == std::vector<long>{-2, -2});
  CHECK(canonical_class(Space::H, 5).coords == std::vector<long>{0, -6});
  CHECK(is_fano(Space::H, 3));
  CHECK(is_fano(Space::H, 4));
  for (int n = 5; n <= 8; ++n) CHECK_FALSE(is_fano(Space::H, n));
  for (int n = 3; n <= 8; ++n) CHECK(is_fano(Space::W, n));
  CHECK(canonical_class(Space::W, 5).coords == std::vector<long>{-2, -2, -2});
}

TEST_CASE("dimension table") {
  DimensionTable t = dimension_table(3);
  CHECK(t.type_I == 8);
  CHECK(t.type_II == 7);
  CHECK(t.type_III == 7);
  CHECK(t.type_IV == 6);
  CHECK(t.h_prime == 11);
  for (int n = 3; n <= 8; ++n) {
    DimensionTable d = dimension_table(n);
    CHECK(d.transversality_identity);
    CHECK(d.tangent_count_identity);
    CHECK(d.w_identity);
  }
  CHECK_THROWS_AS(dimension_table(2), DomainError);
  CHECK_THROWS_AS(PicLattice(Space::W, 3), DomainError);
}
