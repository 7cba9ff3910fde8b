#pragma once

#include <span>
#include <vector>

#include "hilbkit/ideal.hpp"

namespace hilbkit {

/// Hom_S(I/I^2, S/I)_0 as the solution space of a linear system: an
/// assignment sends generator i to g_i in (S/I)_{d_i}, and every generating
/// syzygy s must give sum_j s_j g_j = 0 in S/I.
struct TangentReport {
  int dimension = 0;
  std::vector<Polynomial> generators;  // minimal generators actually used
  std::vector<std::vector<Monomial>> unknowns;  // standard monomial basis per generator
  std::size_t total_unknowns = 0;
  std::size_t constraints = 0;  // rows of the system
  std::size_t constraint_rank = 0;
  std::size_t syzygies = 0;
  // Nullspace basis, each entry one image per generator.
  std::vector<std::vector<Polynomial>> basis;
};

struct TangentOptions {
  // Use the Schreyer syzygies of the reduced basis directly instead of the
  // lifted minimal syzygies; the generators are then the basis elements.
  bool gb_syzygies = false;
  bool with_basis = true;
};

// Requires a homogeneous ideal in a ring without parameter.
TangentReport hom_degree_zero(const Ideal& ideal, const TangentOptions& options = {});

// images[i] is the proposed image of ideal.generators()[i]; each must be zero
// or homogeneous of the same degree (else DomainError). True iff every
// generating syzygy is respected modulo the ideal.
bool explicit_basis_check(const Ideal& ideal, std::span<const Polynomial> images);

// Dimension of the span of the given assignments inside
// prod_i (S/I)_{d_i}.
std::size_t assignment_rank(const Ideal& ideal, std::span<const std::vector<Polynomial>> assignments);

}  // namespace hilbkit
