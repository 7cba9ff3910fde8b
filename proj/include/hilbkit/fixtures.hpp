#pragma once

#include <string>
#include <vector>

#include "hilbkit/classify.hpp"
#include "hilbkit/flat_limit.hpp"
#include "hilbkit/picard.hpp"

namespace hilbkit::fixtures {

/// Text form of a fixture. `lines` are polynomials (one per line), matrix
/// rows with entries separated by ';', or "curve divisor value flag" rows.
struct Fixture {
  std::string id;
  std::string kind;  // ideal | family | matrix | assignments | pairing
  std::string source;
  int n = 0;         // ambient P^n, 0 when not applicable
  bool param = false;
  std::vector<std::string> lines;
};

// Throws DomainError for an unknown id.
Fixture get(const std::string& id);
std::vector<std::string> ids();

struct FamilyCase {
  std::string id;
  Family family;
  Ideal expected_limit;
  TypeLabel expected_type;
  std::string source;
};

// The three degenerations to types III, II, III and the x2 -> x1 + t*x2
// substitution applied to the type III ideal (limit of type IV), in P^n.
std::vector<FamilyCase> degeneration_families(int n);

// (x0^2, x0x1, x1^2, t*x0x3 - x1x2) on the chart s = 1.
Family b4_pencil(int n);

// A family whose fibre at t = 1 jumps: ((t-1)*x1, x0 + t*x1).
Family non_flat_family(int n);

// (x0x1, x0x2, x0^2, x1^2) in the order of the presentation.
Ideal lambda_ideal(int n);
// Columns of the first syzygy matrix, each a 4-tuple against lambda.
std::vector<std::vector<Polynomial>> mu_columns(int n);
// Relation among the columns of mu.
std::vector<Polynomial> nu_vector(int n);

// Images of the lambda generators: 3n-3 trivial and 5(n-2)+1 versal elements.
std::vector<std::vector<Polynomial>> tangent_trivial(int n);
std::vector<std::vector<Polynomial>> tangent_versal(int n);

// (x0*x1^2, x1^3) in Q[x0,x1,x2] and (x2, x0*x1^2, x1^3) in Q[x0..x3].
Ideal plane_conic_ideal();
Ideal space_conic_ideal();

// (x0^2, x0x1, x1^2, x0*G - x1*F) with F = x2^k, G = x3^k.
Ideal double_structure_ideal(int n, int k);
// C(n-2+m, m) + 2 C(n-3+m, m-1) - C(n-3+m-k, m-1-k)
Integer double_structure_count(int n, int k, int m);

}  // namespace hilbkit::fixtures
