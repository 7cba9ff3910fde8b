#pragma once

#include <span>
#include <vector>

#include "hilbkit/ideal.hpp"
#include "hilbkit/univariate.hpp"

namespace hilbkit {

/// HS(T) = numerator(T) / (1-T)^num_vars, and the Hilbert polynomial in m.
struct HilbertData {
  UPoly numerator;  // integer coefficients, variable T
  int num_vars = 0;
  UPoly polynomial;  // variable m
  // Projective dimension; -1 for the empty scheme.
  int dimension = -1;
  // dimension! * leading coefficient (0 for the empty scheme).
  Integer degree = 0;
  // hilbert_function(d) == polynomial(d) for every d >= agreement_bound.
  int agreement_bound = 0;

  // Coefficient of T^d in the expansion of the series.
  Integer series_coefficient(int d) const;
};

// Numerator of the Hilbert series of S/M for a monomial ideal M in num_vars
// variables (pivot recursion on the most frequent variable).
UPoly monomial_numerator(std::vector<Monomial> gens, int num_vars);

HilbertData hilbert_data_from_numerator(const UPoly& numerator, int num_vars);

// Uses the grevlex initial ideal.
HilbertData hilbert_series(const Ideal& ideal);
HilbertData hilbert_series(const Ideal& ideal, const MonomialOrder& order);

// dim (S/I)_d by counting standard monomials of degree d.
Integer hilbert_function(const Ideal& ideal, int d);

// Monomials of degree d outside the initial ideal spanned by leading_monomials.
std::vector<Monomial> standard_monomials(std::span<const Monomial> leading_monomials, int num_vars, int d);

// 2*C(m+n-2, n-2) - C(m+n-4, n-4)
UPoly pn_reference(int n);

}  // namespace hilbkit
