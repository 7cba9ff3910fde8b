#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "hilbkit/monomial.hpp"

namespace hilbkit {

using Rational = mpq_class;
using Integer = mpz_class;

/// The ring Q[x0..x_{k-1}] optionally extended by the deformation parameter t
/// and by internal auxiliary variables u0, u1, ... used for elimination.
/// Variable layout: x-variables first, then t, then the auxiliaries.
class PolyRing {
 public:
  explicit PolyRing(int num_vars, bool has_param = false,
                    MonomialOrder order = MonomialOrder::grevlex(), int num_aux = 0);

  // Ring of P^n: n+1 x-variables.
  static PolyRing projective(int n, bool has_param = false) {
    return PolyRing(n + 1, has_param);
  }

  int num_vars() const { return num_vars_; }
  bool has_param() const { return has_param_; }
  int num_aux() const { return num_aux_; }
  int total_vars() const { return num_vars_ + (has_param_ ? 1 : 0) + num_aux_; }
  const MonomialOrder& order() const { return order_; }

  // Index of t; throws when the ring has no parameter.
  int param_index() const;
  int aux_index(int k) const;
  std::uint32_t x_mask() const { return (1u << num_vars_) - 1u; }

  std::string var_name(int index) const;

  PolyRing with_order(const MonomialOrder& order) const;
  PolyRing with_aux(int num_aux) const;
  PolyRing with_param(bool has_param) const;

  // Same variables, possibly a different order.
  bool same_variables(const PolyRing& other) const {
    return num_vars_ == other.num_vars_ && has_param_ == other.has_param_ &&
           num_aux_ == other.num_aux_;
  }

  int compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, total_vars());
  }

  bool operator==(const PolyRing& other) const = default;

 private:
  int num_vars_;
  bool has_param_;
  int num_aux_;
  MonomialOrder order_;
};

}  // namespace hilbkit
