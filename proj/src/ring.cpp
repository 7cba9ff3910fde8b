#include "hilbkit/ring.hpp"

#include "hilbkit/error.hpp"

namespace hilbkit {

PolyRing::PolyRing(int num_vars, bool has_param, MonomialOrder order, int num_aux)
    : num_vars_(num_vars), has_param_(has_param), num_aux_(num_aux), order_(order) {
  if (num_vars < 1) throw DomainError("a ring needs at least one x-variable");
  if (num_aux < 0) throw DomainError("negative auxiliary variable count");
  if (total_vars() > kMaxVars)
    throw DomainError("ring has " + std::to_string(total_vars()) + " variables, limit is " +
                      std::to_string(kMaxVars));
}

int PolyRing::param_index() const {
  if (!has_param_) throw DomainError("ring has no parameter t");
  return num_vars_;
}

int PolyRing::aux_index(int k) const {
  if (k < 0 || k >= num_aux_) throw DomainError("auxiliary variable out of range");
  return num_vars_ + (has_param_ ? 1 : 0) + k;
}

std::string PolyRing::var_name(int index) const {
  if (index < num_vars_) return "x" + std::to_string(index);
  if (has_param_ && index == num_vars_) return "t";
  return "u" + std::to_string(index - num_vars_ - (has_param_ ? 1 : 0));
}

PolyRing PolyRing::with_order(const MonomialOrder& order) const {
  return PolyRing(num_vars_, has_param_, order, num_aux_);
}

PolyRing PolyRing::with_aux(int num_aux) const {
  return PolyRing(num_vars_, has_param_, order_, num_aux);
}

PolyRing PolyRing::with_param(bool has_param) const {
  return PolyRing(num_vars_, has_param, order_, num_aux_);
}

}  // namespace hilbkit
