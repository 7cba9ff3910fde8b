#include "hilbkit/hilbert.hpp"

#include <algorithm>

#include "hilbkit/error.hpp"

namespace hilbkit {

namespace {

void minimize_monomials(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

UPoly one_minus_t_pow(int d) {
  return UPoly::constant(1) - UPoly::monomial(1, d);
}

UPoly numerator_rec(std::vector<Monomial> gens, int num_vars) {
  minimize_monomials(gens);
  if (gens.empty()) return UPoly::constant(1);
  if (gens.front().is_one()) return UPoly();

  std::vector<int> freq(static_cast<std::size_t>(num_vars), 0);
  for (const auto& m : gens)
    for (int v = 0; v < num_vars; ++v)
      if (m[v] > 0) ++freq[static_cast<std::size_t>(v)];
  auto best = std::max_element(freq.begin(), freq.end());
  if (*best <= 1) {
    // Pairwise coprime generators.
    UPoly acc = UPoly::constant(1);
    for (const auto& m : gens) acc = acc * one_minus_t_pow(m.degree());
    return acc;
  }
  int x = static_cast<int>(best - freq.begin());

  // N(M) = N(M + (x)) + T * N(M : x)
  std::vector<Monomial> rest, colon;
  Monomial xm = Monomial::variable(x);
  for (const auto& m : gens) {
    if (m[x] == 0) {
      rest.push_back(m);
      colon.push_back(m);
    } else {
      colon.push_back(m / xm);
    }
  }
  UPoly with_x = one_minus_t_pow(1) * numerator_rec(std::move(rest), num_vars);
  return with_x + UPoly::monomial(1, 1) * numerator_rec(std::move(colon), num_vars);
}

UPoly binomial_in_m(long shift, int k) { return UPoly::binomial(shift, k); }

}  // namespace

UPoly monomial_numerator(std::vector<Monomial> gens, int num_vars) {
  return numerator_rec(std::move(gens), num_vars);
}

Integer HilbertData::series_coefficient(int d) const {
  Integer acc = 0;
  for (int i = 0; i <= numerator.degree() && i <= d; ++i) {
    Rational c = numerator.coeff(i);
    acc += c.get_num() * binomial(d - i + num_vars - 1, num_vars - 1);
  }
  return acc;
}

HilbertData hilbert_data_from_numerator(const UPoly& numerator, int num_vars) {
  HilbertData out;
  out.numerator = numerator;
  out.num_vars = num_vars;
  if (numerator.is_zero()) return out;
  UPoly h = numerator;
  int k = 0;
  while (!h.is_zero() && h(1) == 0) {
    h = h.divide_one_minus_t();
    ++k;
  }
  const int krull = num_vars - k;
  out.dimension = krull - 1;
  UPoly hp;
  if (krull > 0) {
    for (int i = 0; i <= h.degree(); ++i)
      hp = hp + binomial_in_m(krull - 1 - i, krull - 1).scale(h.coeff(i));
  }
  out.polynomial = hp;
  if (out.dimension >= 0) {
    Rational deg = hp.leading();
    for (int i = 2; i <= out.dimension; ++i) deg *= i;
    out.degree = deg.get_num();
  }
  out.agreement_bound = std::max(0, numerator.degree() - num_vars + 1);
  return out;
}

HilbertData hilbert_series(const Ideal& ideal, const MonomialOrder& order) {
  if (!ideal.is_homogeneous()) throw DomainError("Hilbert series requires a homogeneous ideal");
  const int nv = ideal.ring().total_vars();
  std::vector<Monomial> lead;
  if (!ideal.is_zero()) lead = ideal.gb(order).leading_monomials();
  return hilbert_data_from_numerator(monomial_numerator(std::move(lead), nv), nv);
}

HilbertData hilbert_series(const Ideal& ideal) { return hilbert_series(ideal, MonomialOrder::grevlex()); }

std::vector<Monomial> standard_monomials(std::span<const Monomial> leading_monomials, int num_vars, int d) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(num_vars, d)) {
    bool in = false;
    for (const auto& l : leading_monomials)
      if (l.divides(m)) {
        in = true;
        break;
      }
    if (!in) out.push_back(m);
  }
  return out;
}

Integer hilbert_function(const Ideal& ideal, int d) {
  if (!ideal.is_homogeneous()) throw DomainError("Hilbert function requires a homogeneous ideal");
  if (d < 0) return 0;
  const int nv = ideal.ring().total_vars();
  std::vector<Monomial> lead;
  if (!ideal.is_zero()) lead = ideal.gb().leading_monomials();
  Integer total = binomial(d + nv - 1, nv - 1);
  std::size_t in_cone = 0;
  for (const auto& m : monomials_of_degree(nv, d))
    for (const auto& l : lead)
      if (l.divides(m)) {
        ++in_cone;
        break;
      }
  return total - static_cast<long>(in_cone);
}

UPoly pn_reference(int n) {
  if (n < 3) throw DomainError("pn_reference needs n >= 3");
  return UPoly::binomial(n - 2, n - 2).scale(2) - UPoly::binomial(n - 4, n - 4);
}

}  // namespace hilbkit
