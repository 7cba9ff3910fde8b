#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hilbkit/polynomial.hpp"

namespace hilbkit {

struct GroebnerOptions {
  // Record how each basis element is built from the input generators.
  bool track_transform = false;
  // Permute the input and randomise tie-breaking in the pair queue. The
  // reduced basis does not depend on it; tests use it to check exactly that.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Reduced Groebner basis: monic elements sorted by ascending leading monomial.
/// When tracked, transform()[k][j] is the coefficient of generators()[j] in
/// elements()[k].
class GroebnerBasis {
 public:
  GroebnerBasis(PolyRing ring, std::vector<Polynomial> generators, std::vector<Polynomial> elements,
                std::vector<std::vector<Polynomial>> transform)
      : ring_(ring),
        generators_(std::move(generators)),
        elements_(std::move(elements)),
        transform_(std::move(transform)) {}

  const PolyRing& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_.order(); }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool has_transform() const { return !transform_.empty() || elements_.empty(); }
  const std::vector<std::vector<Polynomial>>& transform() const { return transform_; }

  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }

 private:
  PolyRing ring_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> elements_;
  std::vector<std::vector<Polynomial>> transform_;
};

/// Buchberger's algorithm with sugar-degree pair selection and the
/// Gebauer-Moeller form of both Buchberger criteria. The generators are moved
/// into ring.with_order(order).
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

// Full reduction of f by the basis. f is moved into the basis ring first.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division of f by the divisors (in the divisors' ring order):
/// f = sum quotients[i]*divisors[i] + remainder, no term of remainder divisible
/// by any leading monomial.
Division divide(const Polynomial& f, std::span<const Polynomial> divisors);

// Exact division; throws DomainError when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

// Buchberger certificate: every S-polynomial reduces to zero.
bool s_pairs_reduce_to_zero(const GroebnerBasis& gb);
// No term of an element is divisible by another element's leading monomial;
// leading coefficients are one.
bool is_reduced(const GroebnerBasis& gb);
// transform * generators == elements, exactly.
bool transform_is_exact(const GroebnerBasis& gb);

/// Generators of <gens> intersected with the subring in the variables outside
/// front_mask, from a block-elimination basis. The result stays in the input ring.
std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, std::uint32_t front_mask);

struct Syzygy {
  std::vector<Polynomial> components;
  // deg(components[j]) + deg(gens[j]) for every nonzero component.
  int degree = 0;
};

struct SyzygyModule {
  std::vector<Polynomial> generators;
  std::vector<Syzygy> syzygies;
  // Every Schreyer syzygy of the Groebner basis was confirmed to reduce the
  // S-polynomial to zero and every lifted tuple annihilates the generators.
  bool schreyer_certified = false;
};

/// Generating syzygies of homogeneous generators: Schreyer syzygies of the
/// reduced basis lifted through the transform, plus the relations expressing
/// each generator in the basis, then reduced to a minimal generating set
/// degree by degree.
SyzygyModule syzygies(std::span<const Polynomial> gens);

// sum_j s_j * gens[j]
Polynomial apply_syzygy(std::span<const Polynomial> components, std::span<const Polynomial> gens);

// True when v lies in the graded submodule of S^r spanned by the given
// homogeneous syzygies (checked by linear algebra in v's degree).
bool in_syzygy_span(const Syzygy& v, std::span<const Syzygy> span, std::span<const Polynomial> gens);

}  // namespace hilbkit
