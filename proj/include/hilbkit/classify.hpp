#pragma once

#include <cstdint>
#include <string>

#include "hilbkit/ideal.hpp"

namespace hilbkit {

enum class TypeLabel { I, II, III, IV };

std::string to_string(TypeLabel label);
TypeLabel parse_type_label(const std::string& text);

struct Evidence {
  bool has_embedded = false;
  bool generically_reduced = false;
};

// (false,true) -> I, (false,false) -> II, (true,true) -> III, (true,false) -> IV
TypeLabel label_from_evidence(const Evidence& evidence);

struct SchemeType {
  TypeLabel label;
  Evidence evidence;
  int retries = 0;  // rejected random choices across all sub-tests
};

/// Representatives in Q[x0..xn]:
///   I   (x0x2, x0x3, x1x2, x1x3)
///   II  (x0^2, x0x1, x1^2, x0x3 - x1x2)
///   III (x0^2, x0x1, x0x2, x1x2)
///   IV  (x0^2, x0x1, x1^2, x0x2 - x1x2)
Ideal normal_form_ideal(int n, TypeLabel label);

struct HullResult {
  Ideal hull;
  int retries = 0;
};

/// (F : (F : I)) for F two random combinations of the quadrics in I that form
/// a complete intersection. Up to five draws. Requires a homogeneous ideal of
/// codimension two.
HullResult equidimensional_hull(const Ideal& ideal, std::uint64_t seed);

struct SliceResult {
  bool reduced = false;
  int retries = 0;
};

/// Cuts an unmixed degree-2 ideal of dimension n-2 by n-2 random hyperplanes,
/// dehomogenizes the length-2 slice and tests the discriminant of a
/// multiplication matrix. A reduced answer is certain; a non-reduced answer is
/// confirmed on `trials` independent slices.
SliceResult generic_slice_reduced(const Ideal& ideal, std::uint64_t seed, int trials = 2);

/// Requires a saturated homogeneous ideal with Hilbert polynomial
/// pn_reference(n). Throws DomainError when the polynomial differs or the
/// hull is not a degree-2 scheme of dimension n-2.
SchemeType classify(const Ideal& ideal, std::uint64_t seed);

}  // namespace hilbkit
