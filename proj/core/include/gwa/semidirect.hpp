#pragma once

#include "gwa/actions.hpp"
#include "gwa/algebra.hpp"
#include "gwa/check.hpp"

namespace gwa {

/// The product carrier B x A, pair (b, a) at index b * n_A + a, with
///   (b,a) + (b',a') = (b + b', a + b.a')
///   (b,a)^{(b',a')} = (b^{b'}, (a^{a'})^{b'} + (b^{a'})^{b'})
/// filled from an arbitrary triple; whether the result is a Gwa object is
/// exactly what validate_candidate decides.
struct SemidirectCandidate {
  FiniteGwa actor;   // B
  FiniteGwa target;  // A
  ActionTriple triple;
  FiniteGwa product;
  bool validated = false;

  int pair_index(int b, int a) const { return b * target.order + a; }
  int b_of(int idx) const { return idx / target.order; }
  int a_of(int idx) const { return idx % target.order; }
};

struct SplitExtension {
  FiniteGwa a, e, b;
  GwaMorphism i;  // A -> E
  GwaMorphism p;  // E -> B
  GwaMorphism j;  // B -> E, section of p
};

SemidirectCandidate build_semidirect(const FiniteGwa& b, const FiniteGwa& a,
                                     const ActionTriple& t);

/// Gwa mode: product passes validate_gwa. Reduced mode additionally requires
/// the product to pass is_reduced.
CheckReport validate_candidate(const SemidirectCandidate& c, bool reduced_mode = false,
                               const CheckOptions& opt = {});

/// p(b,a) = b, i(a) = (0,a), j(b) = (b,0). Throws "candidate invalid" if the
/// candidate fails Gwa validation.
SplitExtension canonical_split_extension(const SemidirectCandidate& c);

/// Checks all split-extension invariants: the three maps are morphisms, p is
/// surjective, i injective, image(i) = kernel(p), p after j is the identity.
CheckReport verify_split_extension(const SplitExtension& x, const CheckOptions& opt = {});

/// b.a = j(b) + a - j(b), b^a = j(b)^a - j(b), a^b = a^{j(b)}, pulled back
/// along i. Throws structural_error if a value leaves the image of i.
ActionTriple extract_derived_actions(const SplitExtension& x);

/// ok iff extracting from the canonical split extension of the semidirect
/// product of (b, a, t) returns t table-for-table.
CheckReport roundtrip_check(const FiniteGwa& b, const FiniteGwa& a,
                            const ActionTriple& t, const CheckOptions& opt = {});

}  // namespace gwa
