#pragma once

#include <vector>

#include "gwa/algebra.hpp"
#include "gwa/check.hpp"

namespace gwa {

/// A subset of a FiniteGwa's carrier. Must contain the zero element.
struct SubsetMask {
  FiniteGwa parent;
  std::vector<char> members;  // members[i] != 0 iff element i is in the subset

  bool contains(int i) const { return members[i] != 0; }
  int popcount() const;
  std::vector<int> indices() const;
};

SubsetMask make_subset(const FiniteGwa& parent, const std::vector<int>& indices);

void check_shape(const SubsetMask& s);

CheckReport is_normal_subgroup(const SubsetMask& s, const CheckOptions& opt = {});

/// Ideal conditions: (1) normal subgroup, (2) a^g in A for a in A, g in G,
/// (3) -g + g^a in A for a in A, g in G. The equivalent form g^a - g in A is
/// cross-checked; disagreement is reported as "ideal-3-inconsistent".
CheckReport is_ideal(const SubsetMask& s, const CheckOptions& opt = {});

/// Smallest ideal containing the seed, by fixpoint saturation.
SubsetMask ideal_closure(const FiniteGwa& g, const SubsetMask& seed);

/// The ideal as a Gwa object in its own right, carrier = members in ascending
/// index order. to_sub maps parent indices to sub indices (-1 outside).
struct SubGwa {
  FiniteGwa algebra;
  std::vector<int> to_parent;
  std::vector<int> to_sub;
};

SubGwa induced_subalgebra(const SubsetMask& s);

/// Quotient by an ideal. Cosets are ordered by their smallest member; the
/// zero coset comes first. Well-definedness of both operations on cosets is
/// verified exhaustively; a failure throws structural_error, which for a
/// genuine ideal must never happen.
FiniteGwa quotient_gwa(const FiniteGwa& g, const SubsetMask& ideal);

/// Projection of g onto quotient_gwa(g, ideal).
GwaMorphism quotient_projection(const FiniteGwa& g, const SubsetMask& ideal);

}  // namespace gwa
