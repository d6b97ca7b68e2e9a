#pragma once

#include "gwa/algebra.hpp"
#include "gwa/check.hpp"
#include "gwa/ideals.hpp"

namespace gwa {

/// An action of B on A as three raw tables. No laws are assumed at
/// construction; the checkers below are what tests them.
struct ActionTriple {
  FiniteGwa actor;   // B
  FiniteGwa target;  // A
  Table dot;   // n_B x n_A, dot[b][a] = b.a, value in A
  Table star;  // n_A x n_B, star[a][b] = a^b, value in A
  Table dual;  // n_B x n_A, dual[b][a] = b^a, value in A

  bool same_tables(const ActionTriple& other) const {
    return dot == other.dot && star == other.star && dual == other.dual;
  }
};

void check_shape(const ActionTriple& t);

CheckReport check_dot_group_action(const ActionTriple& t, const CheckOptions& opt = {});
CheckReport check_conditions_A(const ActionTriple& t, const CheckOptions& opt = {});
CheckReport check_conditions_B(const ActionTriple& t, const CheckOptions& opt = {});

/// The four unit laws. The first three follow from (1_A), (2_A), (1_B); if
/// those hold but a zero law fails, the report carries a
/// "zero-law-implication" violation as well.
CheckReport check_unit_and_zero(const ActionTriple& t, const CheckOptions& opt = {});

/// Derived-action characterization: dot group action laws, (1_A)-(4_A),
/// (1_B)-(4_B), and a^{0_B} = a.
CheckReport is_derived_action(const ActionTriple& t, const CheckOptions& opt = {});

/// The ten extra identities required in the reduced subcategory. Both
/// algebras must pass is_reduced; otherwise throws structural_error.
CheckReport check_reduced_conditions(const ActionTriple& t, const CheckOptions& opt = {});

CheckReport is_derived_action_reduced(const ActionTriple& t, const CheckOptions& opt = {});

/// a.a' = a + a' - a, star = the algebra's own action, dual a^{a'} - a.
ActionTriple self_action(const FiniteGwa& a);

/// Like self_action but with dual a^{a'} (no subtraction); not a derived
/// action on any carrier with more than one element.
ActionTriple naive_self_action(const FiniteGwa& a);

/// Action of A on an ideal I: a.i = a + i - a, i^a restricted, a^i - a.
ActionTriple ideal_action(const FiniteGwa& a, const SubsetMask& ideal);

}  // namespace gwa
