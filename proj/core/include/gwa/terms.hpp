#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gwa/algebra.hpp"
#include "gwa/check.hpp"

namespace gwa {

struct ActionTriple;

enum class Sort { A, B };

/// Term over two sorts with the fixed exponent-resolution rule:
///   base A, exp A -> A's own action;  base A, exp B -> star (a^b);
///   base B, exp A -> dual (b^a), result sort A;  base B, exp B -> B's action.
/// Dot takes a B on the left, an A on the right, result sort A.
struct Term {
  enum class Kind { Var, Zero, Add, Neg, Dot, Pow };
  Kind kind;
  Sort sort;
  int var = -1;
  std::shared_ptr<const Term> lhs, rhs;
};

using TermPtr = std::shared_ptr<const Term>;

TermPtr var(int index, Sort s);
TermPtr zero(Sort s);
TermPtr add(TermPtr x, TermPtr y);
TermPtr neg(TermPtr x);
TermPtr dot(TermPtr b, TermPtr a);
TermPtr pow(TermPtr base, TermPtr exp);

/// A quantified identity lhs = rhs over typed variables.
struct Law {
  std::string id;
  std::vector<Sort> vars;
  TermPtr lhs, rhs;
};

int eval(const Term& t, const ActionTriple& triple, std::span<const int> env);

/// Checks each law over all assignments of its variables; witnesses are the
/// assignment tuples in variable order.
CheckReport check_laws(std::span<const Law> laws, const ActionTriple& triple,
                       const CheckOptions& opt = {});

bool law_holds(const Law& law, const ActionTriple& triple);

// Catalogues. Each returns the same Law objects on every call.
const std::vector<Law>& dot_action_laws();     // group action laws for dot
const std::vector<Law>& conditions_A_laws();   // (1_A)..(4_A)
const std::vector<Law>& conditions_B_laws();   // (1_B)..(4_B)
const std::vector<Law>& unit_zero_laws();      // 0_A^b, 0_B^a, b^{0_A}, a^{0_B}
const std::vector<Law>& reduced_action_laws(); // the ten extra identities

}  // namespace gwa
