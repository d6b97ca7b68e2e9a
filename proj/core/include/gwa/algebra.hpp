#pragma once

#include <string>
#include <vector>

#include "gwa/check.hpp"

namespace gwa {

using Table = std::vector<std::vector<int>>;

/// A finite group given by its Cayley table. Element 0 is the zero element.
struct GroupTable {
  std::string name;
  int order = 0;
  Table add;             // add[g][h] = g + h
  std::vector<int> neg;  // neg[g] = -g
};

/// A finite group together with a right action of the group on itself,
/// act[g][h] = g^h. The action must satisfy
///   g^(h+h') = (g^h)^h',   g^0 = g,   (g+g')^h = g^h + g'^h.
struct FiniteGwa {
  std::string name;
  int order = 0;
  Table add;
  std::vector<int> neg;
  Table act;  // act[g][h] = g^h, row = base

  int plus(int g, int h) const { return add[g][h]; }
  int minus(int g) const { return neg[g]; }
  int pow(int g, int h) const { return act[g][h]; }
  int sub(int g, int h) const { return add[g][neg[h]]; }
};

struct GwaMorphism {
  FiniteGwa source;
  FiniteGwa target;
  std::vector<int> map;  // map[g] = image index in target
};

/// Throws structural_error unless all tables have shape n x n (resp. n) with
/// entries in [0, n).
void check_shape(const GroupTable& g);
void check_shape(const FiniteGwa& g);

GroupTable group_of(const FiniteGwa& g);

CheckReport validate_group(const FiniteGwa& g, const CheckOptions& opt = {});
CheckReport validate_group(const GroupTable& g, const CheckOptions& opt = {});
CheckReport validate_self_action(const FiniteGwa& g, const CheckOptions& opt = {});
CheckReport validate_gwa(const FiniteGwa& g, const CheckOptions& opt = {});

/// Reducedness: x^y + z = z + x^y for all y != 0, and x^(y^z) = x^y.
CheckReport is_reduced(const FiniteGwa& g, const CheckOptions& opt = {});

CheckReport is_morphism(const GwaMorphism& f, const CheckOptions& opt = {});

GwaMorphism compose(const GwaMorphism& first, const GwaMorphism& second);
GwaMorphism identity_morphism(const FiniteGwa& g);

/// act[g][h] = g.
FiniteGwa identity_action_gwa(const GroupTable& g);
/// act[g][h] = -h + g + h.
FiniteGwa conjugation_gwa(const GroupTable& g);

// Fixture groups used throughout the tests and the bundled corpus.
GroupTable trivial_group();
GroupTable cyclic_group(int n);
GroupTable klein_four_group();
GroupTable symmetric_group_s3();

}  // namespace gwa
