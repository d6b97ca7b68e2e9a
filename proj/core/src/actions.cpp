#include "gwa/actions.hpp"

#include "gwa/terms.hpp"

namespace gwa {

namespace {

void check_table_range(const Table& t, int rows, int cols, int range,
                       const char* what) {
  if (static_cast<int>(t.size()) != rows) {
    throw structural_error(std::string(what) + ": wrong row count");
  }
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != cols) {
      throw structural_error(std::string(what) + ": ragged row");
    }
    for (int x : row) {
      if (x < 0 || x >= range) {
        throw structural_error(std::string(what) + ": entry out of range");
      }
    }
  }
}

}  // namespace

void check_shape(const ActionTriple& t) {
  check_shape(t.actor);
  check_shape(t.target);
  const int na = t.target.order;
  const int nb = t.actor.order;
  check_table_range(t.dot, nb, na, na, "dot");
  check_table_range(t.star, na, nb, na, "star");
  check_table_range(t.dual, nb, na, na, "dual");
}

CheckReport check_dot_group_action(const ActionTriple& t, const CheckOptions& opt) {
  return check_laws(dot_action_laws(), t, opt);
}

CheckReport check_conditions_A(const ActionTriple& t, const CheckOptions& opt) {
  return check_laws(conditions_A_laws(), t, opt);
}

CheckReport check_conditions_B(const ActionTriple& t, const CheckOptions& opt) {
  return check_laws(conditions_B_laws(), t, opt);
}

CheckReport check_unit_and_zero(const ActionTriple& t, const CheckOptions& opt) {
  CheckReport r = check_laws(unit_zero_laws(), t, opt);
  if (r.ok() || (opt.early_exit && !r.ok())) {
    if (!r.ok()) return r;
  }
  if (!r.ok()) {
    // The first three zero laws are implied by (1_A), (2_A), (1_B); if those
    // hold while a zero law fails, flag the inconsistency.
    const auto& conds_a = conditions_A_laws();
    const auto& conds_b = conditions_B_laws();
    const bool premises = law_holds(conds_a[0], t) && law_holds(conds_a[1], t) &&
                          law_holds(conds_b[0], t);
    bool zero_law_failed = false;
    for (const auto& v : r.violations()) {
      if (v.law != "a^{0_B}=a") zero_law_failed = true;
    }
    if (premises && zero_law_failed) {
      r.record("zero-law-implication", {}, opt.witness_cap);
    }
  }
  return r;
}

CheckReport is_derived_action(const ActionTriple& t, const CheckOptions& opt) {
  CheckReport r = check_dot_group_action(t, opt);
  if (opt.early_exit && !r.ok()) return r;
  r.merge(check_conditions_A(t, opt));
  if (opt.early_exit && !r.ok()) return r;
  r.merge(check_conditions_B(t, opt));
  if (opt.early_exit && !r.ok()) return r;
  r.merge(check_laws(std::span(&unit_zero_laws()[3], 1), t, opt));
  return r;
}

CheckReport check_reduced_conditions(const ActionTriple& t, const CheckOptions& opt) {
  check_shape(t);
  const CheckOptions fast{.witness_cap = 1, .early_exit = true};
  if (!is_reduced(t.actor, fast).ok() || !is_reduced(t.target, fast).ok()) {
    throw structural_error("check_reduced_conditions: input not reduced");
  }
  return check_laws(reduced_action_laws(), t, opt);
}

CheckReport is_derived_action_reduced(const ActionTriple& t, const CheckOptions& opt) {
  CheckReport r = check_reduced_conditions(t, opt);
  if (opt.early_exit && !r.ok()) return r;
  r.merge(is_derived_action(t, opt));
  return r;
}

ActionTriple self_action(const FiniteGwa& a) {
  check_shape(a);
  const int n = a.order;
  ActionTriple t{a, a, Table(n, std::vector<int>(n)),
                 Table(n, std::vector<int>(n)), Table(n, std::vector<int>(n))};
  for (int b = 0; b < n; ++b) {
    for (int x = 0; x < n; ++x) {
      t.dot[b][x] = a.add[a.add[b][x]][a.neg[b]];        // b + x - b
      t.star[b][x] = a.act[b][x];                        // star[a'][a] = a'^a
      t.dual[b][x] = a.add[a.act[b][x]][a.neg[b]];       // b^x - b
    }
  }
  return t;
}

ActionTriple naive_self_action(const FiniteGwa& a) {
  ActionTriple t = self_action(a);
  t.dual = a.act;  // a^{a'} without the subtraction
  return t;
}

ActionTriple ideal_action(const FiniteGwa& a, const SubsetMask& ideal) {
  const CheckOptions fast{.witness_cap = 1, .early_exit = true};
  if (!is_ideal(ideal, fast).ok()) {
    throw structural_error("ideal_action: subset is not an ideal");
  }
  const SubGwa sub = induced_subalgebra(ideal);
  const int na = sub.algebra.order;
  const int nb = a.order;
  ActionTriple t{a, sub.algebra, Table(nb, std::vector<int>(na)),
                 Table(na, std::vector<int>(nb)), Table(nb, std::vector<int>(na))};
  for (int g = 0; g < nb; ++g) {
    for (int k = 0; k < na; ++k) {
      const int i = sub.to_parent[k];
      const int conj = a.add[a.add[g][i]][a.neg[g]];       // g + i - g
      const int defect = a.add[a.act[g][i]][a.neg[g]];     // g^i - g
      if (sub.to_sub[conj] < 0 || sub.to_sub[defect] < 0) {
        throw structural_error("ideal_action: tables escape the ideal");
      }
      t.dot[g][k] = sub.to_sub[conj];
      t.dual[g][k] = sub.to_sub[defect];
    }
  }
  for (int k = 0; k < na; ++k) {
    const int i = sub.to_parent[k];
    for (int g = 0; g < nb; ++g) {
      const int pw = a.act[i][g];
      if (sub.to_sub[pw] < 0) {
        throw structural_error("ideal_action: star table escapes the ideal");
      }
      t.star[k][g] = sub.to_sub[pw];
    }
  }
  return t;
}

}  // namespace gwa
