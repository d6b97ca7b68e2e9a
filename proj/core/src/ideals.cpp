#include "gwa/ideals.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gwa {

int SubsetMask::popcount() const {
  int c = 0;
  for (char m : members) c += m != 0;
  return c;
}

std::vector<int> SubsetMask::indices() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    if (members[i]) out.push_back(i);
  }
  return out;
}

SubsetMask make_subset(const FiniteGwa& parent, const std::vector<int>& indices) {
  SubsetMask s{parent, std::vector<char>(parent.order, 0)};
  for (int i : indices) {
    if (i < 0 || i >= parent.order) {
      throw structural_error("subset: index out of range");
    }
    s.members[i] = 1;
  }
  s.members[0] = 1;
  return s;
}

void check_shape(const SubsetMask& s) {
  check_shape(s.parent);
  if (static_cast<int>(s.members.size()) != s.parent.order) {
    throw structural_error("subset: mask length mismatch");
  }
  if (!s.members[0]) throw structural_error("subset: must contain zero");
}

CheckReport is_normal_subgroup(const SubsetMask& s, const CheckOptions& opt) {
  check_shape(s);
  CheckReport r;
  const FiniteGwa& g = s.parent;
  for (int a = 0; a < g.order; ++a) {
    if (!s.contains(a)) continue;
    if (!s.contains(g.neg[a])) {
      r.record("subgroup-neg", {a}, opt.witness_cap);
      if (opt.early_exit) return r;
    }
    for (int b = 0; b < g.order; ++b) {
      if (s.contains(b) && !s.contains(g.add[a][b])) {
        r.record("subgroup-add", {a, b}, opt.witness_cap);
        if (opt.early_exit) return r;
      }
    }
    for (int x = 0; x < g.order; ++x) {
      // x + a - x
      if (!s.contains(g.add[g.add[x][a]][g.neg[x]])) {
        r.record("normality", {a, x}, opt.witness_cap);
        if (opt.early_exit) return r;
      }
    }
  }
  return r;
}

CheckReport is_ideal(const SubsetMask& s, const CheckOptions& opt) {
  CheckReport r = is_normal_subgroup(s, opt);
  if (opt.early_exit && !r.ok()) return r;
  const FiniteGwa& g = s.parent;
  for (int a = 0; a < g.order; ++a) {
    if (!s.contains(a)) continue;
    for (int x = 0; x < g.order; ++x) {
      if (!s.contains(g.act[a][x])) {
        r.record("ideal-2", {a, x}, opt.witness_cap);
        if (opt.early_exit) return r;
      }
      const bool left = s.contains(g.add[g.neg[x]][g.act[x][a]]);   // -g + g^a
      const bool right = s.contains(g.add[g.act[x][a]][g.neg[x]]);  // g^a - g
      if (!left) {
        r.record("ideal-3", {a, x}, opt.witness_cap);
        if (opt.early_exit) return r;
      }
      if (left != right) {
        r.record("ideal-3-inconsistent", {a, x}, opt.witness_cap);
        if (opt.early_exit) return r;
      }
    }
  }
  return r;
}

SubsetMask ideal_closure(const FiniteGwa& g, const SubsetMask& seed) {
  check_shape(seed);
  SubsetMask s = seed;
  s.members[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    auto put = [&](int i) {
      if (!s.members[i]) {
        s.members[i] = 1;
        changed = true;
      }
    };
    for (int a = 0; a < g.order; ++a) {
      if (!s.contains(a)) continue;
      put(g.neg[a]);
      for (int b = 0; b < g.order; ++b) {
        if (s.contains(b)) put(g.add[a][b]);
      }
      for (int x = 0; x < g.order; ++x) {
        put(g.add[g.add[x][a]][g.neg[x]]);        // normality
        put(g.act[a][x]);                         // a^g
        put(g.add[g.neg[x]][g.act[x][a]]);        // -g + g^a
      }
    }
  }
  return s;
}

SubGwa induced_subalgebra(const SubsetMask& s) {
  check_shape(s);
  const FiniteGwa& g = s.parent;
  SubGwa out;
  out.to_parent = s.indices();
  out.to_sub.assign(g.order, -1);
  for (int i = 0; i < static_cast<int>(out.to_parent.size()); ++i) {
    out.to_sub[out.to_parent[i]] = i;
  }
  const int m = static_cast<int>(out.to_parent.size());
  FiniteGwa& sub = out.algebra;
  sub.name = g.name + "|sub";
  sub.order = m;
  sub.add.assign(m, std::vector<int>(m));
  sub.neg.resize(m);
  sub.act.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    const int a = out.to_parent[i];
    const int na = out.to_sub[g.neg[a]];
    if (na < 0) throw structural_error("subset not closed under negation");
    sub.neg[i] = na;
    for (int j = 0; j < m; ++j) {
      const int b = out.to_parent[j];
      const int ab = out.to_sub[g.add[a][b]];
      const int pw = out.to_sub[g.act[a][b]];
      if (ab < 0) throw structural_error("subset not closed under addition");
      if (pw < 0) throw structural_error("subset not closed under action");
      sub.add[i][j] = ab;
      sub.act[i][j] = pw;
    }
  }
  return out;
}

namespace {

// coset_of[x] = smallest representative of x's coset x + I.
std::vector<int> coset_reps(const FiniteGwa& g, const SubsetMask& ideal) {
  std::vector<int> rep(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    int best = x;
    for (int i = 0; i < g.order; ++i) {
      if (ideal.contains(i)) best = std::min(best, g.add[x][i]);
    }
    rep[x] = best;
  }
  return rep;
}

}  // namespace

FiniteGwa quotient_gwa(const FiniteGwa& g, const SubsetMask& ideal) {
  if (!is_ideal(ideal, {.witness_cap = 1, .early_exit = true}).ok()) {
    throw structural_error("quotient: subset is not an ideal");
  }
  const std::vector<int> rep = coset_reps(g, ideal);
  std::vector<int> reps;  // ascending; rep of 0 is 0, so the zero coset is first
  for (int x = 0; x < g.order; ++x) {
    if (rep[x] == x) reps.push_back(x);
  }
  std::vector<int> coset_index(g.order, -1);
  for (int k = 0; k < static_cast<int>(reps.size()); ++k) {
    for (int x = 0; x < g.order; ++x) {
      if (rep[x] == reps[k]) coset_index[x] = k;
    }
  }
  // Well-definedness: operations must not depend on the representative.
  for (int x = 0; x < g.order; ++x) {
    for (int y = 0; y < g.order; ++y) {
      const int rx = rep[x], ry = rep[y];
      if (rep[g.add[x][y]] != rep[g.add[rx][ry]]) {
        throw structural_error("quotient: addition not well-defined on cosets");
      }
      if (rep[g.act[x][y]] != rep[g.act[rx][ry]]) {
        throw structural_error("quotient: action not well-defined on cosets");
      }
    }
  }
  const int m = static_cast<int>(reps.size());
  FiniteGwa q{g.name + "/I", m, {}, {}, {}};
  q.add.assign(m, std::vector<int>(m));
  q.neg.resize(m);
  q.act.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    q.neg[i] = coset_index[g.neg[reps[i]]];
    for (int j = 0; j < m; ++j) {
      q.add[i][j] = coset_index[g.add[reps[i]][reps[j]]];
      q.act[i][j] = coset_index[g.act[reps[i]][reps[j]]];
    }
  }
  return q;
}

GwaMorphism quotient_projection(const FiniteGwa& g, const SubsetMask& ideal) {
  FiniteGwa q = quotient_gwa(g, ideal);
  const std::vector<int> rep = coset_reps(g, ideal);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (rep[x] == x) reps.push_back(x);
  }
  GwaMorphism p{g, q, std::vector<int>(g.order)};
  for (int x = 0; x < g.order; ++x) {
    p.map[x] = static_cast<int>(
        std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());
  }
  return p;
}

}  // namespace gwa
