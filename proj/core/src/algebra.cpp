#include "gwa/algebra.hpp"

#include <numeric>

namespace gwa {

namespace {

void check_vector(const std::vector<int>& v, int n, const std::string& what) {
  if (static_cast<int>(v.size()) != n) {
    throw structural_error(what + ": expected " + std::to_string(n) +
                           " entries, got " + std::to_string(v.size()));
  }
  for (int x : v) {
    if (x < 0 || x >= n) {
      throw structural_error(what + ": entry " + std::to_string(x) +
                             " out of range [0," + std::to_string(n) + ")");
    }
  }
}

void check_table(const Table& t, int rows, int cols, int range,
                 const std::string& what) {
  if (static_cast<int>(t.size()) != rows) {
    throw structural_error(what + ": expected " + std::to_string(rows) +
                           " rows, got " + std::to_string(t.size()));
  }
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != cols) {
      throw structural_error(what + ": ragged row");
    }
    for (int x : row) {
      if (x < 0 || x >= range) {
        throw structural_error(what + ": entry " + std::to_string(x) +
                               " out of range [0," + std::to_string(range) +
                               ")");
      }
    }
  }
}

}  // namespace

void check_shape(const GroupTable& g) {
  if (g.order <= 0) throw structural_error(g.name + ": order must be positive");
  check_table(g.add, g.order, g.order, g.order, g.name + ".add");
  check_vector(g.neg, g.order, g.name + ".neg");
}

void check_shape(const FiniteGwa& g) {
  check_shape(group_of(g));
  check_table(g.act, g.order, g.order, g.order, g.name + ".act");
}

GroupTable group_of(const FiniteGwa& g) {
  return GroupTable{g.name, g.order, g.add, g.neg};
}

CheckReport validate_group(const GroupTable& g, const CheckOptions& opt) {
  check_shape(g);
  CheckReport r;
  const int n = g.order;
  for (int a = 0; a < n && !(opt.early_exit && !r.ok()); ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (g.add[g.add[a][b]][c] != g.add[a][g.add[b][c]]) {
          r.record("assoc", {a, b, c}, opt.witness_cap);
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (g.add[0][a] != a || g.add[a][0] != a) {
      r.record("identity", {a}, opt.witness_cap);
    }
    if (g.add[a][g.neg[a]] != 0 || g.add[g.neg[a]][a] != 0) {
      r.record("inverse", {a}, opt.witness_cap);
    }
  }
  return r;
}

CheckReport validate_group(const FiniteGwa& g, const CheckOptions& opt) {
  return validate_group(group_of(g), opt);
}

CheckReport validate_self_action(const FiniteGwa& g, const CheckOptions& opt) {
  check_shape(g);
  CheckReport r;
  const int n = g.order;
  for (int a = 0; a < n; ++a) {
    for (int h = 0; h < n; ++h) {
      for (int h2 = 0; h2 < n; ++h2) {
        if (g.act[a][g.add[h][h2]] != g.act[g.act[a][h]][h2]) {
          r.record("eps-1", {a, h, h2}, opt.witness_cap);
          if (opt.early_exit) return r;
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (g.act[a][0] != a) {
      r.record("eps-2", {a}, opt.witness_cap);
      if (opt.early_exit) return r;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int a2 = 0; a2 < n; ++a2) {
      for (int h = 0; h < n; ++h) {
        if (g.act[g.add[a][a2]][h] != g.add[g.act[a][h]][g.act[a2][h]]) {
          r.record("eps-3", {a, a2, h}, opt.witness_cap);
          if (opt.early_exit) return r;
        }
      }
    }
  }
  // Consequences of the axioms; a violation here with eps-1..3 clean would be
  // an internal inconsistency.
  for (int h = 0; h < n; ++h) {
    if (g.act[0][h] != 0) {
      r.record("eps-zero", {h}, opt.witness_cap);
      if (opt.early_exit) return r;
    }
    for (int a = 0; a < n; ++a) {
      if (g.act[g.neg[a]][h] != g.neg[g.act[a][h]]) {
        r.record("eps-neg", {a, h}, opt.witness_cap);
        if (opt.early_exit) return r;
      }
    }
  }
  return r;
}

CheckReport validate_gwa(const FiniteGwa& g, const CheckOptions& opt) {
  CheckReport r = validate_group(g, opt);
  if (opt.early_exit && !r.ok()) return r;
  r.merge(validate_self_action(g, opt));
  return r;
}

CheckReport is_reduced(const FiniteGwa& g, const CheckOptions& opt) {
  check_shape(g);
  CheckReport r;
  const int n = g.order;
  for (int x = 0; x < n; ++x) {
    for (int y = 1; y < n; ++y) {  // y != 0 only
      for (int z = 0; z < n; ++z) {
        const int xy = g.act[x][y];
        if (g.add[xy][z] != g.add[z][xy]) {
          r.record("reduced-1", {x, y, z}, opt.witness_cap);
          if (opt.early_exit) return r;
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (g.act[x][g.act[y][z]] != g.act[x][y]) {
          r.record("reduced-2", {x, y, z}, opt.witness_cap);
          if (opt.early_exit) return r;
        }
      }
    }
  }
  return r;
}

CheckReport is_morphism(const GwaMorphism& f, const CheckOptions& opt) {
  check_shape(f.source);
  check_shape(f.target);
  const int n = f.source.order;
  if (static_cast<int>(f.map.size()) != n) {
    throw structural_error("morphism map: wrong length");
  }
  for (int x : f.map) {
    if (x < 0 || x >= f.target.order) {
      throw structural_error("morphism map: entry out of range");
    }
  }
  CheckReport r;
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (f.map[f.source.add[g][h]] != f.target.add[f.map[g]][f.map[h]]) {
        r.record("additive", {g, h}, opt.witness_cap);
        if (opt.early_exit) return r;
      }
      if (f.map[f.source.act[g][h]] != f.target.act[f.map[g]][f.map[h]]) {
        r.record("equivariance", {g, h}, opt.witness_cap);
        if (opt.early_exit) return r;
      }
    }
  }
  return r;
}

GwaMorphism compose(const GwaMorphism& first, const GwaMorphism& second) {
  if (first.target.order != second.source.order) {
    throw structural_error("compose: middle objects differ");
  }
  GwaMorphism out{first.source, second.target, {}};
  out.map.reserve(first.map.size());
  for (int x : first.map) out.map.push_back(second.map[x]);
  return out;
}

GwaMorphism identity_morphism(const FiniteGwa& g) {
  GwaMorphism f{g, g, std::vector<int>(g.order)};
  std::iota(f.map.begin(), f.map.end(), 0);
  return f;
}

FiniteGwa identity_action_gwa(const GroupTable& g) {
  check_shape(g);
  FiniteGwa out{g.name, g.order, g.add, g.neg, {}};
  out.act.assign(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a) {
    for (int h = 0; h < g.order; ++h) out.act[a][h] = a;
  }
  return out;
}

FiniteGwa conjugation_gwa(const GroupTable& g) {
  check_shape(g);
  FiniteGwa out{g.name, g.order, g.add, g.neg, {}};
  out.act.assign(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a) {
    for (int h = 0; h < g.order; ++h) {
      out.act[a][h] = g.add[g.add[g.neg[h]][a]][h];  // -h + a + h
    }
  }
  return out;
}

GroupTable trivial_group() {
  return GroupTable{"trivial", 1, {{0}}, {0}};
}

GroupTable cyclic_group(int n) {
  if (n <= 0) throw structural_error("cyclic_group: order must be positive");
  GroupTable g{"Z" + std::to_string(n), n, {}, {}};
  g.add.assign(n, std::vector<int>(n));
  g.neg.resize(n);
  for (int a = 0; a < n; ++a) {
    g.neg[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) g.add[a][b] = (a + b) % n;
  }
  return g;
}

GroupTable klein_four_group() {
  // Z2 x Z2, element (x,y) at index 2x + y.
  GroupTable g{"V4", 4, {}, {}};
  g.add.assign(4, std::vector<int>(4));
  g.neg = {0, 1, 2, 3};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) g.add[a][b] = a ^ b;
  }
  return g;
}

GroupTable symmetric_group_s3() {
  // Permutations of {0,1,2} in lexicographic order; identity is index 0.
  // Composition: (p + q)(x) = q(p(x)).
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i) {
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
        return i;
    }
    return -1;
  };
  GroupTable g{"S3", 6, {}, {}};
  g.add.assign(6, std::vector<int>(6));
  g.neg.resize(6);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[b][perms[a][x]];
      g.add[a][b] = index_of(comp);
    }
    int inv[3];
    for (int x = 0; x < 3; ++x) inv[perms[a][x]] = x;
    g.neg[a] = index_of(inv);
  }
  return g;
}

}  // namespace gwa
