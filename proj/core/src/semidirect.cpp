#include "gwa/semidirect.hpp"

#include <algorithm>

namespace gwa {

SemidirectCandidate build_semidirect(const FiniteGwa& b, const FiniteGwa& a,
                                     const ActionTriple& t) {
  check_shape(t);
  if (t.actor.order != b.order || t.target.order != a.order) {
    throw structural_error("build_semidirect: triple dimensions do not match");
  }
  SemidirectCandidate c{b, a, t, {}, false};
  const int na = a.order;
  const int nb = b.order;
  const int n = na * nb;
  FiniteGwa& p = c.product;
  p.name = b.name + "⋉" + a.name;
  p.order = n;
  p.add.assign(n, std::vector<int>(n));
  p.neg.resize(n);
  p.act.assign(n, std::vector<int>(n));
  for (int b1 = 0; b1 < nb; ++b1) {
    for (int a1 = 0; a1 < na; ++a1) {
      const int x = c.pair_index(b1, a1);
      // -(b,a) = (-b, (-b).(-a)); whether this is a genuine inverse is
      // decided by validation, not assumed here.
      p.neg[x] = c.pair_index(b.neg[b1], t.dot[b.neg[b1]][a.neg[a1]]);
      for (int b2 = 0; b2 < nb; ++b2) {
        for (int a2 = 0; a2 < na; ++a2) {
          const int y = c.pair_index(b2, a2);
          p.add[x][y] = c.pair_index(b.add[b1][b2], a.add[a1][t.dot[b1][a2]]);
          // (b^{b'}, (a^{a'})^{b'} + (b^{a'})^{b'})
          const int left = t.star[a.act[a1][a2]][b2];
          const int right = t.star[t.dual[b1][a2]][b2];
          p.act[x][y] = c.pair_index(b.act[b1][b2], a.add[left][right]);
        }
      }
    }
  }
  return c;
}

CheckReport validate_candidate(const SemidirectCandidate& c, bool reduced_mode,
                               const CheckOptions& opt) {
  CheckReport r = validate_gwa(c.product, opt);
  if (reduced_mode) {
    if (!(opt.early_exit && !r.ok())) r.merge(is_reduced(c.product, opt));
  }
  return r;
}

namespace {

GwaMorphism make_morphism(const FiniteGwa& src, const FiniteGwa& dst,
                          std::vector<int> map) {
  return GwaMorphism{src, dst, std::move(map)};
}

}  // namespace

SplitExtension canonical_split_extension(const SemidirectCandidate& c) {
  const CheckOptions fast{.witness_cap = 1, .early_exit = true};
  if (!validate_candidate(c, false, fast).ok()) {
    throw structural_error("canonical_split_extension: candidate invalid");
  }
  const int na = c.target.order;
  const int nb = c.actor.order;
  std::vector<int> i_map(na), p_map(na * nb), j_map(nb);
  for (int a = 0; a < na; ++a) i_map[a] = c.pair_index(0, a);
  for (int x = 0; x < na * nb; ++x) p_map[x] = c.b_of(x);
  for (int b = 0; b < nb; ++b) j_map[b] = c.pair_index(b, 0);
  SplitExtension x{c.target, c.product, c.actor,
                   make_morphism(c.target, c.product, std::move(i_map)),
                   make_morphism(c.product, c.actor, std::move(p_map)),
                   make_morphism(c.actor, c.product, std::move(j_map))};
  CheckReport invariants = verify_split_extension(x, fast);
  if (!invariants.ok()) {
    throw structural_error("canonical_split_extension: invariants broken: " +
                           invariants.violations().front().law);
  }
  return x;
}

CheckReport verify_split_extension(const SplitExtension& x, const CheckOptions& opt) {
  CheckReport r;
  r.merge(is_morphism(x.i, opt));
  if (opt.early_exit && !r.ok()) return r;
  r.merge(is_morphism(x.p, opt));
  if (opt.early_exit && !r.ok()) return r;
  r.merge(is_morphism(x.j, opt));
  if (opt.early_exit && !r.ok()) return r;

  for (int b = 0; b < x.b.order; ++b) {
    if (x.p.map[x.j.map[b]] != b) {
      r.record("section", {b}, opt.witness_cap);
      if (opt.early_exit) return r;
    }
  }
  std::vector<char> hit(x.b.order, 0);
  for (int e = 0; e < x.e.order; ++e) hit[x.p.map[e]] = 1;
  for (int b = 0; b < x.b.order; ++b) {
    if (!hit[b]) {
      r.record("p-surjective", {b}, opt.witness_cap);
      if (opt.early_exit) return r;
    }
  }
  std::vector<char> image(x.e.order, 0);
  for (int a = 0; a < x.a.order; ++a) {
    if (image[x.i.map[a]]) {
      r.record("i-injective", {a}, opt.witness_cap);
      if (opt.early_exit) return r;
    }
    image[x.i.map[a]] = 1;
  }
  for (int e = 0; e < x.e.order; ++e) {
    const bool in_kernel = x.p.map[e] == 0;
    if (in_kernel != (image[e] != 0)) {
      r.record("image-equals-kernel", {e}, opt.witness_cap);
      if (opt.early_exit) return r;
    }
  }
  return r;
}

ActionTriple extract_derived_actions(const SplitExtension& x) {
  const CheckOptions fast{.witness_cap = 1, .early_exit = true};
  CheckReport invariants = verify_split_extension(x, fast);
  if (!invariants.ok()) {
    throw structural_error("extract_derived_actions: invalid extension: " +
                           invariants.violations().front().law);
  }
  const int na = x.a.order;
  const int nb = x.b.order;
  // Preimage of i. i is injective onto the kernel of p.
  std::vector<int> pull(x.e.order, -1);
  for (int a = 0; a < na; ++a) pull[x.i.map[a]] = a;
  auto pullback = [&](int e, const char* what) {
    if (pull[e] < 0) {
      throw structural_error(std::string("extract_derived_actions: ") + what +
                             " not in image of i");
    }
    return pull[e];
  };
  ActionTriple t{x.b, x.a, Table(nb, std::vector<int>(na)),
                 Table(na, std::vector<int>(nb)), Table(nb, std::vector<int>(na))};
  const FiniteGwa& e = x.e;
  for (int b = 0; b < nb; ++b) {
    const int jb = x.j.map[b];
    for (int a = 0; a < na; ++a) {
      const int ia = x.i.map[a];
      // b.a = j(b) + a - j(b)
      t.dot[b][a] = pullback(e.add[e.add[jb][ia]][e.neg[jb]], "j(b)+a-j(b)");
      // b^a = j(b)^a - j(b)
      t.dual[b][a] = pullback(e.add[e.act[jb][ia]][e.neg[jb]], "j(b)^a-j(b)");
      // a^b = a^{j(b)}
      t.star[a][b] = pullback(e.act[ia][jb], "a^{j(b)}");
    }
  }
  return t;
}

CheckReport roundtrip_check(const FiniteGwa& b, const FiniteGwa& a,
                            const ActionTriple& t, const CheckOptions& opt) {
  SemidirectCandidate c = build_semidirect(b, a, t);
  ActionTriple back = extract_derived_actions(canonical_split_extension(c));
  CheckReport r;
  for (int x = 0; x < b.order; ++x) {
    for (int y = 0; y < a.order; ++y) {
      if (back.dot[x][y] != t.dot[x][y]) {
        r.record("roundtrip-dot", {x, y}, opt.witness_cap);
        if (opt.early_exit) return r;
      }
      if (back.dual[x][y] != t.dual[x][y]) {
        r.record("roundtrip-dual", {x, y}, opt.witness_cap);
        if (opt.early_exit) return r;
      }
      if (back.star[y][x] != t.star[y][x]) {
        r.record("roundtrip-star", {y, x}, opt.witness_cap);
        if (opt.early_exit) return r;
      }
    }
  }
  return r;
}

}  // namespace gwa
