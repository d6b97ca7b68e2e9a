#include "gwa/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include <json.hpp>

#include "gwa/semidirect.hpp"

namespace gwa {

namespace {

using Endo = std::vector<int>;

// All additive endomorphisms of g, found by DFS with incremental
// homomorphism checks.
std::vector<Endo> endomorphisms(const GroupTable& g) {
  const int n = g.order;
  std::vector<Endo> out;
  Endo f(n, -1);
  f[0] = 0;
  auto consistent = [&](int x) {
    for (int u = 0; u < n; ++u) {
      if (f[u] < 0) continue;
      const int ux = g.add[u][x];
      const int xu = g.add[x][u];
      if (f[ux] >= 0 && f[ux] != g.add[f[u]][f[x]]) return false;
      if (f[xu] >= 0 && f[xu] != g.add[f[x]][f[u]]) return false;
    }
    return true;
  };
  std::function<void(int)> dfs = [&](int x) {
    while (x < n && f[x] >= 0) ++x;
    if (x == n) {
      out.push_back(f);
      return;
    }
    for (int v = 0; v < n; ++v) {
      f[x] = v;
      if (consistent(x)) dfs(x + 1);
      f[x] = -1;
    }
  };
  dfs(1);
  return out;
}

FiniteGwa from_columns(const GroupTable& g, const std::vector<const Endo*>& col) {
  FiniteGwa out{g.name, g.order, g.add, g.neg, {}};
  out.act.assign(g.order, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x) {
    for (int h = 0; h < g.order; ++h) out.act[x][h] = (*col[h])[x];
  }
  return out;
}

}  // namespace

std::vector<FiniteGwa> enumerate_self_actions(const GroupTable& g) {
  check_shape(g);
  const int n = g.order;
  const std::vector<Endo> endos = endomorphisms(g);
  Endo identity(n);
  for (int x = 0; x < n; ++x) identity[x] = x;

  std::vector<const Endo*> col(n, nullptr);
  col[0] = &identity;  // g^0 = g
  std::vector<FiniteGwa> out;

  // col(h + h') must equal col(h') after col(h).
  auto compatible = [&](int h) {
    for (int h2 = 0; h2 < n; ++h2) {
      if (!col[h2]) continue;
      for (auto [x, y] : {std::pair{h, h2}, std::pair{h2, h}}) {
        const int sum = g.add[x][y];
        if (!col[sum]) continue;
        for (int v = 0; v < n; ++v) {
          if ((*col[sum])[v] != (*col[y])[(*col[x])[v]]) return false;
        }
      }
    }
    return true;
  };
  std::function<void(int)> dfs = [&](int h) {
    while (h < n && col[h]) ++h;
    if (h == n) {
      out.push_back(from_columns(g, col));
      return;
    }
    for (const Endo& e : endos) {
      col[h] = &e;
      if (compatible(h)) dfs(h + 1);
      col[h] = nullptr;
    }
  };
  dfs(1);
  std::sort(out.begin(), out.end(),
            [](const FiniteGwa& x, const FiniteGwa& y) { return x.act < y.act; });
  return out;
}

std::vector<FiniteGwa> enumerate_self_actions_brute(const GroupTable& g) {
  check_shape(g);
  const int n = g.order;
  FiniteGwa cand{g.name, n, g.add, g.neg, Table(n, std::vector<int>(n, 0))};
  std::vector<FiniteGwa> out;
  const CheckOptions fast{.witness_cap = 1, .early_exit = true};
  for (;;) {
    if (validate_self_action(cand, fast).ok()) out.push_back(cand);
    int r = n - 1, c = n - 1;
    for (;;) {
      if (++cand.act[r][c] < n) break;
      cand.act[r][c] = 0;
      if (--c < 0) {
        c = n - 1;
        --r;
      }
      if (r < 0) return out;
    }
  }
}

std::optional<std::uint64_t> triple_space_size(const FiniteGwa& b, const FiniteGwa& a) {
  const std::uint64_t base = static_cast<std::uint64_t>(a.order);
  const std::uint64_t digits =
      3ull * static_cast<std::uint64_t>(a.order) * static_cast<std::uint64_t>(b.order);
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < digits; ++i) {
    if (total > std::uint64_t{1} << 62) return std::nullopt;
    total *= base;
    if (base > 1 && total == 0) return std::nullopt;
  }
  return total;
}

namespace {

ActionTriple blank_triple(const FiniteGwa& b, const FiniteGwa& a) {
  return ActionTriple{b, a, Table(b.order, std::vector<int>(a.order, 0)),
                      Table(a.order, std::vector<int>(b.order, 0)),
                      Table(b.order, std::vector<int>(a.order, 0))};
}

}  // namespace

std::uint64_t for_each_triple(const FiniteGwa& b, const FiniteGwa& a,
                              const TripleFilter& filter,
                              const std::function<void(const ActionTriple&)>& visit) {
  ActionTriple t = blank_triple(b, a);
  // Free digit positions in odometer order; filtered laws pin entries.
  std::vector<int*> digits;
  for (int x = 0; x < b.order; ++x) {
    for (int y = 0; y < a.order; ++y) {
      if (filter.dot_unit && x == 0) {
        t.dot[x][y] = y;  // 0.a = a
      } else {
        digits.push_back(&t.dot[x][y]);
      }
    }
  }
  for (int y = 0; y < a.order; ++y) {
    for (int x = 0; x < b.order; ++x) {
      if (filter.star_unit && x == 0) {
        t.star[y][x] = y;  // a^{0_B} = a
      } else {
        digits.push_back(&t.star[y][x]);
      }
    }
  }
  for (int x = 0; x < b.order; ++x) {
    for (int y = 0; y < a.order; ++y) digits.push_back(&t.dual[x][y]);
  }
  const int base = a.order;
  std::uint64_t count = 0;
  for (;;) {
    visit(t);
    ++count;
    int k = static_cast<int>(digits.size()) - 1;
    for (; k >= 0; --k) {
      if (++*digits[k] < base) break;
      *digits[k] = 0;
    }
    if (k < 0) return count;
  }
}

std::uint64_t for_each_sampled_triple(const FiniteGwa& b, const FiniteGwa& a,
                                      std::uint64_t seed, std::uint64_t count,
                                      const std::function<void(const ActionTriple&)>& visit) {
  ActionTriple t = blank_triple(b, a);
  std::mt19937_64 rng(seed);
  const auto base = static_cast<std::uint64_t>(a.order);
  auto draw = [&] { return static_cast<int>(rng() % base); };
  for (std::uint64_t i = 0; i < count; ++i) {
    for (auto& row : t.dot)
      for (int& v : row) v = draw();
    for (auto& row : t.star)
      for (int& v : row) v = draw();
    for (auto& row : t.dual)
      for (int& v : row) v = draw();
    visit(t);
  }
  return count;
}

namespace {

std::string serialize_tables(const ActionTriple& t) {
  nlohmann::json j;
  j["dot"] = t.dot;
  j["star"] = t.star;
  j["dual"] = t.dual;
  return j.dump();
}

AuditSummary audit_impl(const FiniteGwa& b, const FiniteGwa& a, bool reduced,
                        const AuditOptions& opt) {
  check_shape(a);
  check_shape(b);
  const CheckOptions fast{.witness_cap = 1, .early_exit = true};
  if (reduced) {
    if (!is_reduced(b, fast).ok() || !is_reduced(a, fast).ok()) {
      throw structural_error("audit: input not reduced");
    }
  }
  AuditSummary summary;
  const auto start = std::chrono::steady_clock::now();
  auto evaluate = [&](const ActionTriple& t) {
    const bool derived = reduced ? is_derived_action_reduced(t, fast).ok()
                                 : is_derived_action(t, fast).ok();
    const bool product =
        validate_candidate(build_semidirect(b, a, t), reduced, fast).ok();
    ++summary.total;
    if (derived == product) {
      ++summary.agree;
    } else {
      summary.disagreements.push_back({serialize_tables(t), derived, product});
    }
  };
  const auto space = triple_space_size(b, a);
  if (space && *space <= opt.max_exhaustive) {
    for_each_triple(b, a, {}, evaluate);
  } else {
    summary.seed = opt.seed;
    for_each_sampled_triple(b, a, opt.seed, opt.samples, evaluate);
  }
  std::sort(summary.disagreements.begin(), summary.disagreements.end(),
            [](const Disagreement& x, const Disagreement& y) {
              return x.triple < y.triple;
            });
  summary.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  return summary;
}

}  // namespace

AuditSummary audit_theorem_3_3(const FiniteGwa& b, const FiniteGwa& a,
                               const AuditOptions& opt) {
  return audit_impl(b, a, false, opt);
}

AuditSummary audit_theorem_4_3(const FiniteGwa& b, const FiniteGwa& a,
                               const AuditOptions& opt) {
  return audit_impl(b, a, true, opt);
}

std::vector<SubsetMask> enumerate_ideals(const FiniteGwa& g) {
  check_shape(g);
  if (g.order > 24) throw structural_error("enumerate_ideals: carrier too large");
  const CheckOptions fast{.witness_cap = 1, .early_exit = true};
  std::vector<SubsetMask> out;
  const std::uint64_t free_bits = std::uint64_t{1} << (g.order - 1);
  for (std::uint64_t bits = 0; bits < free_bits; ++bits) {
    SubsetMask s{g, std::vector<char>(g.order, 0)};
    s.members[0] = 1;
    for (int i = 1; i < g.order; ++i) {
      if (bits >> (i - 1) & 1) s.members[i] = 1;
    }
    if (is_ideal(s, fast).ok()) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const SubsetMask& x, const SubsetMask& y) {
    const int px = x.popcount(), py = y.popcount();
    if (px != py) return px < py;
    return x.indices() < y.indices();
  });
  return out;
}

}  // namespace gwa
