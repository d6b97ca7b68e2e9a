#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gwa/actions.hpp"
#include "gwa/algebra.hpp"
#include "gwa/ideals.hpp"

namespace gwa {

/// All self-actions on the given group, i.e. every act table satisfying the
/// three action axioms, sorted lexicographically by the flattened table.
/// Pruned search: column 0 is forced to the identity, every other column
/// must be an additive endomorphism, and the composition rule
/// col(h+h') = col(h') . col(h) prunes partial assignments.
std::vector<FiniteGwa> enumerate_self_actions(const GroupTable& g);

/// Unpruned oracle: filters all n^(n*n) tables through validate_self_action.
/// Only usable at tiny orders; kept to cross-check the pruned search.
std::vector<FiniteGwa> enumerate_self_actions_brute(const GroupTable& g);

/// Cheap pre-filter laws applied while enumerating triples.
struct TripleFilter {
  bool dot_unit = false;    // 0.a = a
  bool star_unit = false;   // a^{0_B} = a
};

/// Number of (dot, star, dual) table combinations for the pair (B, A).
/// Returns nullopt on overflow.
std::optional<std::uint64_t> triple_space_size(const FiniteGwa& b, const FiniteGwa& a);

/// Visits every triple in deterministic odometer order (dot, then star, then
/// dual; within a table the last entry varies fastest). The visited triple is
/// reused between calls. Returns the number of visited triples.
std::uint64_t for_each_triple(const FiniteGwa& b, const FiniteGwa& a,
                              const TripleFilter& filter,
                              const std::function<void(const ActionTriple&)>& visit);

/// Visits `count` pseudo-random triples drawn with the given seed.
std::uint64_t for_each_sampled_triple(const FiniteGwa& b, const FiniteGwa& a,
                                      std::uint64_t seed, std::uint64_t count,
                                      const std::function<void(const ActionTriple&)>& visit);

struct Disagreement {
  std::string triple;  // compact JSON of the three tables
  bool derived_side = false;
  bool product_side = false;
};

struct AuditSummary {
  std::uint64_t total = 0;
  std::uint64_t agree = 0;
  std::vector<Disagreement> disagreements;
  std::optional<std::uint64_t> seed;
  double elapsed_ms = 0.0;
};

struct AuditOptions {
  // Exhaust the space only when it has at most this many candidates;
  // otherwise draw `samples` seeded pseudo-random triples.
  std::uint64_t max_exhaustive = std::uint64_t{1} << 24;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
};

/// For every triple of B on A, compares is_derived_action against Gwa
/// validity of the semidirect product.
AuditSummary audit_theorem_3_3(const FiniteGwa& b, const FiniteGwa& a,
                               const AuditOptions& opt = {});

/// Reduced version: is_derived_action_reduced against rGwa validity. Both
/// inputs must pass is_reduced.
AuditSummary audit_theorem_4_3(const FiniteGwa& b, const FiniteGwa& a,
                               const AuditOptions& opt = {});

/// All subsets passing is_ideal, ascending by popcount then lexicographic by
/// member indices.
std::vector<SubsetMask> enumerate_ideals(const FiniteGwa& g);

}  // namespace gwa
