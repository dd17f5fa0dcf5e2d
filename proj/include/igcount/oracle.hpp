#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "igcount/models.hpp"

namespace igcount {

// Exhaustive ground truth for every polynomial algorithm in the library.
// All routines refuse instances above the cap (default 2^24 evaluations).

inline constexpr int kDefaultCap = 24;

/// Number of initial decision vectors x with C(x) = x_i, by enumerating all
/// 2^n vectors.
Big satisfaction_bruteforce(const DecisionModel& model, int actor,
                            int cap = kDefaultCap);

/// One pass over all 2^n vectors, every actor at once.
std::vector<Big> satisfaction_bruteforce_all(const DecisionModel& model,
                                             int cap = kDefaultCap);

/// Same totals, summed over `parts` disjoint enumeration ranges. The result
/// is independent of the partitioning; used to pin down the concurrency
/// contract.
std::vector<Big> satisfaction_bruteforce_partitioned(const DecisionModel& model,
                                                     int parts,
                                                     int cap = kDefaultCap);

/// Expansion buckets |F_k(N)| for k = 0..n. Trace level counts initial sets
/// X ⊆ N; the full count multiplies by 2^(n-|N|) for the free bits of V∖N.
std::vector<Big> expansion_bruteforce_all(const InfluenceGraph& g,
                                          const VertexSet& players,
                                          bool trace_level = false,
                                          int cap = kDefaultCap);

Big expansion_bruteforce(const InfluenceGraph& g, const VertexSet& players,
                         int k, bool trace_level = false,
                         int cap = kDefaultCap);

/// Rae index of a player over coalitions X ⊆ N:
/// |{X winning, i ∈ X}| + |{X losing, i ∉ X}|.
Big rae_index(const InfluenceGame& game, int player, int cap = kDefaultCap);

/// Banzhaf value: |{X ⊆ N winning with X∖{i} losing}|.
Big banzhaf_value(const InfluenceGame& game, int player, int cap = kDefaultCap);

/// (|W|, |L|) over all X ⊆ V, |W| + |L| = 2^n.
std::pair<Big, Big> winning_losing_counts(const InfluenceGame& game,
                                          int cap = kDefaultCap);

// Predicate form of a simple game: `winning` maps a subset of `players`
// (given as a member bitmask over the id list) to win/lose. Decision models
// induce one on the full actor set; influence games on N. The family is
// never materialized.
struct PredicateGame {
  std::vector<int> players;
  std::function<bool(const VertexSet&)> winning;
  int universe;
};

/// The simple game of a monotonic decision model on the full actor set.
PredicateGame associated_simple_game(const DecisionModel& model);

Big rae_index(const PredicateGame& game, int player, int cap = kDefaultCap);
Big banzhaf_value(const PredicateGame& game, int player, int cap = kDefaultCap);

}  // namespace igcount
