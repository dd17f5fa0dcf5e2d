#pragma once

#include <optional>
#include <string>

#include "igcount/graph.hpp"

namespace igcount {

// Initial/final choice vector; bit i is actor i's decision.
using DecisionVector = VertexSet;

// Generalized opinion leader-follower model (G, r, q): two-layered graph,
// fraction value r in [1/2, 1], quota q in (0, n].
struct GolfModel {
  GolfModel(InfluenceGraph graph, Rational r, int quota);

  InfluenceGraph graph;
  Rational r;
  int quota;
  ActorPartition partition;
};

// Influence game (G, f, q, N): coalition X wins iff |F(X ∩ N)| >= q.
// Zero labels are permitted here; the decision models reject them.
struct InfluenceGame {
  InfluenceGame(InfluenceGraph graph, int quota, VertexSet players);

  bool is_winning(const VertexSet& coalition) const;

  InfluenceGraph graph;
  int quota;
  VertexSet players;
};

/// Final decision vector of a gOLF: followers flip with the ceil(r * indeg)
/// rule, everyone else keeps their bit.
DecisionVector golf_final_decision(const GolfModel& m, const DecisionVector& x);

/// 1 iff the final vector has at least q ones.
bool golf_collective_decision(const GolfModel& m, const DecisionVector& x);

/// r = 1/2 and every follower has odd in-degree (no ties can arise).
bool is_odd_olf(const GolfModel& m);

/// The influence game (G, f, q, L ∪ I) with f = ceil(r * indeg) on followers
/// and 1 elsewhere.
InfluenceGame golf_to_influence_game(const GolfModel& m);

/// Oblivious collective decision: |F(X(x) ∩ N)| >= q. Requires positive
/// labels.
bool oblivious_decision(const InfluenceGame& game, const DecisionVector& x);

/// Non-oblivious final vector: players take the indicator of F(X(x) ∩ N);
/// non-players follow the p_i/q_i threshold rule with ties keeping x_i.
DecisionVector nonoblivious_final_decision(const InfluenceGame& game,
                                           const DecisionVector& x);

/// 1 iff the non-oblivious final vector has at least q ones.
bool nonoblivious_decision(const InfluenceGame& game, const DecisionVector& x);

/// True when some player has predecessors, i.e. the restriction of the
/// spread seed to N is observable in the player rule. Surfaced as a
/// diagnostic in `recognize` output.
bool players_have_predecessors(const InfluenceGame& game);

enum class ModelKind { golf, oblivious, nonoblivious };

std::string model_kind_name(ModelKind kind);

// A collective decision-making model: a gOLF, or an influence game read
// obliviously / non-obliviously. Construction validates the model
// requirements (positive labels for the influence kinds).
class DecisionModel {
 public:
  static DecisionModel golf(GolfModel m);
  static DecisionModel oblivious(InfluenceGame g);
  static DecisionModel nonoblivious(InfluenceGame g);

  ModelKind kind() const { return kind_; }
  int actor_count() const;
  const InfluenceGraph& graph() const;
  const GolfModel& golf_model() const;
  const InfluenceGame& game() const;

  bool decide(const DecisionVector& x) const;

  /// Final vector; for the oblivious kind this is the indicator of
  /// F(X(x) ∩ N).
  DecisionVector final_vector(const DecisionVector& x) const;

  /// The model translated to a non-oblivious (or, for odd-OLF, oblivious)
  /// influence game when it is a gOLF; identity otherwise.
  DecisionModel as_influence_model() const;

 private:
  DecisionModel(ModelKind kind, std::optional<GolfModel> m,
                std::optional<InfluenceGame> g)
      : kind_(kind), golf_(std::move(m)), game_(std::move(g)) {}

  ModelKind kind_;
  std::optional<GolfModel> golf_;
  std::optional<InfluenceGame> game_;
};

}  // namespace igcount
