#include "igcount/models.hpp"

namespace igcount {

GolfModel::GolfModel(InfluenceGraph g, Rational r_, int q)
    : graph(std::move(g)), r(r_), quota(q), partition(graph.classify_actors()) {
  // r < 1/2 would be equivalent to demoting followers to independents; we
  // refuse to rewrite inputs silently.
  if (r < Rational(1, 2) || r > Rational(1))
    throw ModelError("gOLF: fraction value " + r.str() +
                     " outside [1/2, 1]");
  if (quota <= 0 || quota > graph.vertex_count())
    throw ModelError("gOLF: quota " + std::to_string(quota) +
                     " outside (0, n]");
}

InfluenceGame::InfluenceGame(InfluenceGraph g, int q, VertexSet n)
    : graph(std::move(g)), quota(q), players(std::move(n)) {
  if (players.universe() != graph.vertex_count())
    throw InputError("influence game: player set universe mismatch");
  if (quota < 0 || quota > graph.vertex_count())
    throw ModelError("influence game: quota " + std::to_string(quota) +
                     " outside [0, n]");
}

bool InfluenceGame::is_winning(const VertexSet& coalition) const {
  return graph.spread(coalition & players).count() >= quota;
}

static void check_dimension(const InfluenceGraph& g, const DecisionVector& x) {
  if (x.universe() != g.vertex_count())
    throw InputError("decision vector has " + std::to_string(x.universe()) +
                     " bits, model has " + std::to_string(g.vertex_count()) +
                     " actors");
}

DecisionVector golf_final_decision(const GolfModel& m,
                                   const DecisionVector& x) {
  check_dimension(m.graph, x);
  int n = m.graph.vertex_count();
  DecisionVector c = x;
  for (int i = 0; i < n; ++i) {
    int indeg = m.graph.in_degree(i);
    if (indeg == 0) continue;  // leaders and independents keep their bit
    std::int64_t need = m.r.ceil_mul(indeg);
    int yes = m.graph.predecessors(i).intersection_count(x);
    int no = indeg - yes;
    if (yes >= need && no < need)
      c.set(i);
    else if (no >= need && yes < need)
      c.reset(i);
  }
  return c;
}

bool golf_collective_decision(const GolfModel& m, const DecisionVector& x) {
  return golf_final_decision(m, x).count() >= m.quota;
}

bool is_odd_olf(const GolfModel& m) {
  if (m.r != Rational(1, 2)) return false;
  for (int i : m.partition.followers.to_vector())
    if (m.graph.in_degree(i) % 2 == 0) return false;
  return true;
}

InfluenceGame golf_to_influence_game(const GolfModel& m) {
  int n = m.graph.vertex_count();
  std::vector<Rational> labels(n, Rational(1));
  for (int i : m.partition.followers.to_vector())
    labels[i] = Rational(m.r.ceil_mul(m.graph.in_degree(i)));
  VertexSet players = m.partition.leaders | m.partition.independents;
  return InfluenceGame(InfluenceGraph(n, m.graph.arcs(), std::move(labels)),
                       m.quota, std::move(players));
}

static void require_positive_labels(const InfluenceGame& game,
                                    const char* model) {
  if (!game.graph.has_positive_labels())
    throw ModelError(std::string(model) +
                     " model requires positive labels on every actor");
}

bool oblivious_decision(const InfluenceGame& game, const DecisionVector& x) {
  require_positive_labels(game, "oblivious");
  check_dimension(game.graph, x);
  return game.graph.spread(x & game.players).count() >= game.quota;
}

DecisionVector nonoblivious_final_decision(const InfluenceGame& game,
                                           const DecisionVector& x) {
  require_positive_labels(game, "non-oblivious");
  check_dimension(game.graph, x);
  int n = game.graph.vertex_count();
  VertexSet active = game.graph.spread(x & game.players);
  DecisionVector c(n);
  for (int i = 0; i < n; ++i) {
    if (game.players.test(i)) {
      c.assign(i, active.test(i));
      continue;
    }
    const Rational& f = game.graph.label(i);
    Rational p(game.graph.predecessors(i).intersection_count(active));
    Rational q(game.graph.in_degree(i) - p.num());
    if (p >= f && q < f)
      c.set(i);
    else if (q >= f && p < f)
      c.reset(i);
    else
      c.assign(i, x.test(i));
  }
  return c;
}

bool nonoblivious_decision(const InfluenceGame& game, const DecisionVector& x) {
  return nonoblivious_final_decision(game, x).count() >= game.quota;
}

bool players_have_predecessors(const InfluenceGame& game) {
  for (int i : game.players.to_vector())
    if (game.graph.in_degree(i) > 0) return true;
  return false;
}

std::string model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::golf:
      return "golf";
    case ModelKind::oblivious:
      return "oblivious";
    case ModelKind::nonoblivious:
      return "nonoblivious";
  }
  return "?";
}

DecisionModel DecisionModel::golf(GolfModel m) {
  return DecisionModel(ModelKind::golf, std::move(m), std::nullopt);
}

DecisionModel DecisionModel::oblivious(InfluenceGame g) {
  require_positive_labels(g, "oblivious");
  return DecisionModel(ModelKind::oblivious, std::nullopt, std::move(g));
}

DecisionModel DecisionModel::nonoblivious(InfluenceGame g) {
  require_positive_labels(g, "non-oblivious");
  return DecisionModel(ModelKind::nonoblivious, std::nullopt, std::move(g));
}

int DecisionModel::actor_count() const { return graph().vertex_count(); }

const InfluenceGraph& DecisionModel::graph() const {
  return kind_ == ModelKind::golf ? golf_->graph : game_->graph;
}

const GolfModel& DecisionModel::golf_model() const {
  if (kind_ != ModelKind::golf) throw InputError("model is not a gOLF");
  return *golf_;
}

const InfluenceGame& DecisionModel::game() const {
  if (kind_ == ModelKind::golf)
    throw InputError("model is a gOLF, not an influence game");
  return *game_;
}

bool DecisionModel::decide(const DecisionVector& x) const {
  switch (kind_) {
    case ModelKind::golf:
      return golf_collective_decision(*golf_, x);
    case ModelKind::oblivious:
      return oblivious_decision(*game_, x);
    case ModelKind::nonoblivious:
      return nonoblivious_decision(*game_, x);
  }
  return false;
}

DecisionVector DecisionModel::final_vector(const DecisionVector& x) const {
  switch (kind_) {
    case ModelKind::golf:
      return golf_final_decision(*golf_, x);
    case ModelKind::oblivious: {
      check_dimension(game_->graph, x);
      return game_->graph.spread(x & game_->players);
    }
    case ModelKind::nonoblivious:
      return nonoblivious_final_decision(*game_, x);
  }
  return x;
}

DecisionModel DecisionModel::as_influence_model() const {
  if (kind_ != ModelKind::golf) return *this;
  return nonoblivious(golf_to_influence_game(*golf_));
}

}  // namespace igcount
