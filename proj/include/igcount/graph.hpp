#pragma once

#include <utility>
#include <vector>

#include "igcount/bitset.hpp"
#include "igcount/rational.hpp"

namespace igcount {

using Arc = std::pair<int, int>;

// Leaders have successors only, followers predecessors only, independents
// neither. Defined for two-layered bipartite graphs.
struct ActorPartition {
  VertexSet leaders;
  VertexSet followers;
  VertexSet independents;
};

// Directed graph with a non-negative rational activation label per vertex.
// Validation (loops, duplicate arcs, dangling endpoints, negative labels)
// happens once at construction; all queries afterwards are O(1)/O(words).
class InfluenceGraph {
 public:
  InfluenceGraph(int n, std::vector<Arc> arcs, std::vector<Rational> labels);

  /// I_a: a isolated vertices with the given labels.
  static InfluenceGraph isolated(std::vector<Rational> labels);

  int vertex_count() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Rational>& labels() const { return labels_; }
  const Rational& label(int v) const { return labels_.at(check(v)); }

  /// Integer activation threshold: fewest active predecessors that reach
  /// the label. 0 for zero labels (the vertex self-activates).
  int threshold(int v) const { return thresholds_[check(v)]; }

  const VertexSet& predecessors(int v) const { return preds_[check(v)]; }
  const VertexSet& successors(int v) const { return succs_[check(v)]; }
  int in_degree(int v) const { return preds_[check(v)].count(); }
  int out_degree(int v) const { return succs_[check(v)].count(); }
  bool has_positive_labels() const { return positive_labels_; }

  /// Linear-threshold spread: fixpoint of adding every vertex whose active
  /// predecessor count reaches its label. Deterministic; stabilizes within
  /// n rounds.
  VertexSet spread(const VertexSet& seed) const;

  /// Activation trace F^0, F^1, ..., ending at the first fixpoint.
  std::vector<VertexSet> spread_rounds(const VertexSet& seed) const;

  /// Successors of v that depend on v alone: in-degree 1 and label 1.
  VertexSet directly_dependent_followers(int v) const;

  /// -1 when two-layered, else a vertex with both predecessors and
  /// successors.
  int two_layered_violation() const;
  bool is_two_layered() const { return two_layered_violation() < 0; }

  /// Partition into leaders / followers / independents. Requires the graph
  /// to be two-layered.
  ActorPartition classify_actors() const;

  /// Structural player set of layered games: vertices with no predecessors
  /// (leaders and independents).
  VertexSet sources() const;

  /// Copy with one label replaced.
  InfluenceGraph with_label(int v, const Rational& value) const;

 private:
  int check(int v) const {
    if (v < 0 || v >= n_)
      throw InputError("unknown vertex id " + std::to_string(v));
    return v;
  }

  int n_;
  std::vector<Arc> arcs_;
  std::vector<Rational> labels_;
  std::vector<int> thresholds_;
  std::vector<VertexSet> preds_;
  std::vector<VertexSet> succs_;
  bool positive_labels_;
};

}  // namespace igcount
