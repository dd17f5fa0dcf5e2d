#pragma once

#include <optional>
#include <string>
#include <vector>

#include "igcount/models.hpp"

namespace igcount {

// Witness tree for strong hierarchical structure: isolated-vertex leaves,
// disjoint unions, and complete one-layer extensions. Rebuilding the graph
// from the tree reproduces the input arc set exactly.
struct HierarchicalDecomposition {
  enum class Kind { leaf, disjoint_union, extend };

  struct Node {
    Kind kind;
    std::vector<int> verts;  // leaf vertices, or the extended layer
    int left = -1;           // union child / extend subtree
    int right = -1;          // union child
  };

  std::vector<Node> nodes;
  int root = -1;
  int n = 0;
  std::vector<Rational> labels;  // indexed by original vertex id

  /// Leaf vertices of the whole tree: the structural player set L ∪ I.
  VertexSet leaf_vertices() const;
};

/// Decompose, or explain why the graph is not strong hierarchical. The
/// certificate names an offending vertex or arc.
std::optional<HierarchicalDecomposition> try_decompose(const InfluenceGraph& g,
                                                       std::string* why);

/// Throwing form of try_decompose.
HierarchicalDecomposition decompose(const InfluenceGraph& g);

/// Rebuild the influence graph from the witness tree.
InfluenceGraph reconstruct(const HierarchicalDecomposition& d);

// Dense table of counts indexed by (a, b): a ranges over activated-set
// sizes 0..n, b over activated final-layer sizes 0..|FI|.
struct CountTable {
  CountTable(int max_a, int max_b)
      : max_a(max_a), max_b(max_b),
        cells(std::size_t(max_a + 1) * (max_b + 1), Big(0)) {}

  Big& at(int a, int b) { return cells[std::size_t(a) * (max_b + 1) + b]; }
  const Big& at(int a, int b) const {
    return cells[std::size_t(a) * (max_b + 1) + b];
  }

  Big row_sum(int a) const;
  Big total() const;

  int max_a;
  int max_b;
  std::vector<Big> cells;
};

/// T(a, b) = |{X ⊆ N : |F(X)| = a, |F(X) ∩ FI| = b}| with N the leaf
/// vertices, computed bottom-up along the decomposition.
CountTable expansion_table(const HierarchicalDecomposition& d);

/// |F_k(N)| over all of 2^V: 2^(n-|N|) * Σ_b T(k, b).
Big expansion_count(const HierarchicalDecomposition& d, int k);
std::vector<Big> expansion_counts_all(const HierarchicalDecomposition& d,
                                      bool trace_level = false);

// A vertex-deleted construction together with the dense renumbering.
struct ReducedGraph {
  InfluenceGraph graph;
  std::vector<int> original_ids;  // new id -> old id, -1 for fresh vertices
  std::vector<int> image;         // old id -> new id, -1 if deleted
};

/// Delete i and its directly dependent followers; decrement the labels of
/// i's remaining successors (floored at 0).
ReducedGraph reduce_graph_R(const InfluenceGraph& g, int i);

/// Keep i, delete its directly dependent followers, attach 2n fresh label-1
/// sinks to i, decrement the labels of i's remaining successors.
ReducedGraph reduce_graph_R2(const InfluenceGraph& g, int i);

/// Exact satisfaction of an actor in the oblivious model over a strong
/// hierarchical game (players = L ∪ I).
Big sat_oblivious_hierarchical(const InfluenceGame& game, int actor);

/// Exact satisfaction in the non-oblivious model, via the S/S0/S1 table
/// recursion along the decomposition. Requires positive labels.
Big sat_nonoblivious_hierarchical(const InfluenceGame& game, int actor);

// Internal-but-tested generalization: trace-level expansion buckets over an
// explicit player subset of the leaf vertices, with the stored labels
// replaced by `labels`. Demoted leaf vertices are inert; zero labels
// self-activate.
std::vector<Big> hierarchical_trace_buckets(const HierarchicalDecomposition& d,
                                            const std::vector<Rational>& labels,
                                            const VertexSet& players);

/// Root S0/S1 tables of the non-oblivious recursion for one actor; the
/// final aggregation sums S0 below the quota and S1 at or above it.
std::pair<CountTable, CountTable> nonoblivious_root_tables(
    const InfluenceGame& game, int actor);

}  // namespace igcount
