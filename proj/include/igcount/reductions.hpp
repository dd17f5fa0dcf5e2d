#pragma once

#include <string>
#include <vector>

#include "igcount/hierarchy.hpp"
#include "igcount/models.hpp"

namespace igcount {

// Undirected simple graph used as a vertex-cover counting instance.
struct VCInstance {
  VCInstance(int n, std::vector<Arc> edges);

  bool is_connected() const;

  int n;
  std::vector<Arc> edges;  // stored with u < v, deduplicated
};

/// Parse `u v` pairs, one edge per line; '#' starts a comment.
VCInstance parse_edge_list(const std::string& text);

// Two-layered gadget whose expansion bucket at `k` counts the size-(2n/3)
// vertex covers of the source graph. Inputs below the faithful range are
// still built, with machine-readable warnings attached.
struct GadgetResult {
  InfluenceGraph graph;
  VertexSet players;  // V ∪ {z}
  int k;
  std::vector<std::string> warnings;
};

GadgetResult vc_gadget(const VCInstance& g);

/// Exact count of vertex covers of the given size, by enumeration.
Big count_vertex_covers(const VCInstance& g, int size, int cap = 24);

// Expansion instance recast as a satisfaction instance: a fresh isolated
// label-1 probe z joins the player set and the quota becomes k+1; then
// Sat(z) = 2^n + 2^(n-|N|) * |trace F_k(N)|.
struct SatisfactionInstance {
  InfluenceGame game;
  int probe;
};

SatisfactionInstance expansion_to_satisfaction(const InfluenceGraph& g,
                                               const VertexSet& players, int k);

/// The right-hand side of the identity above.
Big satisfaction_identity_value(const InfluenceGraph& g,
                                const VertexSet& players, int k, int cap = 24);

}  // namespace igcount
