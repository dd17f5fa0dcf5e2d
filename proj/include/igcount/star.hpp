#pragma once

#include <optional>
#include <string>
#include <vector>

#include "igcount/models.hpp"

namespace igcount {

enum class StarClass {
  leader,       // arc to the center only
  independent,  // no arcs
  reciprocal,   // arcs both ways with the center
  follower,     // arc from the center only
  center,
  pendant,  // label-1 sink hanging off the extension reciprocal
};

std::string star_class_name(StarClass c);

// Raw shape certificate produced by the recognizer, before normalization.
struct StarLayout {
  int center = -1;
  std::vector<StarClass> cls;  // per vertex
  int ext_u = -1;              // reciprocal owning the pendants, -1 if none
};

/// Certify a graph as a (possibly extended) star: every arc touches the
/// center except pendant arcs from one reciprocal. Tries each vertex as
/// center; returns the first valid layout.
std::optional<StarLayout> recognize_star(const InfluenceGraph& g,
                                         std::string* why = nullptr);

// Normalized star game. Non-center labels are 0/1 (reciprocals with higher
// labels become leaders, followers with higher labels become inert), the
// center threshold is an integer clamped to [0, |L|+|R|+1]. Class counts
// split by label drive all closed-form counting.
struct StarGame {
  // label-1 / label-0 counts per class
  int l1 = 0, l0 = 0;
  int i1 = 0, i0 = 0;
  int r1 = 0, r0 = 0;
  int f1 = 0, f0 = 0;
  int inert = 0;  // followers whose label exceeds 1: never influenced
  int fc = 0;
  int quota = 0;

  bool has_ext = false;
  int fu = 0;       // pendant count
  int u_label = 1;  // label of the extension reciprocal

  // actor mapping back to graph ids
  std::vector<StarClass> cls;
  std::vector<bool> zero;      // normalized label is 0
  std::vector<bool> is_inert;  // follower with unreachable label
  int center = -1;
  int ext_u = -1;

  int n() const {
    return l1 + l0 + i1 + i0 + r1 + r0 + f1 + f0 + inert + fu + 1;
  }
  int player_count() const { return l1 + l0 + i1 + i0 + r1 + r0; }
  VertexSet players() const;
};

/// Normalize a recognized star: integer thresholds, label reclassification,
/// center clamp. Throws when a pendant owner cannot stay a reciprocal.
StarGame normalize_star(const InfluenceGraph& g, const StarLayout& layout,
                        int quota);

/// Convenience: recognize + normalize, or explain failure.
std::optional<StarGame> try_star_game(const InfluenceGame& game,
                                      std::string* why = nullptr);

/// Materialize the normalized star as an influence graph (same vertex ids).
InfluenceGraph star_to_graph(const StarGame& s);

/// |F_k(N)| over all of 2^V, by the closed formulas (three cases on the
/// center label, zero labels folded out first).
Big star_expansion_count(const StarGame& s, int k);
std::vector<Big> star_expansion_all(const StarGame& s,
                                    bool trace_level = false);

/// Same counting for extended stars; with no pendants it coincides with
/// star_expansion_count.
Big extended_star_expansion_count(const StarGame& s, int k);

/// (|W|, |L|) = (Σ_{k>=q} F_k, Σ_{k<q} F_k).
std::pair<Big, Big> star_winning_losing(const StarGame& s);

/// Exact oblivious satisfaction of an actor; non-players and zero-label
/// players sit at 2^(n-1).
Big sat_oblivious_star(const StarGame& s, int actor);

/// Exact non-oblivious satisfaction: the oblivious value plus the
/// tie-divergence corrections. Requires positive labels.
Big sat_nonoblivious_star(const StarGame& s, int actor);

}  // namespace igcount
