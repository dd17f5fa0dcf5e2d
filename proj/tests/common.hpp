#pragma once

// Shared fixtures: the small reference graphs used across the suite and
// deterministic random-instance generators. Vertex ids are 0-based; the
// reference figures' 1-based names map to id-1.

#include <random>

#include "igcount/engine.hpp"
#include "igcount/json_io.hpp"
#include "igcount/oracle.hpp"
#include "igcount/reductions.hpp"

namespace igt {

using namespace igcount;

// Two-layered graph: arcs 1->0, 2->0, 3->0; vertex 4 isolated.
inline InfluenceGraph fig_two_layered() {
  return InfluenceGraph(5, {{1, 0}, {2, 0}, {3, 0}},
                        std::vector<Rational>(5, Rational(1)));
}

// Spread example: arcs 1->0, 2->0, 3->0, 0->4; labels (2,1,1,1,1).
inline InfluenceGraph fig_spread() {
  return InfluenceGraph(
      5, {{1, 0}, {2, 0}, {3, 0}, {0, 4}},
      {Rational(2), Rational(1), Rational(1), Rational(1), Rational(1)});
}

// Even-predecessor graph: arcs 1->0, 2->0, 3->0, 4->0; labels (2,1,1,1,1).
inline InfluenceGraph fig_even() {
  return InfluenceGraph(
      5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}},
      {Rational(2), Rational(1), Rational(1), Rational(1), Rational(1)});
}

// The game (G, f, 3, {1,2,3,4}) on the even-predecessor graph.
inline InfluenceGame fig_even_game() {
  return InfluenceGame(fig_even(), 3, VertexSet::of(5, {1, 2, 3, 4}));
}

// Leader 0 -> follower 1, labels (1,1), quota 2, players {0}.
inline InfluenceGame dictator_game() {
  return InfluenceGame(InfluenceGraph(2, {{0, 1}}, {Rational(1), Rational(1)}),
                       2, VertexSet::of(2, {0}));
}

// Star with |L|=3, |I|=1, |R|=2, |F|=1, f(c)=3, quota 4.
// Ids: leaders 0..2, independent 3, reciprocals 4..5, follower 6, center 7.
inline InfluenceGraph fig_star_graph() {
  std::vector<Rational> labels(8, Rational(1));
  labels[7] = Rational(3);
  return InfluenceGraph(8,
                        {{0, 7},
                         {1, 7},
                         {2, 7},
                         {4, 7},
                         {7, 4},
                         {5, 7},
                         {7, 5},
                         {7, 6}},
                        std::move(labels));
}

inline InfluenceGame fig_star_game() {
  return InfluenceGame(fig_star_graph(), 4,
                       VertexSet::of(8, {0, 1, 2, 3, 4, 5}));
}

// Strong hierarchical example with 16 vertices (paper ids 1..16 -> 0..15).
inline InfluenceGraph fig_hier() {
  std::vector<Arc> arcs;
  for (int l : {0, 1})
    for (int m : {3, 4, 5}) arcs.emplace_back(l, m);
  for (int m : {6, 7}) arcs.emplace_back(2, m);
  for (int m : {3, 4, 5, 6, 7})
    for (int t : {8, 9}) arcs.emplace_back(m, t);
  arcs.emplace_back(8, 10);
  arcs.emplace_back(9, 10);
  arcs.emplace_back(11, 12);
  arcs.emplace_back(11, 13);
  std::vector<Rational> labels;
  for (int x : {1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 2, 1, 1, 1, 1, 1})
    labels.emplace_back(x);
  return InfluenceGraph(16, std::move(arcs), std::move(labels));
}

// ---------------------------------------------------------------------------
// Random instances

inline int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational random_label(std::mt19937& rng, int fan_in, bool allow_zero) {
  int roll = pick(rng, 0, 9);
  if (allow_zero && roll == 0) return Rational(0);
  if (roll == 1 && fan_in >= 1) return Rational(2 * pick(rng, 1, fan_in) - 1, 2);
  return Rational(pick(rng, 1, std::max(1, fan_in + 1)));
}

// Random two-layered bipartite graph; labels all 1 (gOLF graphs ignore them).
inline InfluenceGraph random_two_layered(std::mt19937& rng, int max_leaders,
                                         int max_followers, int max_indep,
                                         bool odd_in_degrees = false) {
  int nl = pick(rng, 1, max_leaders);
  int nf = pick(rng, 1, max_followers);
  int ni = pick(rng, 0, max_indep);
  int n = nl + nf + ni;
  std::vector<Arc> arcs;
  for (int f = 0; f < nf; ++f) {
    int deg = pick(rng, 1, nl);
    if (odd_in_degrees && deg % 2 == 0) deg = deg == nl ? deg - 1 : deg + 1;
    std::vector<int> leaders(nl);
    for (int l = 0; l < nl; ++l) leaders[l] = l;
    std::shuffle(leaders.begin(), leaders.end(), rng);
    for (int t = 0; t < deg; ++t) arcs.emplace_back(leaders[t], nl + f);
  }
  return InfluenceGraph(n, std::move(arcs),
                        std::vector<Rational>(n, Rational(1)));
}

inline GolfModel random_golf(std::mt19937& rng, int max_n = 10) {
  InfluenceGraph g = random_two_layered(rng, std::min(4, max_n - 1),
                                        std::min(4, max_n - 1), 2);
  static const Rational fractions[] = {Rational(1, 2), Rational(2, 3),
                                       Rational(3, 4), Rational(1)};
  Rational r = fractions[pick(rng, 0, 3)];
  int q = pick(rng, 1, g.vertex_count());
  return GolfModel(std::move(g), r, q);
}

inline GolfModel random_odd_olf(std::mt19937& rng) {
  InfluenceGraph g = random_two_layered(rng, 4, 4, 2, /*odd=*/true);
  int q = pick(rng, 1, g.vertex_count());
  return GolfModel(std::move(g), Rational(1, 2), q);
}

// Arbitrary digraph game with positive labels.
inline InfluenceGame random_influence_game(std::mt19937& rng, int max_n = 10,
                                           bool players_everywhere = false) {
  int n = pick(rng, 2, max_n);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && pick(rng, 0, 3) == 0) arcs.emplace_back(u, v);
  InfluenceGraph tmp(n, arcs, std::vector<Rational>(n, Rational(1)));
  std::vector<Rational> labels;
  for (int v = 0; v < n; ++v)
    labels.push_back(random_label(rng, tmp.in_degree(v), false));
  VertexSet players(n);
  for (int v = 0; v < n; ++v)
    if (players_everywhere || pick(rng, 0, 2) > 0) players.set(v);
  if (players.empty()) players.set(pick(rng, 0, n - 1));
  int q = pick(rng, 0, n);
  return InfluenceGame(InfluenceGraph(n, std::move(arcs), std::move(labels)), q,
                       std::move(players));
}

// Random strong hierarchical influence graph built from a random witness
// tree; the structural players are the sources.
struct HierGen {
  std::mt19937& rng;
  bool allow_zero;
  std::vector<Arc> arcs;
  std::vector<Rational> labels;

  std::vector<int> fresh(int count, int fan_in) {
    std::vector<int> ids;
    for (int t = 0; t < count; ++t) {
      ids.push_back(static_cast<int>(labels.size()));
      labels.push_back(random_label(rng, fan_in, allow_zero));
    }
    return ids;
  }

  // Returns the FI vertex list of the generated subtree.
  std::vector<int> gen(int budget) {
    if (budget <= 1) return fresh(1, 0);
    int roll = pick(rng, 0, 5);
    if (budget <= 2 || roll <= 1) return fresh(pick(rng, 1, budget), 0);
    if (roll <= 3) {  // disjoint union
      int left = pick(rng, 1, budget - 1);
      auto a = gen(left);
      auto b = gen(budget - left);
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
    int layer = pick(rng, 1, std::max(1, budget / 2));
    auto below = gen(budget - layer);
    auto added = fresh(layer, static_cast<int>(below.size()));
    for (int u : below)
      for (int v : added) arcs.emplace_back(u, v);
    return added;
  }
};

inline InfluenceGraph random_hierarchical(std::mt19937& rng, int max_n,
                                          bool allow_zero) {
  HierGen gen{rng, allow_zero, {}, {}};
  gen.gen(pick(rng, 2, max_n));
  int n = static_cast<int>(gen.labels.size());
  return InfluenceGraph(n, std::move(gen.arcs), std::move(gen.labels));
}

inline InfluenceGame random_hierarchical_game(std::mt19937& rng, int max_n,
                                              bool allow_zero) {
  InfluenceGraph g = random_hierarchical(rng, max_n, allow_zero);
  int q = pick(rng, 0, g.vertex_count());
  VertexSet players = g.sources();
  return InfluenceGame(std::move(g), q, std::move(players));
}

// Random raw star graph (labels not yet normalized) plus its game.
struct RandomStar {
  InfluenceGraph graph;
  InfluenceGame game;
  StarGame star;
};

inline RandomStar random_star(std::mt19937& rng, bool allow_zero,
                              bool allow_ext, bool unreachable_followers = true,
                              int max_side = 3) {
  int L = pick(rng, 0, max_side);
  int I = pick(rng, 0, max_side);
  int R = pick(rng, 0, max_side);
  int F = pick(rng, 0, max_side);
  int fu = allow_ext && R > 0 && pick(rng, 0, 1) ? pick(rng, 0, 3) : -1;
  int n = L + I + R + F + 1 + std::max(fu, 0);
  int center = L + I + R + F;
  std::vector<Arc> arcs;
  std::vector<Rational> labels(n, Rational(1));
  int at = 0;
  auto lab = [&](bool influenced) {
    int roll = pick(rng, 0, 7);
    if (allow_zero && roll == 0) return Rational(0);
    if (roll == 1) return Rational(1, 2);
    if (roll == 2 && influenced) return Rational(pick(rng, 2, 3));
    return Rational(1);
  };
  for (int t = 0; t < L; ++t, ++at) {
    arcs.emplace_back(at, center);
    labels[at] = lab(false);
  }
  for (int t = 0; t < I; ++t, ++at) labels[at] = lab(false);
  int first_r = at;
  for (int t = 0; t < R; ++t, ++at) {
    arcs.emplace_back(at, center);
    arcs.emplace_back(center, at);
    labels[at] = lab(true);
  }
  for (int t = 0; t < F; ++t, ++at) {
    arcs.emplace_back(center, at);
    labels[at] = lab(unreachable_followers);
  }
  int u = -1;
  if (fu >= 0) {
    u = first_r + pick(rng, 0, R - 1);
    if (labels[u] > Rational(1)) labels[u] = Rational(1);  // keep u reciprocal
    for (int t = 0; t < fu; ++t) arcs.emplace_back(u, center + 1 + t);
  }
  int roll = pick(rng, 0, 8);
  labels[center] =
      roll == 0 && allow_zero ? Rational(0) : Rational(pick(rng, 1, L + R + 2));
  int q = pick(rng, 0, n);
  InfluenceGraph graph(n, std::move(arcs), std::move(labels));
  VertexSet players(n);
  for (int v = 0; v < L + I + R; ++v) players.set(v);
  InfluenceGame game(graph, q, players);
  std::string why;
  auto sg = try_star_game(game, &why);
  if (!sg) throw std::logic_error("generator produced a non-star: " + why);
  return RandomStar{std::move(graph), std::move(game), *std::move(sg)};
}

inline VCInstance random_connected_graph(std::mt19937& rng, int n) {
  std::vector<Arc> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(pick(rng, 0, v - 1), v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (pick(rng, 0, 2) == 0) edges.emplace_back(u, v);
  return VCInstance(n, std::move(edges));
}

// Positive-label two-layered expansion instance with N = sources.
struct ExpansionInstance {
  InfluenceGraph graph;
  VertexSet players;
  int k;
};

inline ExpansionInstance random_bipartite_instance(std::mt19937& rng,
                                                   int max_n) {
  InfluenceGraph shape = random_two_layered(rng, 4, 4, 2);
  if (shape.vertex_count() > max_n)
    return random_bipartite_instance(rng, max_n);
  std::vector<Rational> labels;
  for (int v = 0; v < shape.vertex_count(); ++v)
    labels.push_back(random_label(rng, shape.in_degree(v), false));
  InfluenceGraph g(shape.vertex_count(), shape.arcs(), std::move(labels));
  VertexSet players = g.sources();
  int k = pick(rng, 0, g.vertex_count());
  return ExpansionInstance{std::move(g), std::move(players), k};
}

inline DecisionVector vec(int n, std::uint64_t mask) {
  DecisionVector x(n);
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) x.set(i);
  return x;
}

}  // namespace igt
