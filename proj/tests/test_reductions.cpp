#include <doctest.h>

#include "common.hpp"

using namespace igt;

namespace {

VCInstance path3() { return VCInstance(3, {{0, 1}, {1, 2}}); }
VCInstance triangle() { return VCInstance(3, {{0, 1}, {1, 2}, {0, 2}}); }

Big gadget_trace_bucket(const GadgetResult& g) {
  return expansion_bruteforce(g.graph, g.players, g.k, /*trace_level=*/true);
}

}  // namespace

TEST_CASE("vertex cover counting") {
  CHECK(count_vertex_covers(path3(), 2) == 3);
  VCInstance k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(count_vertex_covers(k4, 3) == 4);
  CHECK(count_vertex_covers(k4, 4) == 1);
  CHECK(count_vertex_covers(triangle(), 3) == 1);
  CHECK(count_vertex_covers(triangle(), 1) == 0);
}

TEST_CASE("edge list parsing") {
  VCInstance g = parse_edge_list("0 1\n1 2 # comment\n\n# full comment\n2 0\n");
  CHECK(g.n == 3);
  CHECK(g.edges.size() == 3);
  CHECK(g.is_connected());
  CHECK_THROWS_AS(parse_edge_list("0\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), InputError);
}

TEST_CASE("gadget construction on the path") {
  GadgetResult g = vc_gadget(path3());
  CHECK(g.graph.vertex_count() == 14);  // 3 + 5*2 + 1
  CHECK(g.k == 13);                     // 2 + 10 + 1
  CHECK(g.players.count() == 4);
  CHECK_FALSE(g.warnings.empty());  // n < 6 warning, construction still done

  // all in-degrees are 0 or 3, the graph is two-layered
  for (int v = 0; v < g.graph.vertex_count(); ++v) {
    int d = g.graph.in_degree(v);
    CHECK((d == 0 || d == 3));
  }
  CHECK(g.graph.is_two_layered());

  // labels are the odd-OLF translation: 1 on sources, ceil(3/2)=2 on others
  GolfModel olf(InfluenceGraph(g.graph.vertex_count(), g.graph.arcs(),
                               std::vector<Rational>(g.graph.vertex_count(),
                                                     Rational(1))),
                Rational(1, 2), 1);
  CHECK(is_odd_olf(olf));
  InfluenceGame translated = golf_to_influence_game(olf);
  CHECK(translated.graph.labels() == g.graph.labels());

  // Below the faithful range (n = 3) one extra trace collides with the
  // cover bucket: the full vertex set activates every edge copy without z
  // and n + (n+2)m equals k exactly when n = 3.
  CHECK(gadget_trace_bucket(g) == 3 + 1);
}

TEST_CASE("gadget construction on the triangle") {
  GadgetResult g = vc_gadget(triangle());
  CHECK(g.graph.vertex_count() == 19);  // 3 + 5*3 + 1
  CHECK(g.k == 18);                     // 2 + 15 + 1
  CHECK(gadget_trace_bucket(g) == 3 + 1);  // same n = 3 collision
}

TEST_CASE("gadget faithfulness from six vertices up") {
  std::mt19937 rng(103);
  for (int it = 0; it < 8; ++it) {
    VCInstance inst = random_connected_graph(rng, 6);
    GadgetResult g = vc_gadget(inst);
    CHECK(g.warnings.empty());
    CHECK(gadget_trace_bucket(g) == count_vertex_covers(inst, 4));
  }
  // at n = 3 the full-vertex-set trace always pollutes the bucket by one
  for (int it = 0; it < 4; ++it) {
    VCInstance inst = random_connected_graph(rng, 3);
    GadgetResult g = vc_gadget(inst);
    CHECK(gadget_trace_bucket(g) ==
          count_vertex_covers(inst, 2) + 1);
  }
}

TEST_CASE("satisfaction instance from an expansion instance") {
  InfluenceGraph d = dictator_game().graph;
  VertexSet players = VertexSet::of(2, {0});
  SatisfactionInstance inst = expansion_to_satisfaction(d, players, 1);
  CHECK(inst.probe == 2);
  CHECK(inst.game.quota == 2);
  CHECK(inst.game.players == VertexSet::of(3, {0, 2}));
  CHECK(inst.game.graph.label(2) == Rational(1));

  Big direct = satisfaction_bruteforce(DecisionModel::oblivious(inst.game),
                                       inst.probe);
  CHECK(direct == satisfaction_identity_value(d, players, 1));

  // an empty bucket leaves exactly 2^n
  // (dictator spreads to 0 or 2 vertices, never exactly 1)
  CHECK(satisfaction_identity_value(d, players, 1) == pow2(2));
}

TEST_CASE("satisfaction identity on random bipartite instances") {
  std::mt19937 rng(107);
  for (int it = 0; it < 25; ++it) {
    ExpansionInstance inst = random_bipartite_instance(rng, 10);
    SatisfactionInstance sat =
        expansion_to_satisfaction(inst.graph, inst.players, inst.k);
    Big direct = satisfaction_bruteforce(DecisionModel::oblivious(sat.game),
                                         sat.probe);
    CHECK(direct ==
          satisfaction_identity_value(inst.graph, inst.players, inst.k));
  }
}

TEST_CASE("the probe graph restores the original under the R construction") {
  std::mt19937 rng(109);
  for (int it = 0; it < 10; ++it) {
    ExpansionInstance inst = random_bipartite_instance(rng, 10);
    SatisfactionInstance sat =
        expansion_to_satisfaction(inst.graph, inst.players, inst.k);
    ReducedGraph back = reduce_graph_R(sat.game.graph, sat.probe);
    CHECK(back.graph.arcs() == inst.graph.arcs());
    CHECK(back.graph.labels() == inst.graph.labels());
  }
}
