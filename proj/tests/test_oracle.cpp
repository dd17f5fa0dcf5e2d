#include <doctest.h>

#include "common.hpp"

using namespace igt;

namespace {

// Dictator simple game on players {0,1}: 0 wins alone, 1 is null.
InfluenceGame two_player_dictator() {
  InfluenceGraph g(3, {{0, 2}}, {Rational(1), Rational(1), Rational(1)});
  return InfluenceGame(std::move(g), 2, VertexSet::of(3, {0, 1}));
}

}  // namespace

TEST_CASE("satisfaction by enumeration: dictator game") {
  DecisionModel m = DecisionModel::oblivious(dictator_game());
  CHECK(satisfaction_bruteforce(m, 0) == 4);
  CHECK(satisfaction_bruteforce(m, 1) == 2);  // 2^(n-1) for the follower

  // single player, quota 1: both vectors agree with the outcome
  InfluenceGame solo(InfluenceGraph::isolated({Rational(1)}), 1,
                     VertexSet::full(1));
  CHECK(satisfaction_bruteforce(DecisionModel::oblivious(solo), 0) == 2);

  CHECK_THROWS_AS(satisfaction_bruteforce(m, 5), InputError);
  CHECK_THROWS_AS(satisfaction_bruteforce(m, 0, /*cap=*/1), CapError);
}

TEST_CASE("satisfaction is deterministic under partitioning") {
  std::mt19937 rng(29);
  for (int it = 0; it < 6; ++it) {
    InfluenceGame game = random_influence_game(rng, 8);
    DecisionModel m = DecisionModel::nonoblivious(game);
    auto direct = satisfaction_bruteforce_all(m);
    for (int parts : {2, 3, 7})
      CHECK(satisfaction_bruteforce_partitioned(m, parts) == direct);
  }
}

TEST_CASE("expansion buckets partition the power set") {
  std::mt19937 rng(31);
  for (int it = 0; it < 10; ++it) {
    InfluenceGame game = random_influence_game(rng, 9);
    auto buckets = expansion_bruteforce_all(game.graph, game.players);
    Big sum(0);
    for (const auto& b : buckets) sum += b;
    CHECK(sum == pow2(game.graph.vertex_count()));
  }
}

TEST_CASE("expansion bucket for the star example") {
  InfluenceGame game = fig_star_game();
  CHECK(expansion_bruteforce(game.graph, game.players, 6) == 48);
  CHECK(expansion_bruteforce(game.graph, game.players, 5) == 12);
  CHECK(expansion_bruteforce(game.graph, game.players, 6, /*trace=*/true) == 12);
}

TEST_CASE("below every outsider threshold the buckets are pure seeds") {
  // Sources as players, follower labels >= 2: for k below the smallest
  // outsider label, a trace of size k stays put, so the trace bucket is
  // C(|N|, k).
  InfluenceGraph g(5, {{0, 3}, {1, 3}, {2, 4}, {0, 4}},
                   {Rational(1), Rational(1), Rational(1), Rational(2),
                    Rational(2)});
  VertexSet players = g.sources();
  for (int k = 0; k < 2; ++k)
    CHECK(expansion_bruteforce(g, players, k, true) == binom(3, k));
  // with every label out of reach and N = V the buckets are C(n, k)
  InfluenceGraph all_inert(4, {{0, 1}, {2, 1}},
                           {Rational(1), Rational(5), Rational(1), Rational(1)});
  for (int k = 0; k <= 4; ++k)
    CHECK(expansion_bruteforce(all_inert, VertexSet::full(4), k, true) ==
          binom(4, k));
}

TEST_CASE("Rae and Banzhaf on the dictator simple game") {
  InfluenceGame g = two_player_dictator();
  CHECK(rae_index(g, 0) == 4);
  CHECK(rae_index(g, 1) == 2);
  CHECK(banzhaf_value(g, 0) == 2);
  CHECK(banzhaf_value(g, 1) == 0);
  CHECK_THROWS_AS(rae_index(g, 2), InputError);  // non-player
}

TEST_CASE("Rae = 2^(|N|-1) + Banzhaf on random games") {
  std::mt19937 rng(37);
  for (int it = 0; it < 40; ++it) {
    InfluenceGame game = random_influence_game(rng, 9);
    Big half = pow2(game.players.count() - 1);
    for (int i : game.players.to_vector()) {
      Big rae = rae_index(game, i);
      CHECK(rae == half + banzhaf_value(game, i));
      CHECK(rae >= half);
    }
  }
}

TEST_CASE("winning and losing coalition counts") {
  InfluenceGame star = fig_star_game();
  auto [w, l] = winning_losing_counts(star);
  CHECK(w == 128);
  CHECK(l == 128);

  InfluenceGame zero_quota(star.graph, 0, star.players);
  auto [w0, l0] = winning_losing_counts(zero_quota);
  CHECK(w0 == 256);
  CHECK(l0 == 0);

  std::mt19937 rng(41);
  for (int it = 0; it < 8; ++it) {
    InfluenceGame game = random_influence_game(rng, 8);
    auto [wr, lr] = winning_losing_counts(game);
    CHECK(wr + lr == pow2(game.graph.vertex_count()));
  }
}

TEST_CASE("satisfaction equals the Rae index of the actor-set game") {
  std::mt19937 rng(43);
  for (int it = 0; it < 10; ++it) {
    InfluenceGame game = random_influence_game(rng, 7);
    for (auto kind : {ModelKind::oblivious, ModelKind::nonoblivious}) {
      DecisionModel m = kind == ModelKind::oblivious
                            ? DecisionModel::oblivious(game)
                            : DecisionModel::nonoblivious(game);
      PredicateGame simple = associated_simple_game(m);
      auto sat = satisfaction_bruteforce_all(m);
      for (int i = 0; i < m.actor_count(); ++i)
        CHECK(sat[i] == rae_index(simple, i));
    }
  }
  for (int it = 0; it < 6; ++it) {
    GolfModel golf = random_golf(rng, 8);
    DecisionModel m = DecisionModel::golf(golf);
    PredicateGame simple = associated_simple_game(m);
    auto sat = satisfaction_bruteforce_all(m);
    for (int i = 0; i < m.actor_count(); ++i)
      CHECK(sat[i] == rae_index(simple, i));
  }
}

TEST_CASE("satisfaction ordering in oblivious odd-OLF models") {
  std::mt19937 rng(47);
  for (int it = 0; it < 15; ++it) {
    GolfModel golf = random_odd_olf(rng);
    DecisionModel m =
        DecisionModel::oblivious(golf_to_influence_game(golf));
    auto sat = satisfaction_bruteforce_all(m);
    Big best_follower(0), best_indep(0);
    Big worst_leader = pow2(m.actor_count());
    bool any_leader = false, any_indep = false, any_follower = false;
    for (int v : golf.partition.leaders.to_vector()) {
      any_leader = true;
      worst_leader = std::min(worst_leader, sat[v]);
    }
    for (int v : golf.partition.independents.to_vector()) {
      any_indep = true;
      best_indep = std::max(best_indep, sat[v]);
    }
    for (int v : golf.partition.followers.to_vector()) {
      any_follower = true;
      best_follower = std::max(best_follower, sat[v]);
    }
    if (any_leader && any_indep) CHECK(worst_leader >= best_indep);
    if (any_leader && any_follower) CHECK(worst_leader >= best_follower);
    if (any_indep && any_follower) CHECK(best_indep >= best_follower);
  }
}
