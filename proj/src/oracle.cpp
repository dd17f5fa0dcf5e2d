#include "igcount/oracle.hpp"

#include <algorithm>

namespace igcount {

namespace {

// Spread results per player-trace, so the 2^n satisfaction loop pays the
// fixpoint iteration only 2^|N| times.
class TraceCache {
 public:
  TraceCache(const InfluenceGraph& g, const VertexSet& players)
      : graph_(g), ids_(players.to_vector()) {
    cache_.resize(std::size_t(1) << ids_.size());
    flags_.assign(cache_.size(), false);
  }

  std::uint64_t trace_of(std::uint64_t full_mask) const {
    std::uint64_t t = 0;
    for (std::size_t j = 0; j < ids_.size(); ++j)
      t |= (full_mask >> ids_[j] & 1) << j;
    return t;
  }

  const VertexSet& spread(std::uint64_t trace) {
    if (!flags_[trace]) {
      cache_[trace] = graph_.spread(
          VertexSet::from_mask(graph_.vertex_count(), ids_, trace));
      flags_[trace] = true;
    }
    return cache_[trace];
  }

 private:
  const InfluenceGraph& graph_;
  std::vector<int> ids_;
  std::vector<VertexSet> cache_;
  std::vector<bool> flags_;
};

VertexSet vector_of_mask(int n, std::uint64_t mask) {
  VertexSet x(n);
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) x.set(i);
  return x;
}

// Non-oblivious final-one count given the cached spread of X(x) ∩ N.
int nonoblivious_ones(const InfluenceGame& game, const VertexSet& active,
                      std::uint64_t mask) {
  int ones = 0;
  int n = game.graph.vertex_count();
  for (int i = 0; i < n; ++i) {
    if (game.players.test(i)) {
      ones += active.test(i);
      continue;
    }
    const Rational& f = game.graph.label(i);
    Rational p(game.graph.predecessors(i).intersection_count(active));
    Rational q(game.graph.in_degree(i) - p.num());
    if (p >= f && q < f)
      ++ones;
    else if (!(q >= f && p < f))
      ones += static_cast<int>(mask >> i & 1);
  }
  return ones;
}

std::vector<Big> satisfaction_range(const DecisionModel& model,
                                    std::uint64_t begin, std::uint64_t end,
                                    TraceCache* cache) {
  int n = model.actor_count();
  std::vector<Big> counts(n, Big(0));
  std::vector<long> local(n, 0);
  auto flush = [&] {
    for (int i = 0; i < n; ++i) {
      counts[i] += local[i];
      local[i] = 0;
    }
  };
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    bool d;
    if (cache) {
      const InfluenceGame& game = model.game();
      const VertexSet& active = cache->spread(cache->trace_of(mask));
      if (model.kind() == ModelKind::oblivious)
        d = active.count() >= game.quota;
      else
        d = nonoblivious_ones(game, active, mask) >= game.quota;
    } else {
      d = model.decide(vector_of_mask(n, mask));
    }
    for (int i = 0; i < n; ++i)
      local[i] += (static_cast<int>(mask >> i & 1) == int(d));
    if ((mask & 0xffff) == 0xffff) flush();
  }
  flush();
  return counts;
}

}  // namespace

std::vector<Big> satisfaction_bruteforce_all(const DecisionModel& model,
                                             int cap) {
  int n = model.actor_count();
  check_cap(n, cap, "satisfaction");
  if (model.kind() == ModelKind::golf)
    return satisfaction_range(model, 0, std::uint64_t(1) << n, nullptr);
  TraceCache cache(model.graph(), model.game().players);
  return satisfaction_range(model, 0, std::uint64_t(1) << n, &cache);
}

Big satisfaction_bruteforce(const DecisionModel& model, int actor, int cap) {
  int n = model.actor_count();
  if (actor < 0 || actor >= n)
    throw InputError("satisfaction: unknown actor " + std::to_string(actor));
  return satisfaction_bruteforce_all(model, cap)[actor];
}

std::vector<Big> satisfaction_bruteforce_partitioned(const DecisionModel& model,
                                                     int parts, int cap) {
  int n = model.actor_count();
  check_cap(n, cap, "satisfaction");
  if (parts <= 0) throw InputError("satisfaction: parts must be positive");
  std::uint64_t total = std::uint64_t(1) << n;
  std::vector<Big> counts(n, Big(0));
  bool is_golf = model.kind() == ModelKind::golf;
  TraceCache cache(model.graph(),
                   is_golf ? VertexSet(n) : model.game().players);
  for (int p = 0; p < parts; ++p) {
    std::uint64_t lo = total * p / parts;
    std::uint64_t hi = total * (p + 1) / parts;
    auto part = satisfaction_range(model, lo, hi, is_golf ? nullptr : &cache);
    for (int i = 0; i < n; ++i) counts[i] += part[i];
  }
  return counts;
}

std::vector<Big> expansion_bruteforce_all(const InfluenceGraph& g,
                                          const VertexSet& players,
                                          bool trace_level, int cap) {
  int n = g.vertex_count();
  if (players.universe() != n)
    throw InputError("expansion: player set universe mismatch");
  auto ids = players.to_vector();
  int m = static_cast<int>(ids.size());
  check_cap(m, cap, "expansion");
  std::vector<Big> buckets(n + 1, Big(0));
  for (std::uint64_t trace = 0; trace < (std::uint64_t(1) << m); ++trace) {
    VertexSet active = g.spread(VertexSet::from_mask(n, ids, trace));
    buckets[active.count()] += 1;
  }
  if (!trace_level) {
    Big free = pow2(n - m);
    for (auto& b : buckets) b *= free;
  }
  return buckets;
}

Big expansion_bruteforce(const InfluenceGraph& g, const VertexSet& players,
                         int k, bool trace_level, int cap) {
  if (k < 0 || k > g.vertex_count())
    throw InputError("expansion: k outside [0, n]");
  return expansion_bruteforce_all(g, players, trace_level, cap)[k];
}

Big rae_index(const PredicateGame& game, int player, int cap) {
  auto it = std::find(game.players.begin(), game.players.end(), player);
  if (it == game.players.end())
    throw InputError("rae: actor " + std::to_string(player) +
                     " is not a player");
  int m = static_cast<int>(game.players.size());
  check_cap(m, cap, "rae");
  std::size_t pos = it - game.players.begin();
  Big total(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    bool w = game.winning(
        VertexSet::from_mask(game.universe, game.players, mask));
    if (w == bool(mask >> pos & 1)) total += 1;
  }
  return total;
}

Big banzhaf_value(const PredicateGame& game, int player, int cap) {
  auto it = std::find(game.players.begin(), game.players.end(), player);
  if (it == game.players.end())
    throw InputError("banzhaf: actor " + std::to_string(player) +
                     " is not a player");
  int m = static_cast<int>(game.players.size());
  check_cap(m, cap, "banzhaf");
  std::size_t pos = it - game.players.begin();
  Big total(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    if (!(mask >> pos & 1)) continue;
    if (game.winning(VertexSet::from_mask(game.universe, game.players, mask)) &&
        !game.winning(VertexSet::from_mask(game.universe, game.players,
                                           mask & ~(std::uint64_t(1) << pos))))
      total += 1;
  }
  return total;
}

static PredicateGame game_predicate(const InfluenceGame& game) {
  return PredicateGame{game.players.to_vector(),
                       [&game](const VertexSet& x) { return game.is_winning(x); },
                       game.graph.vertex_count()};
}

Big rae_index(const InfluenceGame& game, int player, int cap) {
  return rae_index(game_predicate(game), player, cap);
}

Big banzhaf_value(const InfluenceGame& game, int player, int cap) {
  return banzhaf_value(game_predicate(game), player, cap);
}

std::pair<Big, Big> winning_losing_counts(const InfluenceGame& game, int cap) {
  auto buckets = expansion_bruteforce_all(game.graph, game.players, false, cap);
  Big w(0), l(0);
  for (int k = 0; k <= game.graph.vertex_count(); ++k)
    (k >= game.quota ? w : l) += buckets[k];
  return {w, l};
}

PredicateGame associated_simple_game(const DecisionModel& model) {
  int n = model.actor_count();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return PredicateGame{std::move(all),
                       [model](const VertexSet& x) { return model.decide(x); },
                       n};
}

}  // namespace igcount
