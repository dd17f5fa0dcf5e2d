#include "igcount/engine.hpp"

namespace igcount {

EngineChoice parse_engine(const std::string& name) {
  if (name == "auto") return EngineChoice::automatic;
  if (name == "bruteforce") return EngineChoice::bruteforce;
  if (name == "hierarchical") return EngineChoice::hierarchical;
  if (name == "star") return EngineChoice::star;
  throw InputError("unknown engine '" + name + "'");
}

std::string engine_name(EngineChoice e) {
  switch (e) {
    case EngineChoice::automatic:
      return "auto";
    case EngineChoice::bruteforce:
      return "bruteforce";
    case EngineChoice::hierarchical:
      return "hierarchical";
    case EngineChoice::star:
      return "star";
  }
  return "?";
}

namespace {

Big star_satisfaction(const DecisionModel& model, int actor) {
  std::string why;
  auto sg = try_star_game(model.game(), &why);
  if (!sg) throw EngineError("star engine inapplicable: " + why, why);
  return model.kind() == ModelKind::oblivious
             ? sat_oblivious_star(*sg, actor)
             : sat_nonoblivious_star(*sg, actor);
}

Big hierarchical_satisfaction(const DecisionModel& model, int actor) {
  return model.kind() == ModelKind::oblivious
             ? sat_oblivious_hierarchical(model.game(), actor)
             : sat_nonoblivious_hierarchical(model.game(), actor);
}

}  // namespace

SatisfactionOutcome compute_satisfaction(const DecisionModel& input, int actor,
                                         EngineChoice engine, int cap) {
  if (actor < 0 || actor >= input.actor_count())
    throw InputError("satisfaction: unknown actor " + std::to_string(actor));
  DecisionModel model = input.as_influence_model();
  switch (engine) {
    case EngineChoice::bruteforce:
      return {satisfaction_bruteforce(model, actor, cap), "bruteforce"};
    case EngineChoice::star:
      return {star_satisfaction(model, actor), "star"};
    case EngineChoice::hierarchical:
      return {hierarchical_satisfaction(model, actor), "hierarchical"};
    case EngineChoice::automatic: {
      try {
        return {star_satisfaction(model, actor), "star"};
      } catch (const EngineError&) {
      }
      try {
        return {hierarchical_satisfaction(model, actor), "hierarchical"};
      } catch (const EngineError&) {
      }
      return {satisfaction_bruteforce(model, actor, cap), "bruteforce"};
    }
  }
  throw std::logic_error("unreachable");
}

ExpansionOutcome compute_expansion(const InfluenceGraph& g,
                                   const VertexSet& players,
                                   EngineChoice engine, bool trace_level,
                                   int cap) {
  auto by_star = [&]() -> std::vector<Big> {
    InfluenceGame game(g, 0, players);
    std::string why;
    auto sg = try_star_game(game, &why);
    if (!sg) throw EngineError("star engine inapplicable: " + why, why);
    return star_expansion_all(*sg, trace_level);
  };
  auto by_hierarchy = [&]() -> std::vector<Big> {
    if (players != g.sources())
      throw EngineError(
          "hierarchical engine requires the player set to be exactly the "
          "vertices without predecessors (L ∪ I)");
    return expansion_counts_all(decompose(g), trace_level);
  };
  switch (engine) {
    case EngineChoice::bruteforce:
      return {expansion_bruteforce_all(g, players, trace_level, cap),
              "bruteforce"};
    case EngineChoice::star:
      return {by_star(), "star"};
    case EngineChoice::hierarchical:
      return {by_hierarchy(), "hierarchical"};
    case EngineChoice::automatic: {
      try {
        return {by_star(), "star"};
      } catch (const EngineError&) {
      }
      try {
        return {by_hierarchy(), "hierarchical"};
      } catch (const EngineError&) {
      }
      return {expansion_bruteforce_all(g, players, trace_level, cap),
              "bruteforce"};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace igcount
