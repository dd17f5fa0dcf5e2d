#pragma once

#include <string>

#include "igcount/hierarchy.hpp"
#include "igcount/oracle.hpp"
#include "igcount/star.hpp"

namespace igcount {

// auto picks star when the recognizer certifies one, else hierarchical when
// the decomposition exists, else brute force under the cap.
enum class EngineChoice { automatic, bruteforce, hierarchical, star };

EngineChoice parse_engine(const std::string& name);
std::string engine_name(EngineChoice e);

struct SatisfactionOutcome {
  Big value;
  std::string engine_used;
};

/// Satisfaction of one actor, dispatched to the fastest applicable engine.
/// gOLF models are translated to their non-oblivious influence game first
/// (the collective decision functions coincide).
SatisfactionOutcome compute_satisfaction(const DecisionModel& model, int actor,
                                         EngineChoice engine,
                                         int cap = kDefaultCap);

struct ExpansionOutcome {
  std::vector<Big> buckets;  // k = 0..n
  std::string engine_used;
};

/// Expansion buckets for (G, f, N), dispatched the same way.
ExpansionOutcome compute_expansion(const InfluenceGraph& g,
                                   const VertexSet& players,
                                   EngineChoice engine, bool trace_level,
                                   int cap = kDefaultCap);

}  // namespace igcount
