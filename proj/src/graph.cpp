#include "igcount/graph.hpp"

#include <algorithm>

namespace igcount {

InfluenceGraph::InfluenceGraph(int n, std::vector<Arc> arcs,
                               std::vector<Rational> labels)
    : n_(n), arcs_(std::move(arcs)), labels_(std::move(labels)) {
  if (n_ < 0) throw InputError("graph: negative vertex count");
  if (static_cast<int>(labels_.size()) != n_)
    throw InputError("graph: expected " + std::to_string(n_) + " labels, got " +
                     std::to_string(labels_.size()));
  std::sort(arcs_.begin(), arcs_.end());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    auto [u, v] = arcs_[i];
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw InputError("graph: arc (" + std::to_string(u) + "," +
                       std::to_string(v) + ") has an undeclared endpoint");
    if (u == v)
      throw InputError("graph: loop at vertex " + std::to_string(u));
    if (i > 0 && arcs_[i] == arcs_[i - 1])
      throw InputError("graph: duplicate arc (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
  }
  preds_.assign(n_, VertexSet(n_));
  succs_.assign(n_, VertexSet(n_));
  for (auto [u, v] : arcs_) {
    succs_[u].set(v);
    preds_[v].set(u);
  }
  thresholds_.reserve(n_);
  positive_labels_ = true;
  for (const auto& f : labels_) {
    thresholds_.push_back(static_cast<int>(f.ceil()));
    if (f.is_zero()) positive_labels_ = false;
  }
}

InfluenceGraph InfluenceGraph::isolated(std::vector<Rational> labels) {
  int n = static_cast<int>(labels.size());
  return InfluenceGraph(n, {}, std::move(labels));
}

VertexSet InfluenceGraph::spread(const VertexSet& seed) const {
  VertexSet active = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n_; ++v) {
      if (active.test(v)) continue;
      if (preds_[v].intersection_count(active) >= thresholds_[v]) {
        active.set(v);
        changed = true;
      }
    }
  }
  return active;
}

std::vector<VertexSet> InfluenceGraph::spread_rounds(
    const VertexSet& seed) const {
  std::vector<VertexSet> rounds{seed};
  while (true) {
    const VertexSet& prev = rounds.back();
    VertexSet next = prev;
    for (int v = 0; v < n_; ++v) {
      if (next.test(v)) continue;
      if (preds_[v].intersection_count(prev) >= thresholds_[v]) next.set(v);
    }
    if (next == prev) break;
    rounds.push_back(std::move(next));
  }
  return rounds;
}

VertexSet InfluenceGraph::directly_dependent_followers(int v) const {
  VertexSet out(n_);
  for (int s : succs_[check(v)].to_vector())
    if (in_degree(s) == 1 && labels_[s] == Rational(1)) out.set(s);
  return out;
}

int InfluenceGraph::two_layered_violation() const {
  for (int v = 0; v < n_; ++v)
    if (!preds_[v].empty() && !succs_[v].empty()) return v;
  return -1;
}

ActorPartition InfluenceGraph::classify_actors() const {
  int bad = two_layered_violation();
  if (bad >= 0)
    throw InputError("graph is not two-layered: vertex " + std::to_string(bad) +
                     " has both predecessors and successors");
  ActorPartition p{VertexSet(n_), VertexSet(n_), VertexSet(n_)};
  for (int v = 0; v < n_; ++v) {
    if (!succs_[v].empty())
      p.leaders.set(v);
    else if (!preds_[v].empty())
      p.followers.set(v);
    else
      p.independents.set(v);
  }
  return p;
}

VertexSet InfluenceGraph::sources() const {
  VertexSet s(n_);
  for (int v = 0; v < n_; ++v)
    if (preds_[v].empty()) s.set(v);
  return s;
}

InfluenceGraph InfluenceGraph::with_label(int v, const Rational& value) const {
  auto labels = labels_;
  labels.at(check(v)) = value;
  return InfluenceGraph(n_, arcs_, std::move(labels));
}

}  // namespace igcount
