#include "igcount/hierarchy.hpp"

#include <algorithm>

namespace igcount {

VertexSet HierarchicalDecomposition::leaf_vertices() const {
  VertexSet out(n);
  for (const auto& node : nodes)
    if (node.kind == Kind::leaf)
      for (int v : node.verts) out.set(v);
  return out;
}

Big CountTable::row_sum(int a) const {
  Big s(0);
  for (int b = 0; b <= max_b; ++b) s += at(a, b);
  return s;
}

Big CountTable::total() const {
  Big s(0);
  for (const auto& c : cells) s += c;
  return s;
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

using Kind = HierarchicalDecomposition::Kind;

struct Decomposer {
  const InfluenceGraph& g;
  HierarchicalDecomposition out;
  std::string error;

  explicit Decomposer(const InfluenceGraph& graph) : g(graph) {
    out.n = graph.vertex_count();
    out.labels = graph.labels();
  }

  int add(HierarchicalDecomposition::Node node) {
    out.nodes.push_back(std::move(node));
    return static_cast<int>(out.nodes.size()) - 1;
  }

  std::vector<VertexSet> components(const VertexSet& verts) const {
    std::vector<VertexSet> comps;
    VertexSet seen(out.n);
    for (int s : verts.to_vector()) {
      if (seen.test(s)) continue;
      VertexSet comp(out.n);
      std::vector<int> stack{s};
      comp.set(s);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        VertexSet nbrs = (g.predecessors(v) | g.successors(v)) & verts;
        for (int w : nbrs.to_vector())
          if (!comp.test(w)) {
            comp.set(w);
            stack.push_back(w);
          }
      }
      seen |= comp;
      comps.push_back(std::move(comp));
    }
    return comps;
  }

  // Out-degree-zero vertices of the induced subgraph.
  VertexSet sinks(const VertexSet& verts) const {
    VertexSet s(out.n);
    for (int v : verts.to_vector())
      if (!g.successors(v).intersects(verts)) s.set(v);
    return s;
  }

  // -1 on failure with `error` set.
  int build(const VertexSet& verts) {
    auto comps = components(verts);
    if (comps.empty()) {
      error = "empty vertex set";
      return -1;
    }
    if (comps.size() > 1) {
      int acc = build_component(comps[0]);
      if (acc < 0) return -1;
      for (std::size_t i = 1; i < comps.size(); ++i) {
        int next = build_component(comps[i]);
        if (next < 0) return -1;
        acc = add({Kind::disjoint_union, {}, acc, next});
      }
      return acc;
    }
    return build_component(comps[0]);
  }

  int build_component(const VertexSet& comp) {
    bool has_arc = false;
    for (int v : comp.to_vector())
      if (g.successors(v).intersects(comp)) {
        has_arc = true;
        break;
      }
    if (!has_arc) return add({Kind::leaf, comp.to_vector(), -1, -1});

    VertexSet layer = sinks(comp);
    if (layer.empty()) {
      error = "component containing vertex " +
              std::to_string(comp.to_vector().front()) +
              " has no out-degree-zero layer (directed cycle)";
      return -1;
    }
    VertexSet rest = comp - layer;
    VertexSet rest_fi = sinks(rest);  // FI of the remainder

    // The peeled layer must be joined completely from FI(rest) and from
    // nothing else.
    for (int v : layer.to_vector()) {
      VertexSet in_from = g.predecessors(v) & comp;
      for (int u : in_from.to_vector())
        if (!rest_fi.test(u)) {
          error = "arc (" + std::to_string(u) + "," + std::to_string(v) +
                  ") enters the peeled layer from vertex " + std::to_string(u) +
                  " which still has successors of its own";
          return -1;
        }
      for (int u : rest_fi.to_vector())
        if (!in_from.test(u)) {
          error = "layer join is incomplete: missing arc (" +
                  std::to_string(u) + "," + std::to_string(v) + ")";
          return -1;
        }
    }

    int child = build(rest);
    if (child < 0) return -1;
    return add({Kind::extend, layer.to_vector(), child, -1});
  }
};

}  // namespace

std::optional<HierarchicalDecomposition> try_decompose(const InfluenceGraph& g,
                                                       std::string* why) {
  if (g.vertex_count() == 0) {
    if (why) *why = "graph has no vertices";
    return std::nullopt;
  }
  Decomposer dec(g);
  int root = dec.build(VertexSet::full(g.vertex_count()));
  if (root < 0) {
    if (why) *why = dec.error;
    return std::nullopt;
  }
  dec.out.root = root;
  return std::move(dec.out);
}

HierarchicalDecomposition decompose(const InfluenceGraph& g) {
  std::string why;
  auto d = try_decompose(g, &why);
  if (!d) throw EngineError("graph is not strong hierarchical: " + why, why);
  return *std::move(d);
}

namespace {

// (all vertices, FI set) of a subtree.
std::pair<VertexSet, VertexSet> subtree_sets(const HierarchicalDecomposition& d,
                                             int idx) {
  const auto& node = d.nodes[idx];
  switch (node.kind) {
    case Kind::leaf: {
      VertexSet v(d.n);
      for (int x : node.verts) v.set(x);
      return {v, v};
    }
    case Kind::disjoint_union: {
      auto [lv, lf] = subtree_sets(d, node.left);
      auto [rv, rf] = subtree_sets(d, node.right);
      return {lv | rv, lf | rf};
    }
    case Kind::extend: {
      auto [cv, cf] = subtree_sets(d, node.left);
      (void)cf;
      VertexSet layer(d.n);
      for (int x : node.verts) layer.set(x);
      return {cv | layer, layer};
    }
  }
  throw std::logic_error("unreachable");
}

void collect_arcs(const HierarchicalDecomposition& d, int idx,
                  std::vector<Arc>& arcs) {
  const auto& node = d.nodes[idx];
  if (node.kind == Kind::disjoint_union) {
    collect_arcs(d, node.left, arcs);
    collect_arcs(d, node.right, arcs);
  } else if (node.kind == Kind::extend) {
    collect_arcs(d, node.left, arcs);
    auto [verts, fi] = subtree_sets(d, node.left);
    (void)verts;
    for (int u : fi.to_vector())
      for (int v : node.verts) arcs.emplace_back(u, v);
  }
}

}  // namespace

InfluenceGraph reconstruct(const HierarchicalDecomposition& d) {
  std::vector<Arc> arcs;
  collect_arcs(d, d.root, arcs);
  return InfluenceGraph(d.n, std::move(arcs), d.labels);
}

// ---------------------------------------------------------------------------
// Expansion tables (oblivious counting)

namespace {

struct TTab {
  int nverts = 0;
  int fi = 0;
  CountTable t{0, 0};
};

// T table over seeds Y ⊆ players ∩ leaf vertices. Zero-label vertices
// self-activate whether or not they are players; positive non-players are
// inert.
TTab t_table(const HierarchicalDecomposition& d, int idx,
             const std::vector<Rational>& labels, const VertexSet& players) {
  const auto& node = d.nodes[idx];
  switch (node.kind) {
    case Kind::leaf: {
      int alpha = static_cast<int>(node.verts.size());
      int zeros = 0, p_pos = 0, p_zero = 0;
      for (int v : node.verts) {
        bool zero = labels[v].is_zero();
        zeros += zero;
        if (players.test(v)) (zero ? p_zero : p_pos) += 1;
      }
      TTab tab{alpha, alpha, CountTable(alpha, alpha)};
      Big freebits = pow2(p_zero);
      for (int y = 0; y <= p_pos; ++y)
        tab.t.at(zeros + y, zeros + y) = binom(p_pos, y) * freebits;
      return tab;
    }
    case Kind::disjoint_union: {
      TTab a = t_table(d, node.left, labels, players);
      TTab b = t_table(d, node.right, labels, players);
      TTab tab{a.nverts + b.nverts, a.fi + b.fi,
               CountTable(a.nverts + b.nverts, a.fi + b.fi)};
      for (int a1 = 0; a1 <= a.nverts; ++a1)
        for (int b1 = 0; b1 <= a.fi; ++b1) {
          const Big& x = a.t.at(a1, b1);
          if (x == 0) continue;
          for (int a2 = 0; a2 <= b.nverts; ++a2)
            for (int b2 = 0; b2 <= b.fi; ++b2) {
              const Big& y = b.t.at(a2, b2);
              if (y == 0) continue;
              tab.t.at(a1 + a2, b1 + b2) += x * y;
            }
        }
      return tab;
    }
    case Kind::extend: {
      TTab child = t_table(d, node.left, labels, players);
      int layer = static_cast<int>(node.verts.size());
      // R(c): layer members activated once c of the child's FI are active.
      std::vector<int> reach(child.fi + 1, 0);
      for (int c = 0; c <= child.fi; ++c)
        for (int v : node.verts)
          if (labels[v] <= Rational(c)) reach[c] += 1;
      TTab tab{child.nverts + layer, layer,
               CountTable(child.nverts + layer, layer)};
      for (int a = 0; a <= child.nverts; ++a)
        for (int b = 0; b <= child.fi; ++b) {
          const Big& x = child.t.at(a, b);
          if (x == 0) continue;
          tab.t.at(a + reach[b], reach[b]) += x;
        }
      return tab;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<Big> hierarchical_trace_buckets(const HierarchicalDecomposition& d,
                                            const std::vector<Rational>& labels,
                                            const VertexSet& players) {
  TTab tab = t_table(d, d.root, labels, players);
  std::vector<Big> buckets(d.n + 1, Big(0));
  for (int a = 0; a <= tab.t.max_a; ++a) buckets[a] = tab.t.row_sum(a);
  return buckets;
}

CountTable expansion_table(const HierarchicalDecomposition& d) {
  return t_table(d, d.root, d.labels, d.leaf_vertices()).t;
}

std::vector<Big> expansion_counts_all(const HierarchicalDecomposition& d,
                                      bool trace_level) {
  auto buckets =
      hierarchical_trace_buckets(d, d.labels, d.leaf_vertices());
  if (!trace_level) {
    Big free = pow2(d.n - d.leaf_vertices().count());
    for (auto& b : buckets) b *= free;
  }
  return buckets;
}

Big expansion_count(const HierarchicalDecomposition& d, int k) {
  if (k < 0 || k > d.n) throw InputError("expansion: k outside [0, n]");
  return expansion_counts_all(d)[k];
}

// ---------------------------------------------------------------------------
// Reductions

namespace {

ReducedGraph build_reduced(const InfluenceGraph& g, const VertexSet& removed,
                           const std::vector<Rational>& new_labels,
                           int fresh_sinks, int sink_anchor) {
  int n = g.vertex_count();
  ReducedGraph out{InfluenceGraph(0, {}, {}), {}, std::vector<int>(n, -1)};
  std::vector<Rational> labels;
  for (int v = 0; v < n; ++v) {
    if (removed.test(v)) continue;
    out.image[v] = static_cast<int>(out.original_ids.size());
    out.original_ids.push_back(v);
    labels.push_back(new_labels[v]);
  }
  std::vector<Arc> arcs;
  for (auto [u, v] : g.arcs())
    if (out.image[u] >= 0 && out.image[v] >= 0)
      arcs.emplace_back(out.image[u], out.image[v]);
  for (int s = 0; s < fresh_sinks; ++s) {
    int id = static_cast<int>(out.original_ids.size());
    out.original_ids.push_back(-1);
    labels.emplace_back(1);
    arcs.emplace_back(out.image[sink_anchor], id);
  }
  out.graph = InfluenceGraph(static_cast<int>(out.original_ids.size()),
                             std::move(arcs), std::move(labels));
  return out;
}

}  // namespace

ReducedGraph reduce_graph_R(const InfluenceGraph& g, int i) {
  VertexSet removed = g.directly_dependent_followers(i);
  removed.set(i);
  std::vector<Rational> labels = g.labels();
  for (int s : g.successors(i).to_vector()) labels[s] = labels[s].decremented();
  return build_reduced(g, removed, labels, 0, -1);
}

ReducedGraph reduce_graph_R2(const InfluenceGraph& g, int i) {
  VertexSet removed = g.directly_dependent_followers(i);
  std::vector<Rational> labels = g.labels();
  for (int s : g.successors(i).to_vector()) labels[s] = labels[s].decremented();
  labels[i] = g.label(i);  // i keeps its own label
  return build_reduced(g, removed, labels, 2 * g.vertex_count(), i);
}

// ---------------------------------------------------------------------------
// Satisfaction, oblivious model

namespace {

void require_structural_players(const InfluenceGame& game) {
  if (game.players != game.graph.sources())
    throw EngineError(
        "hierarchical engine requires the player set to be exactly the "
        "vertices without predecessors (L ∪ I)");
}

}  // namespace

Big sat_oblivious_hierarchical(const InfluenceGame& game, int actor) {
  const InfluenceGraph& g = game.graph;
  if (actor < 0 || actor >= g.vertex_count())
    throw InputError("satisfaction: unknown actor " + std::to_string(actor));
  if (!g.has_positive_labels())
    throw ModelError("oblivious model requires positive labels");
  require_structural_players(game);
  HierarchicalDecomposition d = decompose(g);

  int n = g.vertex_count();
  int nplayers = game.players.count();
  if (!game.players.test(actor) || g.label(actor).is_zero())
    return pow2(n - 1);

  // Swing count as a difference of winning tails: the actor forced active
  // (label dropped to zero) minus the actor inert, both as a non-player.
  VertexSet others = game.players;
  others.reset(actor);
  std::vector<Rational> forced = g.labels();
  forced[actor] = Rational(0);

  auto tail = [&](const std::vector<Big>& buckets) {
    Big t(0);
    for (int k = game.quota; k <= n; ++k) t += buckets[k];
    return t;
  };
  Big with_actor = tail(hierarchical_trace_buckets(d, forced, others));
  Big without_actor = tail(hierarchical_trace_buckets(d, g.labels(), others));
  return pow2(n - 1) + pow2(n - nplayers) * (with_actor - without_actor);
}

// ---------------------------------------------------------------------------
// Satisfaction, non-oblivious model (S / S0 / S1 recursion)

namespace {

struct STab {
  int nverts = 0;
  int fi = 0;
  bool has_u = false;
  CountTable s{0, 0};   // valid when !has_u
  CountTable s0{0, 0};  // valid when has_u
  CountTable s1{0, 0};
};

CountTable convolve(const CountTable& x, int xa, int xb, const CountTable& y,
                    int ya, int yb) {
  CountTable out(xa + ya, xb + yb);
  for (int a1 = 0; a1 <= xa; ++a1)
    for (int b1 = 0; b1 <= xb; ++b1) {
      const Big& v = x.at(a1, b1);
      if (v == 0) continue;
      for (int a2 = 0; a2 <= ya; ++a2)
        for (int b2 = 0; b2 <= yb; ++b2) {
          const Big& w = y.at(a2, b2);
          if (w == 0) continue;
          out.at(a1 + a2, b1 + b2) += v * w;
        }
    }
  return out;
}

struct LayerStats {
  // Indexed by c = number of active FI vertices of the subtree below.
  std::vector<int> reach;  // R(c): layer members with f <= c
  std::vector<int> ones;   // R1(c): members forced to decide 1
  std::vector<int> zeros;  // R2(c): members forced to decide 0
  std::vector<int> ties;   // R3(c): members keeping their own bit
};

LayerStats layer_stats(const std::vector<int>& layer,
                       const std::vector<Rational>& labels, int alpha) {
  LayerStats st;
  st.reach.assign(alpha + 1, 0);
  st.ones.assign(alpha + 1, 0);
  st.zeros.assign(alpha + 1, 0);
  st.ties.assign(alpha + 1, 0);
  for (int c = 0; c <= alpha; ++c) {
    for (int v : layer) {
      const Rational& f = labels[v];
      bool le_c = f <= Rational(c);
      bool le_rest = f <= Rational(alpha - c);
      if (le_c) st.reach[c] += 1;
      if (le_c && !le_rest)
        st.ones[c] += 1;
      else if (le_rest && !le_c)
        st.zeros[c] += 1;
      else
        st.ties[c] += 1;
    }
  }
  return st;
}

// Decision class of one layer vertex at child-activation level c.
enum class TieClass { one, zero, tie };

TieClass classify(const Rational& f, int c, int alpha) {
  bool le_c = f <= Rational(c);
  bool le_rest = f <= Rational(alpha - c);
  if (le_c && !le_rest) return TieClass::one;
  if (le_rest && !le_c) return TieClass::zero;
  return TieClass::tie;
}

STab s_table(const HierarchicalDecomposition& d, int idx, int u) {
  const auto& node = d.nodes[idx];
  const auto& labels = d.labels;
  switch (node.kind) {
    case Kind::leaf: {
      int alpha = static_cast<int>(node.verts.size());
      bool has_u =
          std::find(node.verts.begin(), node.verts.end(), u) != node.verts.end();
      STab tab{alpha, alpha, has_u, CountTable(0, 0), CountTable(0, 0),
               CountTable(0, 0)};
      if (!has_u) {
        tab.s = CountTable(alpha, alpha);
        for (int a = 0; a <= alpha; ++a) tab.s.at(a, a) = binom(alpha, a);
      } else {
        tab.s0 = CountTable(alpha, alpha);
        tab.s1 = CountTable(alpha, alpha);
        for (int a = 0; a <= alpha; ++a) {
          tab.s0.at(a, a) = binom(alpha - 1, a);
          tab.s1.at(a, a) = binom(alpha - 1, a - 1);
        }
      }
      return tab;
    }
    case Kind::disjoint_union: {
      STab a = s_table(d, node.left, u);
      STab b = s_table(d, node.right, u);
      if (a.has_u && !b.has_u) {
        STab tab{a.nverts + b.nverts, a.fi + b.fi, true, CountTable(0, 0),
                 convolve(a.s0, a.nverts, a.fi, b.s, b.nverts, b.fi),
                 convolve(a.s1, a.nverts, a.fi, b.s, b.nverts, b.fi)};
        return tab;
      }
      if (b.has_u && !a.has_u) {
        STab tab{a.nverts + b.nverts, a.fi + b.fi, true, CountTable(0, 0),
                 convolve(b.s0, b.nverts, b.fi, a.s, a.nverts, a.fi),
                 convolve(b.s1, b.nverts, b.fi, a.s, a.nverts, a.fi)};
        return tab;
      }
      STab tab{a.nverts + b.nverts, a.fi + b.fi, false,
               convolve(a.s, a.nverts, a.fi, b.s, b.nverts, b.fi),
               CountTable(0, 0), CountTable(0, 0)};
      return tab;
    }
    case Kind::extend: {
      STab child = s_table(d, node.left, u);
      int layer = static_cast<int>(node.verts.size());
      int alpha = child.fi;
      LayerStats st = layer_stats(node.verts, labels, alpha);
      int nv = child.nverts + layer;
      bool u_in_layer =
          std::find(node.verts.begin(), node.verts.end(), u) != node.verts.end();

      auto extend_plain = [&](const CountTable& src) {
        // New-layer contribution to the final-one count: the forced ones
        // plus a chosen subset of the tie members; forced members' own bits
        // stay free.
        CountTable out(nv, layer);
        for (int b = 0; b <= alpha; ++b) {
          Big freebits = pow2(st.ones[b] + st.zeros[b]);
          for (int a = 0; a <= child.nverts; ++a) {
            const Big& v = src.at(a, b);
            if (v == 0) continue;
            for (int delta = 0; delta <= st.ties[b]; ++delta)
              out.at(a + st.ones[b] + delta, st.reach[b]) +=
                  v * binom(st.ties[b], delta) * freebits;
          }
        }
        return out;
      };

      if (!child.has_u && !u_in_layer) {
        STab tab{nv, layer, false, extend_plain(child.s), CountTable(0, 0),
                 CountTable(0, 0)};
        return tab;
      }
      if (child.has_u) {
        STab tab{nv, layer, true, CountTable(0, 0), extend_plain(child.s0),
                 extend_plain(child.s1)};
        return tab;
      }

      // u sits in the extended layer: split on u's decision class, which
      // depends on the child activation level b.
      CountTable s0(nv, layer), s1(nv, layer);
      for (int b = 0; b <= alpha; ++b) {
        TieClass cls = classify(labels[u], b, alpha);
        for (int a = 0; a <= child.nverts; ++a) {
          const Big& v = child.s.at(a, b);
          if (v == 0) continue;
          if (cls != TieClass::tie) {
            // u's decision is forced; only its (fixed) bit leaves the free
            // pool.
            Big freebits = pow2(st.ones[b] + st.zeros[b] - 1);
            for (int delta = 0; delta <= st.ties[b]; ++delta) {
              Big term = v * binom(st.ties[b], delta) * freebits;
              s0.at(a + st.ones[b] + delta, st.reach[b]) += term;
              s1.at(a + st.ones[b] + delta, st.reach[b]) += term;
            }
          } else {
            Big freebits = pow2(st.ones[b] + st.zeros[b]);
            for (int delta = 0; delta + 1 <= st.ties[b]; ++delta) {
              Big term = v * binom(st.ties[b] - 1, delta) * freebits;
              s0.at(a + st.ones[b] + delta, st.reach[b]) += term;
              s1.at(a + st.ones[b] + delta + 1, st.reach[b]) += term;
            }
          }
        }
      }
      STab tab{nv, layer, true, CountTable(0, 0), std::move(s0), std::move(s1)};
      return tab;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

namespace {

STab nonoblivious_tables(const InfluenceGame& game, int actor) {
  const InfluenceGraph& g = game.graph;
  if (actor < 0 || actor >= g.vertex_count())
    throw InputError("satisfaction: unknown actor " + std::to_string(actor));
  if (!g.has_positive_labels())
    throw ModelError("non-oblivious model requires positive labels");
  require_structural_players(game);
  HierarchicalDecomposition d = decompose(g);
  STab root = s_table(d, d.root, actor);
  if (!root.has_u) throw std::logic_error("actor missing from decomposition");
  return root;
}

}  // namespace

std::pair<CountTable, CountTable> nonoblivious_root_tables(
    const InfluenceGame& game, int actor) {
  STab root = nonoblivious_tables(game, actor);
  return {std::move(root.s0), std::move(root.s1)};
}

Big sat_nonoblivious_hierarchical(const InfluenceGame& game, int actor) {
  STab root = nonoblivious_tables(game, actor);
  Big sat(0);
  for (int a = 0; a <= root.nverts; ++a)
    for (int b = 0; b <= root.fi; ++b)
      sat += (a < game.quota ? root.s0.at(a, b) : root.s1.at(a, b));
  return sat;
}

}  // namespace igcount
