#include "igcount/star.hpp"

#include <algorithm>

namespace igcount {

std::string star_class_name(StarClass c) {
  switch (c) {
    case StarClass::leader:
      return "leader";
    case StarClass::independent:
      return "independent";
    case StarClass::reciprocal:
      return "reciprocal";
    case StarClass::follower:
      return "follower";
    case StarClass::center:
      return "center";
    case StarClass::pendant:
      return "pendant";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

std::optional<StarLayout> layout_with_center(const InfluenceGraph& g, int c,
                                             std::string* why) {
  int n = g.vertex_count();
  StarLayout lay;
  lay.center = c;
  lay.cls.assign(n, StarClass::independent);
  lay.cls[c] = StarClass::center;
  std::vector<int> pendant_owner;
  std::vector<int> pendants;
  for (int v = 0; v < n; ++v) {
    if (v == c) continue;
    bool to_c = g.successors(v).test(c);
    bool from_c = g.predecessors(v).test(c);
    int out = g.out_degree(v);
    int in = g.in_degree(v);
    if (to_c && from_c && in == 1) {
      lay.cls[v] = StarClass::reciprocal;  // extra out-arcs vetted below
    } else if (to_c && !from_c && out == 1 && in == 0) {
      lay.cls[v] = StarClass::leader;
    } else if (from_c && !to_c && in == 1 && out == 0) {
      lay.cls[v] = StarClass::follower;
    } else if (in == 0 && out == 0) {
      lay.cls[v] = StarClass::independent;
    } else if (!to_c && !from_c && in == 1 && out == 0) {
      lay.cls[v] = StarClass::pendant;
      pendant_owner.push_back(g.predecessors(v).to_vector().front());
      pendants.push_back(v);
    } else {
      if (why)
        *why = "vertex " + std::to_string(v) +
               " does not fit any star class for center " + std::to_string(c);
      return std::nullopt;
    }
  }
  if (!pendants.empty()) {
    int u = pendant_owner.front();
    for (int o : pendant_owner)
      if (o != u) {
        if (why) *why = "pendant vertices hang off more than one owner";
        return std::nullopt;
      }
    if (lay.cls[u] != StarClass::reciprocal) {
      if (why)
        *why = "pendant owner " + std::to_string(u) + " is not a reciprocal";
      return std::nullopt;
    }
    for (int p : pendants)
      if (!(Rational(0) < g.label(p)) || !(g.label(p) <= Rational(1))) {
        if (why)
          *why = "pendant vertex " + std::to_string(p) +
                 " must carry label 1, has " + g.label(p).str();
        return std::nullopt;
      }
    lay.ext_u = u;
  }
  // A reciprocal may only point at the center, plus its pendants when it
  // owns the extension.
  for (int v = 0; v < n; ++v) {
    if (lay.cls[v] != StarClass::reciprocal) continue;
    for (int w : g.successors(v).to_vector()) {
      if (w == c) continue;
      if (v != lay.ext_u || lay.cls[w] != StarClass::pendant) {
        if (why)
          *why = "arc (" + std::to_string(v) + "," + std::to_string(w) +
                 ") leaves reciprocal " + std::to_string(v) +
                 " without entering the center";
        return std::nullopt;
      }
    }
  }
  return lay;
}

}  // namespace

std::optional<StarLayout> recognize_star(const InfluenceGraph& g,
                                         std::string* why) {
  if (g.vertex_count() == 0) {
    if (why) *why = "graph has no vertices";
    return std::nullopt;
  }
  std::string last = "no vertex works as the center";
  for (int c = 0; c < g.vertex_count(); ++c) {
    auto lay = layout_with_center(g, c, &last);
    if (lay) return lay;
  }
  if (why) *why = last;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Normalization

StarGame normalize_star(const InfluenceGraph& g, const StarLayout& layout,
                        int quota) {
  int n = g.vertex_count();
  if (static_cast<int>(layout.cls.size()) != n || layout.center < 0)
    throw InputError("star: malformed layout");
  StarGame s;
  s.cls = layout.cls;
  s.zero.assign(n, false);
  s.is_inert.assign(n, false);
  s.center = layout.center;
  s.ext_u = layout.ext_u;
  s.quota = quota;
  for (int v = 0; v < n; ++v) {
    long t = g.label(v).ceil();
    switch (layout.cls[v]) {
      case StarClass::center:
        break;
      case StarClass::leader:
      case StarClass::independent:
        s.zero[v] = t == 0;
        break;
      case StarClass::reciprocal:
        if (t >= 2) {
          // never influenced by the center: an additional opinion leader
          if (v == layout.ext_u)
            throw EngineError(
                "extended star: pendant owner " + std::to_string(v) +
                " has label above 1 and cannot stay a reciprocal");
          s.cls[v] = StarClass::leader;
        } else {
          s.zero[v] = t == 0;
        }
        break;
      case StarClass::follower:
        if (t >= 2)
          s.is_inert[v] = true;
        else
          s.zero[v] = t == 0;
        break;
      case StarClass::pendant:
        break;
    }
  }
  for (int v = 0; v < n; ++v) {
    switch (s.cls[v]) {
      case StarClass::leader:
        (s.zero[v] ? s.l0 : s.l1) += 1;
        break;
      case StarClass::independent:
        (s.zero[v] ? s.i0 : s.i1) += 1;
        break;
      case StarClass::reciprocal:
        (s.zero[v] ? s.r0 : s.r1) += 1;
        break;
      case StarClass::follower:
        if (s.is_inert[v])
          s.inert += 1;
        else
          (s.zero[v] ? s.f0 : s.f1) += 1;
        break;
      case StarClass::pendant:
        s.fu += 1;
        break;
      case StarClass::center:
        break;
    }
  }
  s.has_ext = layout.ext_u >= 0;
  if (s.has_ext) s.u_label = s.zero[layout.ext_u] ? 0 : 1;
  int lr = s.l1 + s.l0 + s.r1 + s.r0;
  s.fc = static_cast<int>(
      std::min<long>(g.label(layout.center).ceil(), lr + 1));
  if (quota < 0 || quota > n)
    throw ModelError("star: quota " + std::to_string(quota) +
                     " outside [0, n]");
  return s;
}

VertexSet StarGame::players() const {
  VertexSet p(static_cast<int>(cls.size()));
  for (std::size_t v = 0; v < cls.size(); ++v)
    if (cls[v] == StarClass::leader || cls[v] == StarClass::independent ||
        cls[v] == StarClass::reciprocal)
      p.set(static_cast<int>(v));
  return p;
}

std::optional<StarGame> try_star_game(const InfluenceGame& game,
                                      std::string* why) {
  const InfluenceGraph& g = game.graph;
  std::string last = "no vertex works as the center";
  for (int c = 0; c < g.vertex_count(); ++c) {
    auto lay = layout_with_center(g, c, &last);
    if (!lay) continue;
    try {
      StarGame s = normalize_star(g, *lay, game.quota);
      if (s.players() == game.players) return s;
      last = "star layout found, but the game's player set is not L ∪ R ∪ I";
    } catch (const EngineError& e) {
      last = e.what();
    }
  }
  if (why) *why = last;
  return std::nullopt;
}

InfluenceGraph star_to_graph(const StarGame& s) {
  int n = s.n();
  std::vector<Arc> arcs;
  std::vector<Rational> labels(n, Rational(1));
  for (int v = 0; v < n; ++v) {
    switch (s.cls[v]) {
      case StarClass::leader:
        arcs.emplace_back(v, s.center);
        break;
      case StarClass::reciprocal:
        arcs.emplace_back(v, s.center);
        arcs.emplace_back(s.center, v);
        break;
      case StarClass::follower:
        arcs.emplace_back(s.center, v);
        break;
      case StarClass::pendant:
        arcs.emplace_back(s.ext_u, v);
        break;
      case StarClass::independent:
      case StarClass::center:
        break;
    }
    if (v == s.center)
      labels[v] = Rational(s.fc);
    else if (s.is_inert[v])
      labels[v] = Rational(2);
    else if (s.zero[v])
      labels[v] = Rational(0);
  }
  return InfluenceGraph(n, std::move(arcs), std::move(labels));
}

// ---------------------------------------------------------------------------
// Closed-form counting

namespace {

// Counting core after folding out zero labels: every remaining label is 1,
// `shift` always-active vertices have left the graph, and the bits of
// zero-label players contribute a free factor of 2^zero_players per trace.
struct Core {
  int l = 0, i = 0, r = 0, f = 0, fu = 0;
  bool ext = false;
  int fc = 0;
  int shift = 0;
  int zero_players = 0;

  int max_k() const { return l + i + r + f + fu + 1; }
};

Core core_of(const StarGame& s) {
  Core c;
  c.l = s.l1;
  c.i = s.i1;
  c.r = s.r1;
  c.f = s.f1;
  int z2 = s.l0 + s.r0;
  c.shift = s.l0 + s.i0 + s.r0 + s.f0;
  c.zero_players = s.l0 + s.i0 + s.r0;
  c.fc = std::max(s.fc - z2, 0);
  if (s.has_ext) {
    if (s.u_label == 0)
      c.shift += s.fu;  // an always-active owner drags its pendants along
    else {
      c.ext = true;
      c.fu = s.fu;
    }
  }
  return c;
}

// |{Y ⊆ label-1 players : |F(Y)| = k}| with every label 1 and center
// threshold fc. Split on whether the center fires.
Big core_trace(const Core& c, long k) {
  if (k < 0) return Big(0);
  if (c.fc == 0)
    return binom(c.l + c.i, k - 1 - c.r - c.f - c.fu) * pow2(c.r);
  Big total(0);
  if (!c.ext) {
    if (k < c.fc) return binom(c.l + c.r + c.i, k);
    for (int s = 0; s <= c.fc - 1; ++s)
      total += binom(c.l + c.r, s) * binom(c.i, k - s);
    for (int li = 0; li <= c.l; ++li)
      for (int rj = 0; rj <= c.r; ++rj)
        if (li + rj >= c.fc)
          total += binom(c.l, li) * binom(c.r, rj) *
                   binom(c.i, k - li - (c.r + c.f + 1));
    return total;
  }
  int lr = c.l + c.r;
  if (k < c.fc)
    return binom(lr - 1 + c.i, k) + binom(lr - 1 + c.i, k - c.fu - 1);
  for (int s = 0; s <= c.fc - 1; ++s)
    total += binom(lr - 1, s) * binom(c.i, k - s);
  for (int s = 1; s <= c.fc - 1; ++s)
    total += binom(lr - 1, s - 1) * binom(c.i, k - s - c.fu);
  for (int li = 0; li <= c.l; ++li)
    for (int rj = 0; rj <= c.r; ++rj)
      if (li + rj >= c.fc)
        total += binom(c.l, li) * binom(c.r, rj) *
                 binom(c.i, k - li - (c.r + c.f + c.fu + 1));
  return total;
}

Big trace_bucket(const Core& c, long k) {
  return pow2(c.zero_players) * core_trace(c, k - c.shift);
}

Big trace_tail(const Core& c, long quota) {
  Big total(0);
  long lo = std::max<long>(quota - c.shift, 0);
  for (long k = lo; k <= c.max_k(); ++k) total += core_trace(c, k);
  return pow2(c.zero_players) * total;
}

}  // namespace

Big star_expansion_count(const StarGame& s, int k) {
  if (k < 0 || k > s.n()) throw InputError("expansion: k outside [0, n]");
  Big free = pow2(s.n() - s.player_count());
  return free * trace_bucket(core_of(s), k);
}

Big extended_star_expansion_count(const StarGame& s, int k) {
  return star_expansion_count(s, k);
}

std::vector<Big> star_expansion_all(const StarGame& s, bool trace_level) {
  Core c = core_of(s);
  Big free = trace_level ? Big(1) : pow2(s.n() - s.player_count());
  std::vector<Big> out(s.n() + 1, Big(0));
  for (int k = 0; k <= s.n(); ++k) out[k] = free * trace_bucket(c, k);
  return out;
}

std::pair<Big, Big> star_winning_losing(const StarGame& s) {
  auto buckets = star_expansion_all(s);
  Big w(0), l(0);
  for (int k = 0; k <= s.n(); ++k) (k >= s.quota ? w : l) += buckets[k];
  return {w, l};
}

// ---------------------------------------------------------------------------
// Satisfaction, oblivious model

Big sat_oblivious_star(const StarGame& s, int actor) {
  int n = s.n();
  if (actor < 0 || actor >= n)
    throw InputError("satisfaction: unknown actor " + std::to_string(actor));
  StarClass cls = s.cls[actor];
  bool player = cls == StarClass::leader || cls == StarClass::independent ||
                cls == StarClass::reciprocal;
  if (!player || s.zero[actor]) return pow2(n - 1);

  // Swing traces over N∖{actor}: the actor forced active minus the actor
  // inert. Forcing removes it and lowers the center threshold when it was a
  // predecessor of the center; demoting a reciprocal turns it (and its
  // pendants) into plain followers.
  Core base = core_of(s);
  Core t1 = base, t2 = base;
  switch (cls) {
    case StarClass::leader:
      t1.l -= 1;
      t1.fc = std::max(t1.fc - 1, 0);
      t1.shift += 1;
      t2.l -= 1;
      break;
    case StarClass::independent:
      t1.i -= 1;
      t1.shift += 1;
      t2.i -= 1;
      break;
    case StarClass::reciprocal:
      if (s.has_ext && actor == s.ext_u) {
        t1.r -= 1;
        t1.fc = std::max(t1.fc - 1, 0);
        t1.shift += 1 + s.fu;
        t1.ext = false;
        t1.fu = 0;
        t2.r -= 1;
        t2.f += 1 + s.fu;
        t2.ext = false;
        t2.fu = 0;
      } else {
        t1.r -= 1;
        t1.fc = std::max(t1.fc - 1, 0);
        t1.shift += 1;
        t2.r -= 1;
        t2.f += 1;
      }
      break;
    default:
      break;
  }
  Big swing = trace_tail(t1, s.quota) - trace_tail(t2, s.quota);
  return pow2(n - 1) + pow2(n - s.player_count()) * swing;
}

// ---------------------------------------------------------------------------
// Satisfaction, non-oblivious model

namespace {

// Counts over a tie-divergence set split by the membership bit of one actor
// per player class. `in` holds vectors with x_i = 1, `out` with x_i = 0.
struct Split {
  Big in{0};
  Big out{0};
};

struct TieCounts {
  Big total{0};
  Split leader, indep, lr_member, u;
};

// Vectors with x_c = 0 where the center fires but both yes- and no-sides
// reach its threshold, and exactly quota actors end up activated.
TieCounts tie_high(const StarGame& s) {
  TieCounts out;
  int L = s.l1, R = s.r1, I = s.i1;
  int fu = s.has_ext ? s.fu : 0;
  for (int el = 0; el <= L; ++el) {
    if (L - el < s.fc) continue;  // no-side must also reach the threshold
    long iota = s.quota - 1 - R - s.f1 - fu - el;
    if (iota < 0 || iota > I) continue;
    for (int rho = 0; rho <= R; ++rho) {
      if (el + rho < s.fc) continue;
      Big bi = binom(I, iota);
      out.total += binom(L, el) * binom(R, rho) * bi;
      out.leader.in += binom(L - 1, el - 1) * binom(R, rho) * bi;
      out.leader.out += binom(L - 1, el) * binom(R, rho) * bi;
      out.lr_member.in += binom(L, el) * binom(R - 1, rho - 1) * bi;
      out.lr_member.out += binom(L, el) * binom(R - 1, rho) * bi;
      out.indep.in += binom(L, el) * binom(R, rho) * binom(I - 1, iota - 1);
      out.indep.out += binom(L, el) * binom(R, rho) * binom(I - 1, iota);
    }
  }
  // every reciprocal, u included, splits the same way here
  out.u = out.lr_member;
  Big free = pow2(s.f1 + s.inert + fu);
  out.total *= free;
  for (Split* sp : {&out.leader, &out.indep, &out.lr_member, &out.u}) {
    sp->in *= free;
    sp->out *= free;
  }
  return out;
}

// Vectors with x_c = 1 where the center stays quiet on both sides and
// exactly quota-1 actors end up activated.
TieCounts tie_low(const StarGame& s) {
  TieCounts out;
  int L = s.l1, R = s.r1, I = s.i1;
  int lr = L + R;
  int fu = s.has_ext ? s.fu : 0;
  int lo = std::max(0, lr - s.fc + 1);
  int hi = s.fc - 1;
  for (int seed = lo; seed <= hi && seed <= lr; ++seed) {
    if (!s.has_ext) {
      long iota = s.quota - 1 - seed;
      if (iota < 0 || iota > I) continue;
      Big bi = binom(I, iota);
      out.total += binom(lr, seed) * bi;
      out.leader.in += binom(lr - 1, seed - 1) * bi;
      out.leader.out += binom(lr - 1, seed) * bi;
      out.indep.in += binom(lr, seed) * binom(I - 1, iota - 1);
      out.indep.out += binom(lr, seed) * binom(I - 1, iota);
    } else {
      // u absent from the seed
      long iota = s.quota - 1 - seed;
      if (iota >= 0 && iota <= I) {
        Big bi = binom(I, iota);
        out.total += binom(lr - 1, seed) * bi;
        out.leader.in += binom(lr - 2, seed - 1) * bi;
        out.leader.out += binom(lr - 2, seed) * bi;
        out.u.out += binom(lr - 1, seed) * bi;
        out.indep.in += binom(lr - 1, seed) * binom(I - 1, iota - 1);
        out.indep.out += binom(lr - 1, seed) * binom(I - 1, iota);
      }
      // u in the seed: its pendants are activated as well
      iota = s.quota - 1 - seed - fu;
      if (iota >= 0 && iota <= I) {
        Big bi = binom(I, iota);
        out.total += binom(lr - 1, seed - 1) * bi;
        out.leader.in += binom(lr - 2, seed - 2) * bi;
        out.leader.out += binom(lr - 2, seed - 1) * bi;
        out.u.in += binom(lr - 1, seed - 1) * bi;
        out.indep.in += binom(lr - 1, seed - 1) * binom(I - 1, iota - 1);
        out.indep.out += binom(lr - 1, seed - 1) * binom(I - 1, iota);
      }
    }
  }
  if (!s.has_ext) {
    out.lr_member = out.leader;  // leaders and reciprocals are exchangeable
  } else {
    out.lr_member = out.leader;  // non-u members of L ∪ R
  }
  Big free = pow2(s.f1 + s.inert + fu);
  out.total *= free;
  for (Split* sp : {&out.leader, &out.indep, &out.lr_member, &out.u}) {
    sp->in *= free;
    sp->out *= free;
  }
  return out;
}

}  // namespace

Big sat_nonoblivious_star(const StarGame& s, int actor) {
  int n = s.n();
  if (actor < 0 || actor >= n)
    throw InputError("satisfaction: unknown actor " + std::to_string(actor));
  if (s.l0 + s.i0 + s.r0 + s.f0 > 0 || s.fc == 0)
    throw ModelError("non-oblivious model requires positive labels");
  // A follower with an unreachable label keeps its own bit in this model,
  // which the {0,1}-label formulas cannot fold away.
  if (s.inert > 0)
    throw EngineError(
        "star engine (non-oblivious) requires follower labels at most 1");

  TieCounts da = tie_high(s);
  TieCounts db = tie_low(s);
  Big base = sat_oblivious_star(s, actor);
  StarClass cls = s.cls[actor];
  switch (cls) {
    case StarClass::center:
      return base + da.total + db.total;
    case StarClass::leader:
      return base + (da.leader.out - da.leader.in) +
             (db.leader.in - db.leader.out);
    case StarClass::independent:
      return base + (da.indep.out - da.indep.in) + (db.indep.in - db.indep.out);
    case StarClass::reciprocal: {
      const Split& a = da.lr_member;  // u splits like any reciprocal here
      const Split& b = (s.has_ext && actor == s.ext_u) ? db.u : db.lr_member;
      return base + (a.out - a.in) + (b.in - b.out);
    }
    case StarClass::follower:
    case StarClass::pendant:
      return base;  // the divergence sets are balanced in their bit
  }
  return base;
}

}  // namespace igcount
