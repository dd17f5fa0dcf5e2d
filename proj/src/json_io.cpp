#include "igcount/json_io.hpp"

#include <fstream>
#include <sstream>

namespace igcount {

namespace {

Rational label_from_json(const Json& j) {
  if (j.is_number_unsigned() || j.is_number_integer())
    return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InputError("label must be an integer or a 'p/q' string");
}

}  // namespace

InfluenceGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs"))
    throw InputError("graph document needs 'vertices' and 'arcs'");
  const Json& verts = j.at("vertices");
  int n = static_cast<int>(verts.size());
  std::vector<Rational> labels(n, Rational(1));
  std::vector<bool> seen(n, false);
  for (const auto& v : verts) {
    if (!v.contains("id")) throw InputError("vertex entry without 'id'");
    int id = v.at("id").get<int>();
    if (id < 0 || id >= n)
      throw InputError("vertex ids must be dense and 0-based; got " +
                       std::to_string(id) + " among " + std::to_string(n));
    if (seen[id]) throw InputError("duplicate vertex id " + std::to_string(id));
    seen[id] = true;
    if (v.contains("label")) labels[id] = label_from_json(v.at("label"));
  }
  std::vector<Arc> arcs;
  for (const auto& a : j.at("arcs")) {
    if (!a.is_array() || a.size() != 2)
      throw InputError("arc entries must be [u, v] pairs");
    arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
  }
  return InfluenceGraph(n, std::move(arcs), std::move(labels));
}

Json graph_to_json(const InfluenceGraph& g) {
  Json verts = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    verts.push_back(Json{{"id", v}, {"label", g.label(v).str()}});
  Json arcs = Json::array();
  for (auto [u, v] : g.arcs()) arcs.push_back(Json::array({u, v}));
  return Json{{"vertices", std::move(verts)}, {"arcs", std::move(arcs)}};
}

DecisionModel model_from_json(const Json& j) {
  InfluenceGraph g = graph_from_json(j);
  std::string kind = j.value("model", "nonoblivious");
  if (!j.contains("quota")) throw InputError("model document needs 'quota'");
  int quota = j.at("quota").get<int>();
  if (kind == "golf") {
    Rational r = j.contains("r") ? label_from_json(j.at("r")) : Rational(1, 2);
    return DecisionModel::golf(GolfModel(std::move(g), r, quota));
  }
  VertexSet players(g.vertex_count());
  if (j.contains("players"))
    players = vertex_set_from_json(j.at("players"), g.vertex_count());
  else
    players = g.sources();
  InfluenceGame game(std::move(g), quota, std::move(players));
  if (kind == "oblivious") return DecisionModel::oblivious(std::move(game));
  if (kind == "nonoblivious")
    return DecisionModel::nonoblivious(std::move(game));
  throw InputError("unknown model kind '" + kind + "'");
}

Json model_to_json(const DecisionModel& m) {
  Json j = graph_to_json(m.graph());
  j["model"] = model_kind_name(m.kind());
  if (m.kind() == ModelKind::golf) {
    j["r"] = m.golf_model().r.str();
    j["quota"] = m.golf_model().quota;
  } else {
    j["quota"] = m.game().quota;
    j["players"] = vertex_set_to_json(m.game().players);
  }
  return j;
}

StarGame star_from_descriptor(const Json& j) {
  auto count = [&](const char* key) { return j.value(key, 0); };
  int L = count("L"), I = count("I"), R = count("R"), F = count("F");
  if (L < 0 || I < 0 || R < 0 || F < 0)
    throw InputError("star descriptor: negative class size");
  int zl = 0, zi = 0, zr = 0, zf = 0;
  if (j.contains("zero_labels")) {
    const Json& z = j.at("zero_labels");
    zl = z.value("L", 0);
    zi = z.value("I", 0);
    zr = z.value("R", 0);
    zf = z.value("F", 0);
  }
  if (zl > L || zi > I || zr > R || zf > F)
    throw InputError("star descriptor: more zero labels than class members");
  int fu = 0, u_index = 0;
  bool has_ext = j.contains("extension");
  if (has_ext) {
    const Json& e = j.at("extension");
    fu = e.value("Fu", 0);
    u_index = e.value("u", 0);
    if (R == 0) throw InputError("star descriptor: extension without a reciprocal");
    if (u_index < 0 || u_index >= R)
      throw InputError("star descriptor: extension index outside [0, R)");
    if (fu < 0) throw InputError("star descriptor: negative pendant count");
  }
  if (!j.contains("fc") || !j.contains("quota"))
    throw InputError("star descriptor needs 'fc' and 'quota'");

  StarGame s;
  s.l1 = L - zl;
  s.l0 = zl;
  s.i1 = I - zi;
  s.i0 = zi;
  s.r1 = R - zr;
  s.r0 = zr;
  s.f1 = F - zf;
  s.f0 = zf;
  s.inert = 0;
  s.has_ext = has_ext;
  s.fu = has_ext ? fu : 0;
  s.u_label = (has_ext && u_index >= R - zr) ? 0 : 1;
  s.fc = std::min<long>(label_from_json(j.at("fc")).ceil(), L + R + 1);
  s.quota = j.at("quota").get<int>();

  // canonical layout: L, I, R, F, center, pendants; zeros last per class
  int n = L + I + R + F + 1 + s.fu;
  s.cls.assign(n, StarClass::independent);
  s.zero.assign(n, false);
  s.is_inert.assign(n, false);
  int at = 0;
  auto place = [&](StarClass c, int ones, int zeros) {
    int first = at;
    for (int t = 0; t < ones + zeros; ++t, ++at) {
      s.cls[at] = c;
      s.zero[at] = t >= ones;
    }
    return first;
  };
  place(StarClass::leader, s.l1, s.l0);
  place(StarClass::independent, s.i1, s.i0);
  int r_first = place(StarClass::reciprocal, s.r1, s.r0);
  place(StarClass::follower, s.f1, s.f0);
  s.center = at;
  s.cls[at++] = StarClass::center;
  for (int t = 0; t < s.fu; ++t) s.cls[at++] = StarClass::pendant;
  s.ext_u = has_ext ? r_first + u_index : -1;
  if (s.quota < 0 || s.quota > n)
    throw ModelError("star descriptor: quota outside [0, n]");
  return s;
}

namespace {

Json node_to_json(const HierarchicalDecomposition& d, int idx) {
  const auto& node = d.nodes[idx];
  switch (node.kind) {
    case HierarchicalDecomposition::Kind::leaf: {
      Json verts = Json::array();
      for (int v : node.verts)
        verts.push_back(Json{{"id", v}, {"label", d.labels[v].str()}});
      return Json{{"kind", "leaf"}, {"vertices", std::move(verts)}};
    }
    case HierarchicalDecomposition::Kind::disjoint_union:
      return Json{{"kind", "union"},
                  {"left", node_to_json(d, node.left)},
                  {"right", node_to_json(d, node.right)}};
    case HierarchicalDecomposition::Kind::extend: {
      Json verts = Json::array();
      for (int v : node.verts)
        verts.push_back(Json{{"id", v}, {"label", d.labels[v].str()}});
      return Json{{"kind", "extend"},
                  {"subtree", node_to_json(d, node.left)},
                  {"layer", std::move(verts)}};
    }
  }
  return Json();
}

}  // namespace

Json decomposition_to_json(const HierarchicalDecomposition& d) {
  return node_to_json(d, d.root);
}

Json vertex_set_to_json(const VertexSet& s) {
  Json out = Json::array();
  for (int v : s.to_vector()) out.push_back(v);
  return out;
}

VertexSet vertex_set_from_json(const Json& j, int universe) {
  if (!j.is_array()) throw InputError("vertex set must be a JSON array");
  VertexSet s(universe);
  for (const auto& v : j) {
    int id = v.get<int>();
    if (id < 0 || id >= universe)
      throw InputError("vertex id " + std::to_string(id) +
                       " outside the graph");
    s.set(id);
  }
  return s;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
}

std::string load_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load_json_file(const std::string& path) {
  return parse_json_text(load_text_file(path));
}

}  // namespace igcount
