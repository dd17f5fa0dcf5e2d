// Command-line front end: parse graph/model documents, dispatch to the
// fastest applicable engine, emit deterministic JSON (sorted keys, counts as
// decimal strings). Exit codes: 0 ok, 2 input error, 3 engine inapplicable,
// 4 cap exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "igcount/engine.hpp"
#include "igcount/json_io.hpp"
#include "igcount/reductions.hpp"

using namespace igcount;

namespace {

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) {
        try {
          out.push_back(std::stoi(cur));
        } catch (const std::logic_error&) {
          throw InputError("cannot parse vertex id '" + cur + "'");
        }
        cur.clear();
      }
    } else {
      cur += ch;
    }
  }
  return out;
}

DecisionVector parse_bit_vector(const std::string& text, int n) {
  if (static_cast<int>(text.size()) != n)
    throw InputError("decision vector has " + std::to_string(text.size()) +
                     " bits, model has " + std::to_string(n) + " actors");
  DecisionVector x(n);
  for (int i = 0; i < n; ++i) {
    if (text[i] == '1')
      x.set(i);
    else if (text[i] != '0')
      throw InputError("decision vector must be a 0/1 string");
  }
  return x;
}

std::string bits_of(const VertexSet& s) {
  std::string out(s.universe(), '0');
  for (int v : s.to_vector()) out[v] = '1';
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct StarInput {
  std::string descriptor_path;
  bool given() const { return !descriptor_path.empty(); }
  StarGame load() const { return star_from_descriptor(load_json_file(descriptor_path)); }
};

int run(int argc, char** argv) {
  CLI::App app{"exact counting for collective decision models on influence graphs"};
  app.require_subcommand(1);

  std::string graph_path, model_path, seed_text, vector_text, edges_path;
  std::string players_text, engine_text = "auto", format = "json";
  StarInput star_in;
  int actor = -1, k_arg = -1, cap = kDefaultCap;
  bool all = false, trace_level = false, full_count = false;

  auto* spread = app.add_subcommand("spread", "activation rounds from a seed set");
  spread->add_option("--graph", graph_path, "graph JSON file")->required();
  spread->add_option("--seed", seed_text, "comma-separated vertex ids");

  auto* decide = app.add_subcommand("decide", "collective decision for one vector");
  decide->add_option("--model", model_path, "model JSON file")->required();
  decide->add_option("--vector", vector_text, "0/1 string, one bit per actor")
      ->required();

  std::string star_kind = "oblivious";
  auto* sat = app.add_subcommand("satisfaction", "exact satisfaction of an actor");
  sat->add_option("--model", model_path, "model JSON file");
  sat->add_option("--star", star_in.descriptor_path, "star descriptor JSON file");
  sat->add_option("--model-kind", star_kind,
                  "oblivious|nonoblivious, for --star input");
  sat->add_option("--actor", actor, "actor id")->required();
  sat->add_option("--engine", engine_text, "auto|bruteforce|hierarchical|star");
  sat->add_option("--cap", cap, "brute-force bit cap");

  auto* indices = app.add_subcommand("indices", "satisfaction, Rae and Banzhaf per actor");
  indices->add_option("--model", model_path, "model JSON file")->required();
  indices->add_option("--cap", cap, "brute-force bit cap");
  indices->add_option("--format", format, "json|csv");

  auto* expansion = app.add_subcommand("expansion", "|F_k(N)| bucket counts");
  expansion->add_option("--graph", graph_path, "graph JSON file");
  expansion->add_option("--star", star_in.descriptor_path, "star descriptor JSON file");
  expansion->add_option("--players", players_text,
                        "comma-separated player ids (default: all sources)");
  expansion->add_option("--k", k_arg, "single bucket");
  expansion->add_flag("--all", all, "every bucket 0..n");
  expansion->add_flag("--trace-level", trace_level, "count seeds X ⊆ N only");
  expansion->add_flag("--full-count", full_count, "count over all of 2^V (default)");
  expansion->add_option("--engine", engine_text, "auto|bruteforce|hierarchical|star");
  expansion->add_option("--cap", cap, "brute-force bit cap");
  expansion->add_option("--format", format, "json|csv");

  auto* recognize = app.add_subcommand("recognize", "structure certificates for a graph");
  recognize->add_option("--graph", graph_path, "graph JSON file")->required();

  auto* gadget = app.add_subcommand("gadget", "vertex-cover counting gadget");
  gadget->add_option("--edges", edges_path, "undirected edge list, 'u v' per line")
      ->required();

  CLI11_PARSE(app, argc, argv);
  if (trace_level && full_count)
    throw InputError("--trace-level and --full-count are exclusive");

  if (spread->parsed()) {
    InfluenceGraph g = graph_from_json(load_json_file(graph_path));
    VertexSet seed(g.vertex_count());
    for (int v : parse_id_list(seed_text)) {
      if (v < 0 || v >= g.vertex_count())
        throw InputError("seed vertex " + std::to_string(v) +
                         " outside the graph");
      seed.set(v);
    }
    Json rounds = Json::array();
    for (const auto& r : g.spread_rounds(seed))
      rounds.push_back(vertex_set_to_json(r));
    emit(Json{{"rounds", std::move(rounds)}});
    return 0;
  }

  if (decide->parsed()) {
    DecisionModel m = model_from_json(load_json_file(model_path));
    DecisionVector x = parse_bit_vector(vector_text, m.actor_count());
    DecisionVector fin = m.final_vector(x);
    emit(Json{{"decision", m.decide(x) ? 1 : 0},
              {"final", bits_of(fin)},
              {"ones", fin.count()}});
    return 0;
  }

  if (sat->parsed()) {
    auto t0 = std::chrono::steady_clock::now();
    Json out;
    if (star_in.given()) {
      StarGame s = star_in.load();
      Big value = star_kind == "nonoblivious" ? sat_nonoblivious_star(s, actor)
                                              : sat_oblivious_star(s, actor);
      out = Json{{"actor", actor},
                 {"engine", "star"},
                 {"satisfaction", big_str(value)}};
    } else {
      if (model_path.empty())
        throw InputError("satisfaction needs --model or --star");
      DecisionModel m = model_from_json(load_json_file(model_path));
      auto res = compute_satisfaction(m, actor, parse_engine(engine_text), cap);
      out = Json{{"actor", actor},
                 {"engine", res.engine_used},
                 {"satisfaction", big_str(res.value)}};
    }
    auto ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "satisfaction: wall_ms=" << ms << "\n";
    emit(out);
    return 0;
  }

  if (indices->parsed()) {
    DecisionModel m = model_from_json(load_json_file(model_path));
    int n = m.actor_count();
    auto sat_all = satisfaction_bruteforce_all(m, cap);
    PredicateGame simple = associated_simple_game(m);
    Big half = pow2(n - 1);
    Json rows = Json::array();
    std::string csv = "actor,sat,rae,banzhaf\n";
    for (int i = 0; i < n; ++i) {
      Big rae = rae_index(simple, i, cap);
      Big bz = banzhaf_value(simple, i, cap);
      if (rae != half + bz)
        throw std::logic_error("Rae/Banzhaf identity violated");
      rows.push_back(Json{{"id", i},
                          {"sat", big_str(sat_all[i])},
                          {"rae", big_str(rae)},
                          {"banzhaf", big_str(bz)}});
      csv += std::to_string(i) + "," + big_str(sat_all[i]) + "," +
             big_str(rae) + "," + big_str(bz) + "\n";
    }
    if (format == "csv")
      std::cout << csv;
    else
      emit(Json{{"actors", std::move(rows)}});
    return 0;
  }

  if (expansion->parsed()) {
    std::vector<Big> buckets;
    std::string engine_used;
    int n;
    if (star_in.given()) {
      StarGame s = star_in.load();
      buckets = star_expansion_all(s, trace_level);
      engine_used = "star";
      n = s.n();
    } else {
      if (graph_path.empty()) throw InputError("expansion needs --graph or --star");
      InfluenceGraph g = graph_from_json(load_json_file(graph_path));
      n = g.vertex_count();
      VertexSet players = g.sources();
      if (!players_text.empty()) {
        players = VertexSet(n);
        for (int v : parse_id_list(players_text)) {
          if (v < 0 || v >= n)
            throw InputError("player " + std::to_string(v) +
                             " outside the graph");
          players.set(v);
        }
      }
      auto res = compute_expansion(g, players, parse_engine(engine_text),
                                   trace_level, cap);
      buckets = std::move(res.buckets);
      engine_used = res.engine_used;
    }
    if (!all && k_arg < 0) throw InputError("expansion needs --k or --all");
    if (!all && (k_arg > n)) throw InputError("expansion: k outside [0, n]");
    if (format == "csv") {
      std::cout << "k,count\n";
      if (all)
        for (int k = 0; k <= n; ++k)
          std::cout << k << "," << big_str(buckets[k]) << "\n";
      else
        std::cout << k_arg << "," << big_str(buckets[k_arg]) << "\n";
      return 0;
    }
    Json out{{"engine", engine_used},
             {"level", trace_level ? "trace" : "full"}};
    if (all) {
      Json counts = Json::object();
      for (int k = 0; k <= n; ++k) counts[std::to_string(k)] = big_str(buckets[k]);
      out["counts"] = std::move(counts);
    } else {
      out["k"] = k_arg;
      out["count"] = big_str(buckets[k_arg]);
    }
    emit(out);
    return 0;
  }

  if (recognize->parsed()) {
    InfluenceGraph g = graph_from_json(load_json_file(graph_path));
    Json out;
    int bad = g.two_layered_violation();
    out["two_layered"] = bad < 0;
    if (bad < 0) {
      ActorPartition p = g.classify_actors();
      out["classes"] = Json{{"leaders", vertex_set_to_json(p.leaders)},
                            {"followers", vertex_set_to_json(p.followers)},
                            {"independents", vertex_set_to_json(p.independents)}};
    } else {
      out["two_layered_violation"] = bad;
    }
    std::string why;
    if (auto lay = recognize_star(g, &why)) {
      Json classes = Json::array();
      for (auto c : lay->cls) classes.push_back(star_class_name(c));
      out["star"] = Json{{"center", lay->center},
                         {"classes", std::move(classes)},
                         {"extension_reciprocal", lay->ext_u}};
    } else {
      out["star"] = nullptr;
      out["star_failure"] = why;
    }
    if (auto d = try_decompose(g, &why)) {
      out["hierarchical"] = decomposition_to_json(*d);
    } else {
      out["hierarchical"] = nullptr;
      out["hierarchical_failure"] = why;
    }
    InfluenceGame probe(g, 0, g.sources());
    out["players_with_predecessors"] = players_have_predecessors(probe);
    emit(out);
    return 0;
  }

  if (gadget->parsed()) {
    VCInstance inst = parse_edge_list(load_text_file(edges_path));
    GadgetResult res = vc_gadget(inst);
    Json out{{"graph", graph_to_json(res.graph)},
             {"players", vertex_set_to_json(res.players)},
             {"k", res.k},
             {"cover_size", (2 * inst.n) / 3},
             {"warnings", res.warnings}};
    emit(out);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
