#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "rgk/colorings.hpp"
#include "rgk/embedding.hpp"
#include "rgk/error.hpp"
#include "rgk/goodness.hpp"
#include "rgk/invariants.hpp"
#include "rgk/ramsey.hpp"
#include "rgk/trees.hpp"

namespace rgk::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  bool json = false;
  int jobs = 1;
  std::optional<std::uint64_t> budget;
};

void add_common(CLI::App* sub, Common& c, bool with_search) {
  sub->add_flag("--json", c.json, "Emit one JSON document");
  if (!with_search) return;
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1, 256));
  sub->add_option("--budget", c.budget, "Search node cap per subgraph search")
      ->envname("RGK_BUDGET")
      ->check(CLI::PositiveNumber);
}

// Inline graph6, or @path for a file whose first line holds it.
// "@" alone is the graph6 of K_1; longer arguments starting with '@' name a file.
Graph read_graph(const std::string& arg) {
  if (arg.size() < 2 || arg[0] != '@') return decode_graph6(arg);
  std::ifstream in(arg.substr(1));
  if (!in) throw PreconditionError("cannot open graph file " + arg.substr(1));
  std::string line;
  std::getline(in, line);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
  return decode_graph6(line);
}

std::vector<int> read_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw PreconditionError(what + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw PreconditionError(what + ": empty list");
  return out;
}

std::string join_ints(const std::vector<int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

Json coloring_json(const TwoColoring& c) {
  return Json{{"N", c.order()},
              {"red_g6", encode_graph6(c.red)},
              {"blue_g6", encode_graph6(c.blue)}};
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

int cmd_snd(long long alpha, const Common& c, std::ostream& out) {
  const int value = snd(alpha);
  if (c.json) emit(out, Json{{"alpha", alpha}, {"snd", value}});
  else out << value << '\n';
  return kExitDecided;
}

int cmd_trees(int n, const Common& c, std::ostream& out) {
  const TreeSet set = enumerate_free_trees(n);
  if (c.json) {
    Json trees = Json::array();
    for (std::size_t i = 0; i < set.size(); ++i)
      trees.push_back({{"graph6", encode_graph6(set.trees[i])}, {"levels", set.levels[i]}});
    emit(out, Json{{"n", n}, {"count", set.size()}, {"trees", trees}});
  } else {
    for (const Graph& t : set.trees) out << encode_graph6(t) << '\n';
  }
  return kExitDecided;
}

int cmd_invariants(const std::string& graph, std::optional<int> h, const Common& c,
                   std::ostream& out) {
  const Graph g = read_graph(graph);
  const ChromaticProfile prof = min_color_class(g);
  Json doc{{"graph6", encode_graph6(g)},
           {"order", g.order()},
           {"edges", g.edge_count()},
           {"connected", is_connected(g)},
           {"chi", prof.chi},
           {"s", prof.s},
           {"coloring", prof.witness}};
  if (g.order() <= kCanonicalExactBound) doc["canonical"] = canonical_form(g);
  if (h) doc["burr_bound"] = burr_lower_bound(prof, *h);
  if (c.json) {
    emit(out, doc);
    return kExitDecided;
  }
  out << "order " << g.order() << '\n'
      << "edges " << g.edge_count() << '\n'
      << "connected " << (is_connected(g) ? "true" : "false") << '\n'
      << "chi " << prof.chi << '\n'
      << "s " << prof.s << '\n'
      << "coloring " << join_ints(prof.witness, ' ') << '\n';
  if (doc.contains("canonical")) out << "canonical " << doc["canonical"].get<std::string>() << '\n';
  if (h) out << "burr_bound " << doc["burr_bound"].get<long long>() << '\n';
  return kExitDecided;
}

int cmd_embed(const std::string& pattern_arg, const std::string& host_arg, const Common& c,
              std::ostream& out) {
  const Graph pattern = read_graph(pattern_arg);
  const Graph host = read_graph(host_arg);
  const auto e = find_embedding(pattern, host, {c.budget, nullptr});
  if (c.json) {
    emit(out, Json{{"found", e.has_value()}, {"map", e ? Json(e->map) : Json(nullptr)}});
  } else if (e) {
    out << format_embedding(*e) << '\n';
  } else {
    out << "NONE\n";
  }
  return kExitDecided;
}

struct GoodnessArgs {
  std::string graph;
  std::optional<int> alpha;
  std::optional<int> p;
  std::optional<std::string> family;
  std::optional<std::string> sizes;
  bool exhaustive = false;
};

Json refutation_json(const Refutation& r) {
  Json doc = coloring_json(r.coloring);
  doc["n"] = r.params.n;
  doc["case"] = r.params.case_number();
  doc["t"] = r.params.t;
  doc["q"] = r.params.q;
  doc["tree_g6"] = encode_graph6(r.params.tree);
  doc["blue_target_absent"] = r.blue_absent;
  doc["blue_explanation"] = r.blue_explanation;
  doc["red_avoids_graph"] = r.red_avoids;
  return doc;
}

int cmd_goodness(const GoodnessArgs& a, const Common& c, std::ostream& out) {
  const Graph g = read_graph(a.graph);
  DecideOptions opts;
  opts.budget = c.budget;
  opts.exhaustive = a.exhaustive;
  opts.jobs = c.jobs;

  GoodnessCertificate cert;
  if (a.sizes) {
    if (a.alpha || a.p || a.family)
      throw PreconditionError("--sizes cannot be combined with --alpha, --p or --family");
    const std::vector<int> sizes = read_ints(*a.sizes, "--sizes");
    cert = decide_goodness_multisize(g, sizes, opts);
  } else {
    if (!a.alpha || !a.p) throw PreconditionError("goodness needs --alpha and --p (or --sizes)");
    GoodnessProblem prob{g, *a.alpha, *a.p, std::nullopt};
    if (a.family) {
      const std::vector<int> qb = read_ints(*a.family, "--family");
      if (qb.size() != 2) throw PreconditionError("--family expects q,beta");
      prob.family = Family{qb[0], qb[1]};
    }
    cert = decide_goodness(prob, opts);
  }

  auto tree_g6 = [&](std::size_t i) { return encode_graph6(cert.trees.trees[i]); };
  if (c.json) {
    Json trees = Json::array();
    Json embeddings = Json::array();
    for (std::size_t i = 0; i < cert.trees.size(); ++i) {
      trees.push_back(tree_g6(i));
      embeddings.push_back(cert.embeddings[i] ? Json(cert.embeddings[i]->map) : Json(nullptr));
    }
    Json doc{{"verdict", to_string(cert.verdict)}};
    if (a.sizes) doc["sizes"] = cert.sizes;
    else doc["alpha"] = cert.alpha;
    doc["snd"] = cert.tree_order;
    doc["p"] = cert.p;
    doc["chi"] = cert.chi;
    doc["s"] = cert.s;
    doc["m"] = cert.m;
    doc["k"] = cert.k;
    doc["h"] = cert.h;
    doc["claimed_value"] = {{"slope", cert.claimed_value.slope},
                            {"intercept", cert.claimed_value.intercept},
                            {"text", cert.claimed_value.to_string()}};
    doc["trees"] = trees;
    doc["checked"] = cert.checked;
    doc["embeddings"] = embeddings;
    doc["failing_tree"] = cert.failing_tree ? Json(tree_g6(static_cast<std::size_t>(*cert.failing_tree)))
                                            : Json(nullptr);
    doc["failing_tree_index"] = cert.failing_tree ? Json(*cert.failing_tree) : Json(nullptr);
    doc["failing_trees"] = cert.failing_trees;
    doc["refutation"] = cert.refutation ? refutation_json(*cert.refutation) : Json(nullptr);
    doc["notes"] = cert.notes;
    emit(out, doc);
    return kExitDecided;
  }

  out << "verdict " << to_string(cert.verdict) << '\n';
  if (a.sizes) out << "sizes " << join_ints(cert.sizes, ',') << '\n';
  else out << "alpha " << cert.alpha << '\n';
  out << "snd " << cert.tree_order << '\n'
      << "p " << cert.p << '\n'
      << "chi " << cert.chi << '\n'
      << "s " << cert.s << '\n'
      << "m " << cert.m << '\n'
      << "claimed_value " << cert.claimed_value.to_string() << '\n';
  for (std::size_t i = 0; i < cert.trees.size(); ++i) {
    out << "tree " << i << ' ' << tree_g6(i) << ' ';
    if (cert.embeddings[i]) out << "embeds " << format_embedding(*cert.embeddings[i]);
    else if (cert.checked[i]) out << "fails";
    else out << "unchecked";
    out << '\n';
  }
  if (cert.failing_tree)
    out << "failing_tree " << tree_g6(static_cast<std::size_t>(*cert.failing_tree)) << '\n';
  if (cert.refutation) {
    const Refutation& r = *cert.refutation;
    out << "refutation N=" << r.coloring.order() << " n=" << r.params.n
        << " case=" << r.params.case_number() << " red=" << encode_graph6(r.coloring.red)
        << " blue_target_absent=" << (r.blue_absent ? "true" : "false")
        << " red_avoids_graph=" << (r.red_avoids ? "true" : "false") << '\n';
  }
  for (const auto& note : cert.notes) out << "note " << note << '\n';
  return kExitDecided;
}

struct ColoringArgs {
  int alpha = 0;
  int p = 0;
  int k = 0;
  int n = 0;
  int h = 1;
  std::string tree;
  std::optional<std::string> graph;
};

int cmd_coloring(const ColoringArgs& a, const Common& c, std::ostream& out) {
  const NecessityParams params = NecessityParams::make(a.alpha, a.p, a.k, a.n, a.h, read_graph(a.tree));
  const TwoColoring col = necessity_coloring(params);
  const PartSizes parts = necessity_target_parts(params);
  const BlueCheck blue = verify_no_blue_target(col, parts, c.budget);
  const bool model = isomorphic(col.red, necessity_red_model(params), kMaxOrder);

  Json doc = coloring_json(col);
  doc["case"] = params.case_number();
  doc["t"] = params.t;
  doc["q"] = params.q;
  doc["complementary"] = col.is_complementary();
  doc["red_matches_model"] = model;
  doc["target_parts"] = std::vector<int>(parts.parts().begin(), parts.parts().end());
  doc["blue_target_absent"] = blue.absent;
  doc["blue_explanation"] = blue.explanation;
  if (a.graph) {
    const Graph g = read_graph(*a.graph);
    const HostSymmetry sym = necessity_red_symmetry(params);
    const RedCheck red = red_avoids(col, g, {c.budget, &sym});
    doc["red_avoids_graph"] = red.avoids;
    doc["red_witness"] = red.witness ? Json(red.witness->map) : Json(nullptr);
  }
  if (c.json) {
    emit(out, doc);
    return kExitDecided;
  }
  for (const auto& [key, value] : doc.items()) {
    if (value.is_string()) out << key << ' ' << value.get<std::string>() << '\n';
    else out << key << ' ' << value.dump() << '\n';
  }
  return kExitDecided;
}

int cmd_ramsey(const std::string& g_arg, const std::string& h_arg, int max, const Common& c,
               std::ostream& out) {
  const Graph g = read_graph(g_arg);
  const Graph h = read_graph(h_arg);
  ContainmentCache cache;
  const RamseyValue r = ramsey_number(g, h, max, {c.budget, c.jobs, &cache});
  const bool exact = r.status == RamseyStatus::exact;
  if (c.json) {
    emit(out, Json{{"value", r.value ? Json(*r.value) : Json(nullptr)},
                   {"status", exact ? "exact" : "lower_bound_only"},
                   {"lower_bound", r.lower_bound},
                   {"witness", r.lower_witness ? coloring_json(*r.lower_witness) : Json(nullptr)}});
    return kExitDecided;
  }
  out << "value " << (r.value ? std::to_string(*r.value) : "none") << '\n'
      << "status " << (exact ? "exact" : "lower_bound_only") << '\n'
      << "lower_bound " << r.lower_bound << '\n';
  if (r.lower_witness)
    out << "witness_red " << encode_graph6(r.lower_witness->red) << '\n'
        << "witness_blue " << encode_graph6(r.lower_witness->blue) << '\n';
  return kExitDecided;
}

int report(bool json, std::ostream& out, std::ostream& err, const std::string& kind,
           const std::string& message, int status, const std::string& hypothesis = {}) {
  if (json) {
    Json doc{{"error", kind}, {"message", message}, {"status", status}};
    if (!hypothesis.empty()) doc["hypothesis"] = hypothesis;
    emit(out, doc);
  }
  err << "rgk: " << message << '\n';
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey goodness toolkit"};
  // -h is taken by the --h options below.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Common common;

  long long snd_alpha = 0;
  auto* snd_cmd = app.add_subcommand("snd", "Smallest non-divisor");
  snd_cmd->add_option("--alpha", snd_alpha)->required();
  add_common(snd_cmd, common, false);

  int tree_n = 0;
  auto* trees_cmd = app.add_subcommand("trees", "Free trees on n vertices, as graph6");
  trees_cmd->add_option("--n", tree_n)->required();
  add_common(trees_cmd, common, false);

  std::string inv_graph;
  std::optional<int> inv_h;
  auto* inv_cmd = app.add_subcommand("invariants", "Chromatic number and surplus");
  inv_cmd->add_option("--graph", inv_graph)->required();
  inv_cmd->add_option("--h", inv_h, "Order of H for the Burr bound");
  add_common(inv_cmd, common, false);

  std::string pattern;
  std::string host;
  auto* embed_cmd = app.add_subcommand("embed", "Subgraph containment");
  embed_cmd->add_option("--pattern", pattern)->required();
  embed_cmd->add_option("--host", host)->required();
  add_common(embed_cmd, common, true);

  GoodnessArgs ga;
  auto* good_cmd = app.add_subcommand("goodness", "Decide the tree-embedding condition");
  good_cmd->add_option("--graph", ga.graph)->required();
  good_cmd->add_option("--alpha", ga.alpha);
  good_cmd->add_option("--p", ga.p);
  good_cmd->add_option("--family", ga.family, "q,beta for H = K_{q+1}(alpha;beta)");
  good_cmd->add_option("--sizes", ga.sizes, "a1,...,ap: one-way test for K_{a1,...,ap,n}");
  good_cmd->add_flag("--exhaustive", ga.exhaustive, "Check every tree");
  add_common(good_cmd, common, true);

  ColoringArgs ca;
  auto* col_cmd = app.add_subcommand("coloring", "Extremal coloring from a tree");
  col_cmd->add_option("--alpha", ca.alpha)->required();
  col_cmd->add_option("--p", ca.p)->required();
  col_cmd->add_option("--k", ca.k)->required();
  col_cmd->add_option("--n", ca.n)->required();
  col_cmd->add_option("--h", ca.h);
  col_cmd->add_option("--tree", ca.tree)->required();
  col_cmd->add_option("--graph", ca.graph, "Also test the red side for this graph");
  add_common(col_cmd, common, true);

  std::string ram_g;
  std::string ram_h;
  int ram_max = 0;
  auto* ram_cmd = app.add_subcommand("ramsey", "Exact r(G, H) by exhaustive arrowing");
  ram_cmd->add_option("--g", ram_g)->required();
  ram_cmd->add_option("--h", ram_h)->required();
  ram_cmd->add_option("--max", ram_max)->required()->check(CLI::Range(1, kMaxEnumerationOrder));
  add_common(ram_cmd, common, true);

  const bool json_requested = std::find(args.begin(), args.end(), "--json") != args.end();
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitDecided;
    }
    return report(json_requested, out, err, "usage", e.what(), kExitPrecondition);
  }

  try {
    if (*snd_cmd) return cmd_snd(snd_alpha, common, out);
    if (*trees_cmd) return cmd_trees(tree_n, common, out);
    if (*inv_cmd) return cmd_invariants(inv_graph, inv_h, common, out);
    if (*embed_cmd) return cmd_embed(pattern, host, common, out);
    if (*good_cmd) return cmd_goodness(ga, common, out);
    if (*col_cmd) return cmd_coloring(ca, common, out);
    if (*ram_cmd) return cmd_ramsey(ram_g, ram_h, ram_max, common, out);
  } catch (const HypothesisError& e) {
    return report(common.json, out, err, "hypothesis", e.what(), kExitPrecondition, e.hypothesis());
  } catch (const PreconditionError& e) {
    return report(common.json, out, err, "precondition", e.what(), kExitPrecondition);
  } catch (const BudgetExhausted& e) {
    return report(common.json, out, err, "budget", e.what(), kExitBudget);
  }
  return report(common.json, out, err, "usage", "no subcommand", kExitPrecondition);
}

}  // namespace rgk::cli
