#pragma once

// Command-line surface: per-object queries, the pair verifiers, and the
// census sweep, with JSON reports and an advisory on-disk result cache.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rf/complexes.hpp"
#include "rf/configuration.hpp"
#include "rf/exactmath.hpp"
#include "rf/graphs.hpp"
#include "rf/polytopes.hpp"
#include "rf/toric.hpp"

namespace rf::cli {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

// ---------------------------------------------------------------------------
// serialization helpers

inline json to_json(const Int& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

inline json to_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_json(x));
  return a;
}

inline json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return json{{"d", g.d}, {"edges", edges}};
}

inline json config_json(const Configuration& c) {
  json cols = json::array();
  for (const IntVec& col : c.cols) cols.push_back(to_json(col));
  return json{{"d", c.d}, {"columns", cols}, {"sharp", c.sharp}, {"y_block", c.y_block}};
}

inline json complex_json(const SimplicialComplex& sc) {
  json faces = json::array();
  for (uint64_t f : sc.faces) faces.push_back(sc.face_vertices(f));
  return json{{"d", sc.d}, {"faces", faces}};
}

inline json polytope_json(const Polytope& P) {
  json pts = json::array();
  for (const IntVec& v : P.vertices()) pts.push_back(to_json(v));
  return json{{"d", P.d}, {"points", pts}};
}

inline json facet_report_json(const Polytope& P) {
  json fs = json::array();
  for (const Facet& f : P.facets)
    fs.push_back(json{{"normal", to_json(f.normal)},
                      {"rhs", rat_to_string(f.rhs)},
                      {"integral_at_one", facet_integral_at_one(f)}});
  return fs;
}

// ---------------------------------------------------------------------------
// input loading (text formats, with a JSON alternative for graphs)

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const std::string& path) {
  std::string text = slurp(path);
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    json j = json::parse(text);
    Graph g(j.at("d").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
  }
  std::istringstream in(text);
  return read_graph_text(in);
}

inline Configuration load_configuration(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_configuration(in);
}

inline SimplicialComplex load_complex(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_complex_text(in);
}

// ---------------------------------------------------------------------------
// advisory result cache: one JSON file per (command, input-hash)

inline std::string cache_dir() {
  if (const char* env = std::getenv("REFLEXIVE_FORGE_CACHE")) return env;
  return ".rf-cache";
}

inline uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string cache_path(const std::string& command, const std::string& key) {
  std::ostringstream name;
  name << command << "-" << std::hex << fnv1a(key) << ".json";
  return (std::filesystem::path(cache_dir()) / name.str()).string();
}

inline std::optional<json> cache_load(const std::string& command, const std::string& key) {
  std::ifstream in(cache_path(command, key));
  if (!in) return std::nullopt;
  try {
    json j;
    in >> j;
    return j;
  } catch (...) {
    return std::nullopt;  // advisory: a corrupt cache entry is just a miss
  }
}

inline void cache_store(const std::string& command, const std::string& key, const json& body) {
  std::error_code ec;
  std::filesystem::create_directories(cache_dir(), ec);
  if (ec) return;
  std::ofstream out(cache_path(command, key));
  if (out) out << body.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// text rendering

inline void render_text(const json& j, std::ostream& out, int indent = 0) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        out << pad << it.key() << ":\n";
        render_text(it.value(), out, indent + 2);
      } else {
        out << pad << it.key() << ": " << it.value().dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& el : j) {
      if (el.is_object() || el.is_array()) {
        out << pad << "-\n";
        render_text(el, out, indent + 2);
      } else {
        out << pad << "- " << el.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

// ---------------------------------------------------------------------------
// command bodies: each returns (verdict, report body sans elapsed)

struct CommandResult {
  bool verdict = false;
  json body;
};

inline CommandResult cmd_perfect(const Graph& g) {
  CommandResult r;
  r.body["command"] = "perfect";
  r.body["inputs"] = {{"graph", graph_json(g)}};
  auto hole = find_odd_hole(g);
  auto antihole = find_odd_hole(complement(g));
  r.verdict = !hole && !antihole;
  r.body["verdict"] = r.verdict;
  json cert;
  if (hole) cert["odd_hole"] = *hole;
  if (antihole) cert["odd_antihole"] = *antihole;
  cert["clique_number"] = clique_number(g);
  cert["chromatic_number"] = chromatic_number(g);
  r.body["certificates"] = cert;
  return r;
}

inline CommandResult cmd_stable_complex(const Graph& g) {
  CommandResult r;
  r.body["command"] = "stable-complex";
  r.body["inputs"] = {{"graph", graph_json(g)}};
  SimplicialComplex sc = stable_set_complex(g);
  Configuration conf = incidence_matrix(sc);
  r.verdict = true;
  r.body["verdict"] = true;
  r.body["certificates"] = {{"complex", complex_json(sc)},
                            {"face_count", sc.faces.size()},
                            {"incidence", config_json(conf)}};
  return r;
}

inline CommandResult cmd_harmony(const Configuration& a, const Configuration& b) {
  CommandResult r;
  r.body["command"] = "harmony";
  r.body["inputs"] = {{"a", config_json(a)}, {"b", config_json(b)}};
  r.verdict = is_harmony(a, b);
  r.body["verdict"] = r.verdict;
  json cert;
  if (!r.verdict) {
    // locate one violating pair for the report
    IntVec zero(a.d, Int(0));
    std::set<IntVec> acols(a.cols.begin(), a.cols.end());
    std::set<IntVec> bcols(b.cols.begin(), b.cols.end());
    acols.insert(zero);
    bcols.insert(zero);
    for (const IntVec& ca : acols)
      for (const IntVec& cb : bcols) {
        auto [cp, cm] = positive_negative_parts(vec_sub(ca, cb));
        if (!acols.count(cp) || !bcols.count(cm)) {
          cert["violation"] = {{"a", to_json(ca)},
                               {"b", to_json(cb)},
                               {"c_plus", to_json(cp)},
                               {"c_minus", to_json(cm)}};
          goto done;
        }
      }
  done:;
  }
  r.body["certificates"] = cert;
  return r;
}

inline CommandResult cmd_toric_gb(const Configuration& c, const std::string& order_csv,
                                  int degree_bound) {
  CommandResult r;
  r.body["command"] = "toric-gb";
  MonomialOrder order = order_csv.empty() ? MonomialOrder::identity(c.num_vars())
                                          : parse_order_ascending(c, order_csv);
  r.body["inputs"] = {{"config", config_json(c)},
                      {"order", format_order_ascending(c, order)},
                      {"degree_bound", degree_bound}};
  std::vector<Binomial> gens = toric_ideal_generators(c);
  GroebnerBasis gb = buchberger(gens, order);
  MonomialIdeal init = initial_ideal(gb);
  json gb_json = json::array();
  for (const Binomial& bnm : gb.elements) gb_json.push_back(format_binomial(c, bnm));
  json init_json = json::array();
  for (const Expo& m : init.gens) init_json.push_back(format_monomial(c, m));
  bool fiber_ok = true;
  if (degree_bound > 0) fiber_ok = standard_monomials_biject_fibers(c, init, degree_bound);
  r.verdict = fiber_ok;
  r.body["verdict"] = r.verdict;
  json cert = {{"groebner_basis", gb_json},
               {"initial_ideal", init_json},
               {"squarefree", init.squarefree()}};
  if (degree_bound > 0) cert["fiber_check"] = fiber_ok;
  r.body["certificates"] = cert;
  return r;
}

inline CommandResult cmd_initial(const Configuration& c, const std::string& order_csv) {
  CommandResult r;
  r.body["command"] = "initial";
  MonomialOrder order = order_csv.empty() ? MonomialOrder::identity(c.num_vars())
                                          : parse_order_ascending(c, order_csv);
  r.body["inputs"] = {{"config", config_json(c)}, {"order", format_order_ascending(c, order)}};
  GroebnerBasis gb = buchberger(toric_ideal_generators(c), order);
  MonomialIdeal init = initial_ideal(gb);
  json init_json = json::array();
  for (const Expo& m : init.gens) init_json.push_back(format_monomial(c, m));
  r.verdict = init.squarefree();
  r.body["verdict"] = r.verdict;
  r.body["certificates"] = {{"initial_ideal", init_json}, {"squarefree", r.verdict}};
  return r;
}

inline CommandResult cmd_compressed(const Configuration& c) {
  CommandResult r;
  r.body["command"] = "compressed";
  r.body["inputs"] = {{"config", config_json(c)}};
  r.verdict = is_compressed(c);
  r.body["verdict"] = r.verdict;
  std::vector<IntVec> pts = full_dim_lattice_coords(c.all_points());
  json widths = json::array();
  if (!pts[0].empty()) {
    Polytope P = hull(pts);
    for (const Facet& f : P.facets)
      widths.push_back(json{{"normal", to_json(f.normal)},
                            {"rhs", rat_to_string(f.rhs)},
                            {"width", to_json(facet_width(P, f))}});
  }
  r.body["certificates"] = {{"facet_widths", widths},
                            {"cross_checked", c.num_cols() <= 6}};
  return r;
}

inline CommandResult cmd_merge_check(const Graph& g1, const Graph& g2) {
  CommandResult r;
  r.body["command"] = "merge-check";
  r.body["inputs"] = {{"g1", graph_json(g1)}, {"g2", graph_json(g2)}};
  Polytope P = merge_polytope(stable_set_complex(g1), stable_set_complex(g2));
  bool fano = is_fano(P);
  bool gorenstein = fano && is_gorenstein_fano(P);
  bool terminal = fano && is_terminal(P);
  bool smooth = fano && is_smooth(P);
  r.verdict = fano && gorenstein && terminal;
  r.body["verdict"] = r.verdict;
  r.body["certificates"] = {{"perfect_g1", is_perfect(g1)},
                            {"perfect_g2", is_perfect(g2)},
                            {"fano", fano},
                            {"gorenstein", gorenstein},
                            {"terminal", terminal},
                            {"smooth", smooth},
                            {"vertex_count", P.vertex_ids.size()},
                            {"normalized_volume", to_json(normalized_volume(P))},
                            {"polytope", polytope_json(P)},
                            {"facets", facet_report_json(P)}};
  return r;
}

inline CommandResult cmd_theorem1(const Configuration& a, const Configuration& b) {
  CommandResult r;
  r.body["command"] = "theorem1";
  r.body["inputs"] = {{"a", config_json(a)}, {"b", config_json(b)}};
  try {
    MergedInitialCheck chk = verify_merged_initial(a, b);
    json pairs = json::array();
    for (auto [i, j] : chk.plan.support_pairs) pairs.push_back({i, j});
    json predicted = json::array();
    for (const Expo& m : chk.plan.predicted_initial.gens)
      predicted.push_back(format_monomial(chk.plan.merged, m));
    json computed = json::array();
    for (const Expo& m : chk.computed_initial.gens)
      computed.push_back(format_monomial(chk.plan.merged, m));
    auto tri = triangulation_from_initial_ideal(chk.plan.merged, chk.computed_initial);
    Polytope P = hull(chk.plan.merged.all_points());
    r.verdict = chk.matches;
    r.body["verdict"] = r.verdict;
    r.body["certificates"] = {
        {"merged_order", format_order_ascending(chk.plan.merged, chk.plan.order)},
        {"support_pairs", pairs},
        {"predicted_initial", predicted},
        {"computed_initial", computed},
        {"squarefree", chk.squarefree},
        {"triangulation",
         {{"simplices", tri.simplices},
          {"unimodular", tri.unimodular},
          {"quadratic", tri.quadratic},
          {"all_contain_zero_column", tri.all_contain_zero_col},
          {"volume", to_json(tri.total_volume)}}},
        {"merged_polytope",
         {{"gorenstein_fano", is_gorenstein_fano(P)},
          {"normalized_volume", to_json(normalized_volume(P))},
          {"vertex_count", P.vertex_ids.size()}}}};
  } catch (const NotHarmony& e) {
    r.verdict = false;
    r.body["verdict"] = false;
    r.body["certificates"] = {{"hypothesis_failure", e.what()}};
  } catch (const NotSquarefreeInput& e) {
    r.verdict = false;
    r.body["verdict"] = false;
    r.body["certificates"] = {{"hypothesis_failure", e.what()}};
  }
  return r;
}

inline CommandResult cmd_obstruction(const SimplicialComplex& sc) {
  CommandResult r;
  r.body["command"] = "obstruction";
  r.body["inputs"] = {{"complex", complex_json(sc)}};
  Polytope P = merge_polytope(sc, sc);
  bool gorenstein = is_gorenstein_fano(P);

  std::optional<ObstructionKind> kind;
  std::vector<int> V;
  std::string kind_name;
  auto flag_graph = is_flag(sc);
  if (!flag_graph) {
    // smallest minimal nonface, lexicographic
    auto nfs = minimal_nonfaces(sc);
    uint64_t best = 0;
    int best_size = -1;
    for (uint64_t nf : nfs) {
      int sz = std::popcount(nf);
      if (sz < 3) continue;
      if (best_size < 0 || sz < best_size || (sz == best_size && nf < best)) {
        best = nf;
        best_size = sz;
      }
    }
    if (best_size > 0) {
      kind = ObstructionKind::nonflag;
      kind_name = "nonflag";
      V = sc.face_vertices(best);
    }
  } else if (auto hole = find_odd_hole(*flag_graph)) {
    kind = ObstructionKind::oddhole;
    kind_name = "oddhole";
    V = *hole;
    std::sort(V.begin(), V.end());
  } else if (auto antihole = find_odd_hole(complement(*flag_graph))) {
    kind = ObstructionKind::antihole;
    kind_name = "antihole";
    V = *antihole;
    std::sort(V.begin(), V.end());
  }

  json cert = {{"gorenstein_fano", gorenstein}};
  if (kind) {
    bool certified = verify_obstruction_facet(P, *kind, V);
    Int rhs = kind == ObstructionKind::nonflag  ? Int(V.size() - 1)
              : kind == ObstructionKind::oddhole ? Int((V.size() - 1) / 2)
                                                 : Int(2);
    cert["kind"] = kind_name;
    cert["vertices"] = V;
    cert["hyperplane_rhs"] = to_json(rhs);
    cert["certified"] = certified;
    r.verdict = certified && !gorenstein;
  } else {
    cert["kind"] = "none";
    r.verdict = false;  // no obstruction exists: the merged polytope is reflexive
  }
  r.body["verdict"] = r.verdict;
  r.body["certificates"] = cert;
  return r;
}

inline CommandResult cmd_census(int n, bool deep, bool allow_n7) {
  CommandResult r;
  r.body["command"] = "census";
  r.body["inputs"] = {{"n", n}, {"deep", deep}};
  if (n < 2 || n > 7 || (n == 7 && !allow_n7))
    throw GuardError(n == 7 ? "census: n = 7 requires --allow-n7 (long-running)"
                            : "census: n out of range 2..6");
  auto reps = perfect_class_reps(n);
  long long count = static_cast<long long>(reps.size());
  long long pairs = count * (count + 1) / 2;
  json cert = {{"perfect_graphs", count}, {"perfect_pairs", pairs}};
  r.verdict = true;
  bool verify_pairs = n <= 4 || (deep && n <= 6);
  if (verify_pairs) {
    long long checked = 0, good = 0;
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i; j < reps.size(); ++j) {
        Polytope P =
            merge_polytope(stable_set_complex(reps[i]), stable_set_complex(reps[j]));
        ++checked;
        if (is_fano(P) && is_gorenstein_fano(P) && is_terminal(P)) ++good;
      }
    cert["pairs_checked"] = checked;
    cert["pairs_gorenstein_terminal"] = good;
    r.verdict = (checked == good);
  }
  r.body["verdict"] = r.verdict;
  r.body["certificates"] = cert;
  return r;
}

// ---------------------------------------------------------------------------
// driver

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"reflexive polytopes from pairs of perfect graphs, with toric-ideal certificates"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool text_mode = false, json_mode = false, no_cache = false;
  app.add_flag("--text", text_mode, "human-readable output");
  app.add_flag("--json", json_mode, "JSON output (default)");
  app.add_flag("--no-cache", no_cache, "bypass the result cache");

  std::string graph_path, g1_path, g2_path, a_path, b_path, config_path, complex_path;
  std::string order_csv;
  int degree_bound = 0;
  int census_n = 0;
  bool deep = false, allow_n7 = false;

  auto* sc_perfect = app.add_subcommand("perfect", "decide perfection of a graph");
  sc_perfect->add_option("--graph", graph_path, "graph file (text or JSON)")->required();

  auto* sc_stable = app.add_subcommand("stable-complex", "stable-set complex and incidence data");
  sc_stable->add_option("--graph", graph_path, "graph file")->required();

  auto* sc_harmony = app.add_subcommand("harmony", "decide harmony of two configuration blocks");
  sc_harmony->add_option("--a", a_path, "first configuration")->required();
  sc_harmony->add_option("--b", b_path, "second configuration")->required();

  auto* sc_gb = app.add_subcommand("toric-gb", "reduced Groebner basis of a toric ideal");
  sc_gb->add_option("--config", config_path, "configuration file")->required();
  sc_gb->add_option("--order", order_csv,
                    "variable chain, smallest first (e.g. \"z,x2,x1,x3\")");
  sc_gb->add_option("--degree-bound", degree_bound, "verify against fibers up to this degree");

  auto* sc_initial = app.add_subcommand("initial", "initial ideal under a given order");
  sc_initial->add_option("--config", config_path, "configuration file")->required();
  sc_initial->add_option("--order", order_csv, "variable chain, smallest first");

  auto* sc_compressed = app.add_subcommand("compressed", "facet-width compressedness test");
  sc_compressed->add_option("--config", config_path, "configuration file")->required();

  auto* sc_merge = app.add_subcommand("merge-check",
                                      "reflexivity of the merged stable-set polytope pair");
  sc_merge->add_option("--g1", g1_path, "first graph")->required();
  sc_merge->add_option("--g2", g2_path, "second graph")->required();

  auto* sc_thm = app.add_subcommand("theorem1",
                                    "verify the merged squarefree initial-ideal construction");
  sc_thm->add_option("--a", a_path, "first configuration block")->required();
  sc_thm->add_option("--b", b_path, "second configuration block")->required();

  auto* sc_obs = app.add_subcommand("obstruction",
                                    "obstruction hyperplane certificate for a complex");
  sc_obs->add_option("--complex", complex_path, "complex file");
  sc_obs->add_option("--graph", graph_path, "graph file (uses its stable-set complex)");

  auto* sc_census = app.add_subcommand("census", "perfect-graph census with pair verification");
  sc_census->add_option("--n", census_n, "number of vertices (2..6)")->required();
  sc_census->add_flag("--deep", deep, "verify polytopes for n = 5, 6 too");
  sc_census->add_flag("--allow-n7", allow_n7, "permit the long-running n = 7 count");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  try {
    std::string command;
    std::string key = kVersion;  // cache key: version + raw inputs + options
    std::function<CommandResult()> compute;

    if (*sc_perfect) {
      command = "perfect";
      key += "|" + slurp(graph_path);
      compute = [&] { return cmd_perfect(load_graph(graph_path)); };
    } else if (*sc_stable) {
      command = "stable-complex";
      key += "|" + slurp(graph_path);
      compute = [&] { return cmd_stable_complex(load_graph(graph_path)); };
    } else if (*sc_harmony) {
      command = "harmony";
      key += "|" + slurp(a_path) + "|" + slurp(b_path);
      compute = [&] {
        return cmd_harmony(load_configuration(a_path), load_configuration(b_path));
      };
    } else if (*sc_gb) {
      command = "toric-gb";
      key += "|" + slurp(config_path) + "|" + order_csv + "|" + std::to_string(degree_bound);
      compute = [&] {
        return cmd_toric_gb(load_configuration(config_path), order_csv, degree_bound);
      };
    } else if (*sc_initial) {
      command = "initial";
      key += "|" + slurp(config_path) + "|" + order_csv;
      compute = [&] { return cmd_initial(load_configuration(config_path), order_csv); };
    } else if (*sc_compressed) {
      command = "compressed";
      key += "|" + slurp(config_path);
      compute = [&] { return cmd_compressed(load_configuration(config_path)); };
    } else if (*sc_merge) {
      command = "merge-check";
      key += "|" + slurp(g1_path) + "|" + slurp(g2_path);
      compute = [&] { return cmd_merge_check(load_graph(g1_path), load_graph(g2_path)); };
    } else if (*sc_thm) {
      command = "theorem1";
      key += "|" + slurp(a_path) + "|" + slurp(b_path);
      compute = [&] {
        return cmd_theorem1(load_configuration(a_path), load_configuration(b_path));
      };
    } else if (*sc_obs) {
      command = "obstruction";
      if (complex_path.empty() == graph_path.empty())
        throw ParseError("obstruction: give exactly one of --complex or --graph");
      key += "|" + (complex_path.empty() ? "g:" + slurp(graph_path)
                                         : "c:" + slurp(complex_path));
      compute = [&] {
        SimplicialComplex sc = complex_path.empty()
                                   ? stable_set_complex(load_graph(graph_path))
                                   : load_complex(complex_path);
        return cmd_obstruction(sc);
      };
    } else if (*sc_census) {
      command = "census";
      key += "|n=" + std::to_string(census_n) + "|deep=" + std::to_string(deep);
      if (census_n < 2 || census_n > 7 || (census_n == 7 && !allow_n7))
        throw GuardError(census_n == 7 ? "census: n = 7 requires --allow-n7 (long-running)"
                                       : "census: n out of range 2..6");
      compute = [&] { return cmd_census(census_n, deep, allow_n7); };
    }

    CommandResult res;
    bool from_cache = false;
    if (!no_cache) {
      if (auto hit = cache_load(command, key)) {
        res.body = *hit;
        res.verdict = res.body.value("verdict", false);
        from_cache = true;
      }
    }
    if (!from_cache) {
      res = compute();
      if (!no_cache) cache_store(command, key, res.body);
    }

    double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    json final_report = res.body;
    final_report["elapsed_ms"] = elapsed;
    if (text_mode) {
      render_text(final_report, out);
    } else {
      out << final_report.dump(2) << "\n";
    }
    return res.verdict ? 0 : 1;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace rf::cli
