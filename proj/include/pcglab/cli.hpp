#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "constructions.hpp"
#include "graph.hpp"
#include "intervals.hpp"
#include "pcg.hpp"
#include "recognizer.hpp"
#include "shells.hpp"
#include "tree.hpp"

namespace pcglab::cli {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;  // verify found mismatches
constexpr int kExitUsage = 64;
constexpr int kExitFormat = 65;
constexpr int kExitNoInput = 66;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// I/O helpers

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NoInputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(what + ": " + e.what());
  }
}

/// .json files hold {"vertices","edges"} (or a witnessed graph with a
/// "graph" member); anything else is read as graph6.
inline Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    auto j = parse_json(text, path);
    return graph_from_json(j.contains("graph") ? j.at("graph") : j);
  }
  return from_graph6(text);
}

/// A representation file, or a witnessed-graph file carrying a "witness".
inline Representation load_rep(const std::string& path) {
  auto j = parse_json(read_file(path), path);
  if (j.is_object() && j.contains("witness")) return representation_from_json(j.at("witness"));
  return representation_from_json(j);
}

inline WeightedTree load_tree(const std::string& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '"')) return tree_from_json(parse_json(text, path));
  return from_newick(text);
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

inline void emit_json(const nlohmann::json& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) out << j.dump(2) << "\n";
  else write_text(out_path, j.dump(2) + "\n");
}

inline std::string file_stem_for(const std::string& name) {
  std::string s;
  for (char c : name) s += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  while (!s.empty() && s.back() == '_') s.pop_back();
  return s.empty() ? "graph" : s;
}

/// --max-n beats PCG_LAB_MAX_N beats the built-in default.
inline std::size_t effective_max_n(std::optional<std::size_t> flag, std::size_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PCG_LAB_MAX_N"); env && *env) {
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("PCG_LAB_MAX_N must be a nonnegative integer, got ") + env);
  }
  return fallback;
}

/// G(n, 1/2) driven by the top bit of a 64-bit Mersenne twister.
inline Graph random_graph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(numbered_labels("v", n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() >> 63) g.add_edge(i, j);
  return g;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string what;
  std::vector<std::size_t> params;
  std::string out_dir;
  bool quote_provenance = false;
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_n;
};

inline std::size_t param(const ConstructArgs& a, std::size_t i, const char* name) {
  if (i >= a.params.size()) throw UsageError("construct " + a.what + ": missing parameter " + name);
  return a.params[i];
}

inline std::vector<WitnessedGraph> build_constructions(const ConstructArgs& a) {
  const auto& w = a.what;
  for (const auto& f : fixture_names())
    if (w == f) return fixture(w, (w == "complete" || w == "empty") ? param(a, 0, "n") : 0);
  if (w == "qt") return {build_qt_witness(param(a, 0, "k"), param(a, 1, "t"))};
  if (w == "gk") return {build_gk_family(param(a, 0, "k"))};
  if (w == "fk") {
    std::size_t k = param(a, 0, "k");
    return {WitnessedGraph("F_k" + std::to_string(k), family_Fk(k), std::nullopt, "k+1 disjoint copies of K_{2k,2k}")};
  }
  if (w == "incidence") {
    std::size_t p = param(a, 0, "p"), q = param(a, 1, "q");
    return {WitnessedGraph("I(" + std::to_string(p) + "," + std::to_string(q) + ")", incidence_pq(p, q), std::nullopt,
                           "incidence graph of all q-subsets of a p-set")};
  }
  if (w == "hy") {
    std::size_t y = param(a, 0, "y");
    std::size_t cap = effective_max_n(a.max_n, kDefaultHyCap);
    return {WitnessedGraph("H_y" + std::to_string(y), family_Hy(y, cap), std::nullopt, "I(4y-3, 2y-1)")};
  }
  if (w == "fr") {
    std::size_t r = param(a, 0, "r");
    std::size_t cap = effective_max_n(a.max_n, kDefaultFrCap);
    return {WitnessedGraph("F_r" + std::to_string(r), family_Fr(r, cap), std::nullopt,
                           "C_4 iterated under the two-copy complement")};
  }
  if (w == "random") {
    std::size_t n = param(a, 0, "n");
    Graph g = random_graph(n, a.seed);
    std::size_t cap = effective_max_n(a.max_n, 7);
    std::optional<Representation> wit;
    if (n <= cap) {
      auto r = recognize_pcg(g, cap);
      if (r.witness) wit = Representation(*r.witness);
    }
    return {WitnessedGraph("random_n" + std::to_string(n) + "_s" + std::to_string(a.seed), std::move(g), std::move(wit),
                           "uniform random graph, seed " + std::to_string(a.seed))};
  }
  throw UsageError("construct: unknown construction '" + w + "'");
}

inline int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  auto items = build_constructions(a);
  if (a.out_dir.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& it : items) arr.push_back(to_json(it, a.quote_provenance));
    out << arr.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& it : items) {
    auto path = std::filesystem::path(a.out_dir) / (file_stem_for(it.name()) + ".json");
    write_text(path, to_json(it, a.quote_provenance).dump(2) + "\n");
    out << path.string() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Dispatcher

/// Runs one command line. argv[0] is the program name.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pairwise compatibility graph laboratory", "pcg-lab"};
  app.require_subcommand(1);

  std::optional<std::size_t> max_n;
  std::size_t workers = 1;
  std::string out_path;

  ConstructArgs cargs;
  auto* construct = app.add_subcommand("construct", "Emit a construction with its self-verified witness");
  construct->add_option("what", cargs.what,
                        "figure1|figure2|figure3|complete|empty|qt|gk|fk|incidence|hy|fr|random")
      ->required();
  construct->add_option("params", cargs.params, "integer parameters (n, k t, p q, y, r)");
  construct->add_option("--out", cargs.out_dir, "directory for one JSON file per graph");
  construct->add_flag("--quote-provenance", cargs.quote_provenance, "include the origin of each construction");
  construct->add_option("--seed", cargs.seed, "seed for 'random'");
  construct->add_option("--max-n", max_n, "size cap for recognizer-backed constructions");

  auto* fixtures = app.add_subcommand("fixtures", "List named fixtures, or write them all with --out");
  bool fix_prov = false;
  fixtures->add_option("--out", out_path, "directory");
  fixtures->add_flag("--quote-provenance", fix_prov);

  std::string rep_path, graph_path, format = "g6";
  auto* evalc = app.add_subcommand("eval", "Evaluate a representation to its graph");
  evalc->add_option("--rep", rep_path, "representation or witnessed-graph JSON")->required();
  evalc->add_option("--format", format, "g6|json")->check(CLI::IsMember({"g6", "json"}));
  evalc->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "Check a representation against a graph");
  verify->add_option("--rep", rep_path)->required();
  verify->add_option("--graph", graph_path, ".g6 or .json graph")->required();
  verify->add_option("--out", out_path);

  bool leaf_power = false;
  auto* recog = app.add_subcommand("recognize", "Exact PCG / leaf-power recognition for small graphs");
  recog->add_option("--graph", graph_path)->required();
  recog->add_flag("--leaf-power", leaf_power);
  recog->add_option("--max-n", max_n);
  recog->add_option("--workers", workers)->check(CLI::PositiveNumber);
  recog->add_option("--out", out_path);

  auto* cert = app.add_subcommand("certificate", "Look for two separated holes in the complement");
  cert->add_option("--graph", graph_path)->required();
  cert->add_option("--out", out_path);

  std::string tree_path, intervals_text;
  auto* shells = app.add_subcommand("shells", "Enumerate the shell family of a tree and interval set");
  shells->add_option("--tree", tree_path, "tree JSON or Newick file")->required();
  shells->add_option("--intervals", intervals_text, "e.g. \"[3,7] U [25,25]\"")->required();
  shells->add_option("--out", out_path);

  std::size_t census_n = 0;
  std::string mode = "unlabeled";
  auto* censusc = app.add_subcommand("census", "Recognize every graph on n vertices");
  censusc->add_option("--n", census_n)->required();
  censusc->add_option("--mode", mode)->check(CLI::IsMember({"labeled", "unlabeled"}));
  censusc->add_option("--max-n", max_n);
  censusc->add_option("--workers", workers)->check(CLI::PositiveNumber);
  censusc->add_option("--out", out_path);

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(cargs, out);

    if (*fixtures) {
      if (out_path.empty()) {
        for (const auto& n : fixture_names()) out << n << "\n";
        return kExitOk;
      }
      for (const auto& n : fixture_names()) {
        ConstructArgs a;
        a.what = n;
        a.params = {4};
        a.out_dir = out_path;
        a.quote_provenance = fix_prov;
        cmd_construct(a, out);
      }
      return kExitOk;
    }

    if (*evalc) {
      Graph g = eval(load_rep(rep_path));
      if (format == "json") emit_json(to_json(g), out_path, out);
      else if (out_path.empty()) out << to_graph6(g) << "\n";
      else write_text(out_path, to_graph6(g) + "\n");
      return kExitOk;
    }

    if (*verify) {
      auto report = verify_representation(load_rep(rep_path), load_graph(graph_path));
      emit_json(to_json(report), out_path, out);
      return report.valid ? kExitOk : kExitInvalid;
    }

    if (*recog) {
      Graph g = load_graph(graph_path);
      std::size_t cap = effective_max_n(max_n, leaf_power ? 8 : 6);
      RecognitionResult r;
      if (g.order() > cap) {
        err << "graph has " << g.order() << " vertices, above the exhaustive limit " << cap
            << "; trying the separated-holes certificate\n";
        r = non_pcg_certificate(g);
      } else {
        r = recognize(g, {cap, leaf_power, workers});
      }
      emit_json(to_json(r), out_path, out);
      return exit_code(r.status);
    }

    if (*cert) {
      auto r = non_pcg_certificate(load_graph(graph_path));
      emit_json(to_json(r), out_path, out);
      return exit_code(r.status);
    }

    if (*shells) {
      auto fam = enumerate_shells(load_tree(tree_path), IntervalSet::parse(intervals_text));
      emit_json(to_json(fam), out_path, out);
      return kExitOk;
    }

    if (*censusc) {
      std::size_t cap = effective_max_n(max_n, 6);
      auto rep = census(census_n, mode == "labeled" ? CensusMode::Labeled : CensusMode::Unlabeled, cap, workers);
      emit_json(to_json(rep), out_path, out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NoInputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace pcglab::cli
