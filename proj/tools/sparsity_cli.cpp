#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sparsity/centrality.hpp"
#include "sparsity/coloring.hpp"
#include "sparsity/counting.hpp"
#include "sparsity/errors.hpp"
#include "sparsity/experiments.hpp"
#include "sparsity/graph.hpp"
#include "sparsity/models.hpp"

namespace {

using nlohmann::json;
using namespace sparsity;

enum Exit { kOk = 0, kVerifyFailed = 1, kArgument = 2, kIo = 3, kTimeout = 4 };

struct Globals {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  double timeout_secs = 0;
  std::string format = "json";
};

ExperimentOptions experiment_options(const Globals& g) {
  ExperimentOptions o;
  o.seed = g.seed;
  o.threads = g.threads;
  o.timeout_secs = g.timeout_secs;
  o.progress = &std::cerr;
  return o;
}

// "0-1,1-2,2-0" or a builtin name.
PatternGraph parse_pattern(const std::string& text) {
  if (text.find('-') == std::string::npos) return PatternGraph::builtin(text);
  std::vector<Edge> edges;
  unsigned h = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    unsigned a = 0, b = 0;
    const auto r1 = std::from_chars(item.data(), item.data() + dash, a);
    const auto r2 = std::from_chars(item.data() + dash + 1, item.data() + item.size(), b);
    if (dash == std::string::npos || r1.ec != std::errc() || r2.ec != std::errc() ||
        r2.ptr != item.data() + item.size()) {
      throw ArgumentError("bad pattern edge: " + item);
    }
    edges.push_back({a, b});
    h = std::max({h, a + 1, b + 1});
  }
  return PatternGraph::from_edges(h, edges, text);
}

LtdColoring read_coloring(const std::string& path, const Graph& g, unsigned p) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<Color> colors(g.num_vertices(), 0);
  std::vector<char> seen(g.num_vertices(), 0);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string label;
    long long c = -1;
    if (!(ls >> label >> c) || c < 0) throw ParseError(lineno, "expected 'label color'");
    const auto v = g.find_label(label);
    if (!v) throw ParseError(lineno, "unknown vertex " + label);
    colors[*v] = static_cast<Color>(c);
    seen[*v] = 1;
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw ParseError(lineno, "no color for vertex " + g.label(static_cast<Vertex>(v)));
  }
  return LtdColoring::from_colors(p, std::move(colors));
}

void emit_report(const ExperimentReport& rep, const Globals& gl) {
  if (gl.format == "csv") {
    rep.write_csv(std::cout);
  } else {
    std::cout << rep.to_json().dump(2) << '\n';
  }
}

int report_status(const ExperimentReport& rep) {
  if (rep.partial) return kTimeout;
  if (rep.verification_failed) return kVerifyFailed;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse-graph workbench: colorings, pattern counts, local centralities, random models"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--seed", gl.seed, "Seed for every randomized step");
  app.add_option("--threads", gl.threads, "Worker threads (0 = all cores)");
  app.add_option("--timeout-secs", gl.timeout_secs, "Per-task timeout, 0 = none");
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // color
  auto* color = app.add_subcommand("color", "Compute and verify a low treedepth coloring");
  std::string color_file, color_out;
  unsigned color_p = 3;
  bool no_merge = false;
  color->add_option("graph", color_file, "Edge list file")->required();
  color->add_option("-p", color_p, "Centered parameter p (classes: any i < p induce treedepth <= i)")
      ->check(CLI::Range(2u, 64u));
  color->add_option("-o,--output", color_out, "Write 'label color' lines here");
  color->add_flag("--no-merge", no_merge, "Skip the class merging pass");

  // verify
  auto* verify = app.add_subcommand("verify", "Verify a coloring file against a graph");
  std::string verify_graph, verify_coloring;
  unsigned verify_p = 3;
  verify->add_option("graph", verify_graph, "Edge list file")->required();
  verify->add_option("coloring", verify_coloring, "'label color' file")->required();
  verify->add_option("-p", verify_p, "Centered parameter p")->check(CLI::Range(2u, 64u));

  // count
  auto* count = app.add_subcommand("count", "Count pattern occurrences");
  std::string count_file, count_pattern = "P3", count_mode = "subgraph";
  bool count_brute = false;
  count->add_option("graph", count_file, "Edge list file")->required();
  count->add_option("--pattern", count_pattern, "Builtin name (K3, P4, C4, S3, paw, ...) or edges '0-1,1-2'");
  count->add_option("--mode", count_mode, "induced | subgraph | homomorphism");
  count->add_flag("--brute", count_brute, "Also run the backtracking oracle");

  // centrality
  auto* cent = app.add_subcommand("centrality", "Localized or exact centralities");
  std::string cent_file;
  unsigned cent_r = 2;
  bool cent_exact = false;
  cent->add_option("graph", cent_file, "Edge list file")->required();
  cent->add_option("-r,--radius", cent_r, "Radius")->check(CLI::Range(1u, kMaxReachRadius));
  cent->add_flag("--exact", cent_exact, "BFS over the whole graph instead");

  // generate
  auto* gen = app.add_subcommand("generate", "Sample a random graph from a model spec");
  std::string gen_spec, gen_out;
  gen->add_option("--spec", gen_spec, "JSON model spec, inline or @file")->required();
  gen->add_option("-o,--output", gen_out, "Edge list path (sidecar written to PATH.json)");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run a study");
  exp->require_subcommand(1);
  exp->fallthrough();
  auto* profile = exp->add_subcommand("profile", "Palette sizes for p = 2..p-max");
  std::string profile_file;
  unsigned profile_pmax = 4;
  profile->add_option("graph", profile_file, "Edge list file")->required();
  profile->add_option("--p-max", profile_pmax, "Largest p");

  auto* dich = exp->add_subcommand("dichotomy", "Palette growth on configuration graphs");
  std::vector<double> gammas{2.2, 3.5};
  std::vector<std::size_t> sizes{1000, 2000, 4000, 8000};
  std::size_t dich_seeds = 10;
  dich->add_option("--gammas", gammas, "Power-law exponents")->delimiter(',');
  dich->add_option("--sizes", sizes, "Ascending vertex counts")->delimiter(',');
  dich->add_option("--seeds", dich_seeds, "Seeds per cell");

  auto* study = exp->add_subcommand("centrality", "Top-k Jaccard of localized vs exact centralities");
  std::string study_file;
  std::vector<unsigned> radii;
  double fraction = 0.10;
  study->add_option("graph", study_file, "Edge list file")->required();
  study->add_option("--radii", radii, "Radii (default 1..diameter)")->delimiter(',');
  study->add_option("--fraction", fraction, "Top fraction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kArgument;
  }

  try {
    if (*color) {
      const Graph g = read_edge_list_file(color_file).graph;
      ColoringOptions co;
      co.merge_classes = !no_merge;
      co.verify.sample_seed = gl.seed;
      co.verify.threads = resolve_threads(gl.threads);
      co.verify.deadline = Deadline::after_seconds(gl.timeout_secs);
      ColoringRun run;
      try {
        run = compute_ltd_coloring_run(g, color_p, co);
      } catch (const ColoringFailure& f) {
        std::cerr << "coloring failed: " << f.what() << '\n';
        return kVerifyFailed;
      }
      if (!color_out.empty()) {
        std::ofstream out(color_out);
        if (!out) throw IoError("cannot write " + color_out);
        write_coloring(out, g, run.coloring);
      }
      if (gl.format == "csv") {
        write_coloring(std::cout, g, run.coloring);
      } else {
        const auto bound = treedepth_upper_bound(g, run.coloring);
        json j{{"p", color_p},
               {"palette", run.coloring.palette_size},
               {"palette_before_merge", run.palette_before_merge},
               {"private_vertices", run.private_vertices},
               {"rounds", run.rounds},
               {"merges", run.merges},
               {"treedepth_bound", bound ? json(*bound) : json()},
               {"verification", json::parse(run.report.to_json())}};
        std::cout << j.dump(2) << '\n';
      }
      return run.report.pass ? kOk : kVerifyFailed;
    }
    if (*verify) {
      const Graph g = read_edge_list_file(verify_graph).graph;
      const LtdColoring col = read_coloring(verify_coloring, g, verify_p);
      VerifyOptions vo;
      vo.sample_seed = gl.seed;
      vo.threads = resolve_threads(gl.threads);
      vo.deadline = Deadline::after_seconds(gl.timeout_secs);
      const auto rep = verify_ltd_coloring(g, col, verify_p, vo);
      std::cout << json::parse(rep.to_json()).dump(2) << '\n';
      return rep.pass ? kOk : kVerifyFailed;
    }
    if (*count) {
      const Graph g = read_edge_list_file(count_file).graph;
      const PatternGraph h = parse_pattern(count_pattern);
      const CountMode mode = parse_count_mode(count_mode);
      ColoringOptions co;
      co.verify.sample_seed = gl.seed;
      co.verify.threads = resolve_threads(gl.threads);
      co.verify.deadline = Deadline::after_seconds(gl.timeout_secs);
      const LtdColoring col = compute_ltd_coloring(g, h.size() + 1, co);
      CountOptions opts;
      opts.threads = resolve_threads(gl.threads);
      opts.deadline = co.verify.deadline;
      const GlobalCount c = count_global(h, g, col, mode, opts);
      json j{{"pattern", h.name()}, {"pattern_vertices", h.size()}, {"mode", to_string(mode)},
             {"maps", c.maps}, {"automorphisms", c.automorphisms}, {"copies", c.copies()},
             {"palette", col.palette_size}, {"color_subsets", c.subsets_evaluated}};
      if (count_brute) j["brute_force_maps"] = brute_force_count(h, g, mode);
      if (gl.format == "csv") {
        std::cout << "pattern,mode,maps,copies\n"
                  << '"' << h.name() << "\"," << to_string(mode) << ',' << c.maps << ',' << c.copies() << '\n';
      } else {
        std::cout << j.dump(2) << '\n';
      }
      return kOk;
    }
    if (*cent) {
      const Graph g = read_edge_list_file(cent_file).graph;
      const CentralityTable t =
          cent_exact ? exact_centralities(g, resolve_threads(gl.threads)) : localized_centralities(g, cent_r);
      if (gl.format == "csv") {
        write_centrality_csv(std::cout, g, t);
      } else {
        json rows = json::array();
        for (Vertex v = 0; v < t.size(); ++v) {
          rows.push_back({{"vertex", g.label(v)}, {"closeness", t.closeness[v]}, {"harmonic", t.harmonic[v]},
                          {"lin", t.lin[v]}, {"reach", t.reach[v]}});
        }
        std::cout << json{{"radius", t.radius ? json(*t.radius) : json()}, {"vertices", rows}}.dump(2) << '\n';
      }
      return kOk;
    }
    if (*gen) {
      std::string text = gen_spec;
      if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw IoError("cannot open " + text.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      json spec;
      try {
        spec = json::parse(text);
      } catch (const json::exception& e) {
        throw ArgumentError(std::string("spec is not JSON: ") + e.what());
      }
      if (!spec.contains("seed")) spec["seed"] = gl.seed;
      const GeneratedGraph out = generate_from_spec(spec);
      if (gen_out.empty()) {
        write_edge_list(std::cout, out.graph);
      } else {
        write_generated(gen_out, out);
        std::cerr << "wrote " << gen_out << " (" << out.graph.num_vertices() << " vertices, "
                  << out.graph.num_edges() << " edges)\n";
      }
      return kOk;
    }
    if (*profile) {
      const auto rep = run_color_profile(profile_file, profile_pmax, experiment_options(gl));
      emit_report(rep, gl);
      return report_status(rep);
    }
    if (*dich) {
      const auto rep = run_dichotomy_experiment(gammas, sizes, dich_seeds, experiment_options(gl));
      emit_report(rep, gl);
      return report_status(rep);
    }
    if (*study) {
      if (radii.empty()) {
        const unsigned d = diameter(giant_component(read_edge_list_file(study_file).graph).graph);
        for (unsigned r = 1; r <= std::max(1u, d); ++r) radii.push_back(r);
      }
      const auto rep = run_centrality_study(study_file, radii, fraction, experiment_options(gl));
      emit_report(rep, gl);
      return report_status(rep);
    }
  } catch (const TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << '\n';
    return kTimeout;
  } catch (const ArgumentError& e) {
    std::cerr << "argument error: " << e.what() << '\n';
    return kArgument;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kArgument;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
