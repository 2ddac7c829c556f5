// Command-line front end: corpus generation, suite runs, coloring, the
// reduction pipeline, and diagram output.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "minorlab/diagram.hpp"
#include "minorlab/json_io.hpp"
#include "minorlab/suite.hpp"

using namespace minorlab;

namespace {

Graph read_graph(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    in = &file;
  }
  // JSON documents start with '{'; anything else is an edge list
  int c = in->peek();
  while (c == ' ' || c == '\n' || c == '\t') {
    in->get();
    c = in->peek();
  }
  if (c == '{') {
    json j;
    *in >> j;
    if (j.contains("graph")) return graph_from_json(j.at("graph"));
    return graph_from_json(j);
  }
  return graph_from_edge_list(*in);
}

std::int64_t env_budget() {
  if (const char* s = std::getenv("MINORLAB_NODE_BUDGET")) return std::atoll(s);
  return 20'000'000;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minorlab: a desk-scale verification lab for graph minors and colorings"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a corpus as JSONL");
  std::string mode = "random_wing1";
  int gen_n = 7;
  double density = 0.5;
  uint64_t seed = 20260810;
  long count = 10;
  gen->add_option("--mode", mode, "all_small | random_wing1 | maximal_planar");
  gen->add_option("-n", gen_n, "vertex count");
  gen->add_option("--density", density, "edge density for random_wing1");
  gen->add_option("--seed", seed, "corpus seed");
  gen->add_option("--count", count, "items to emit (random modes)");

  // check
  auto* check = app.add_subcommand("check", "run a verification suite");
  std::string suite_name;
  long items = -1;
  std::string archive;
  int threads = 2;
  check->add_option("suite", suite_name, "one of: " + [] {
                      std::string all;
                      for (const auto& s : suite_names()) all += s + " ";
                      return all;
                    }())
      ->required();
  check->add_option("--items", items, "item cap (default: pinned acceptance size)");
  check->add_option("--seed", seed, "corpus seed");
  check->add_option("--archive", archive, "directory for counterexample bundles");
  check->add_option("--threads", threads, "worker threads");

  // color
  auto* color = app.add_subcommand("color", "color a graph");
  std::string input = "-";
  int palette = 0;
  color->add_option("--input", input, "graph file (json or edge list), - for stdin");
  color->add_option("-k,--palette", palette, "palette size (default: chromatic number)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "run the reduction pipeline");
  int red_k = 4;
  bool dirac = false;
  reduce->add_option("--input", input, "graph file, - for stdin");
  reduce->add_option("-k", red_k, "target chromatic number (3 or 4)");
  reduce->add_flag("--dirac", dirac, "produce the constructive K4 witness instead");

  // draw
  auto* draw = app.add_subcommand("draw", "emit a diagram");
  std::string format = "dot";
  draw->add_option("--input", input, "corpus item or graph, - for stdin");
  draw->add_option("--format", format, "dot | svg-arc");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      if (mode == "all_small") {
        all_small(gen_n, [&](const CorpusItem& item) {
          std::cout << item_to_json(item).dump() << "\n";
          return true;
        });
      } else if (mode == "random_wing1") {
        for (long i = 0; i < count; ++i) {
          auto item = random_wing1(gen_n, density, seed, i);
          if (auto err = validate_side_data(item)) throw std::runtime_error(*err);
          std::cout << item_to_json(item).dump() << "\n";
        }
      } else if (mode == "maximal_planar") {
        for (long i = 0; i < count; ++i) {
          auto item = maximal_planar(gen_n, seed, i);
          if (auto err = validate_side_data(item)) throw std::runtime_error(*err);
          std::cout << item_to_json(item).dump() << "\n";
        }
      } else {
        throw std::runtime_error("unknown mode: " + mode);
      }
      return 0;
    }

    if (*check) {
      SuiteConfig cfg;
      cfg.item_cap = items;
      cfg.seed = seed;
      cfg.archive_dir = archive;
      cfg.threads = threads;
      cfg.node_budget = env_budget();
      auto report = run_suite(suite_name, cfg);
      if (as_json) {
        std::cout << report.to_jsonl();
      } else {
        std::cout << report.suite << ": " << report.passed << " passed, " << report.failed
                  << " failed, " << report.unknown << " unknown, " << report.findings
                  << " findings\n";
        for (const auto& v : report.recorded)
          std::cout << "  [" << v.status << "] " << v.item << ": " << v.detail << "\n";
      }
      return report.clean() ? 0 : 1;
    }

    if (*color) {
      Graph g = read_graph(input);
      int k = palette > 0 ? palette : oracle::chromatic_number(g);
      auto cl = min_frequency_coloring(g, k);
      if (as_json) {
        json out = coloring_to_json(cl);
        out["format"] = 1;
        out["chromatic"] = oracle::chromatic_number(g);
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "chromatic number " << oracle::chromatic_number(g) << "; minimum-frequency "
                  << k << "-coloring:";
        for (size_t v = 0; v < cl.colors.size(); ++v) std::cout << " " << v << ":" << cl.colors[v];
        std::cout << "\n";
      }
      return 0;
    }

    if (*reduce) {
      Graph g = read_graph(input);
      if (dirac) {
        auto w = dirac_k4_witness(g);
        json out = witness_to_json(w);
        out["format"] = 1;
        std::cout << out.dump() << "\n";
      } else {
        auto out = reduce_step(g, red_k);
        std::cout << outcome_to_json(out).dump() << "\n";
      }
      return 0;
    }

    if (*draw) {
      std::ifstream file;
      std::istream* in = &std::cin;
      if (input != "-") {
        file.open(input);
        if (!file) throw std::runtime_error("cannot open " + input);
        in = &file;
      }
      int c = in->peek();
      CorpusItem item;
      if (c == '{') {
        json j;
        *in >> j;
        if (j.contains("graph"))
          item = item_from_json(j);
        else
          item.graph = graph_from_json(j);
      } else {
        item.graph = graph_from_edge_list(*in);
      }
      if (format == "svg-arc" && !item.wing_order) {
        auto built = build_wing1(item.graph);
        if (built.ok()) item.wing_order = built.embedding->order;
      }
      std::cout << emit_diagram(item, format);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
