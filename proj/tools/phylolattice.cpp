// phylolattice command-line tool. Data goes to files or stdout, logs to stderr.
// Exit status: 0 success, 1 invalid input, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "phylolattice.hpp"

namespace fs = std::filesystem;
using namespace phylolattice;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input or output file trouble; reported like invalid input.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << data;
  spdlog::info("wrote {}", path);
}

enum class InputKind { json, matrix, newick };

InputKind input_kind(const std::string& path) {
  const std::string ext = fs::path(path).extension().string();
  if (ext == ".json") return InputKind::json;
  if (ext == ".csv") return InputKind::matrix;
  if (ext == ".nwk" || ext == ".newick" || ext == ".tre" || ext == ".tree") return InputKind::newick;
  throw UsageError("cannot tell the format of '" + path + "' (expected .json, .csv or .nwk)");
}

// Prefixes parse errors with the file name so messages read file:line:col.
template <class Fn>
auto with_file(const std::string& path, Fn&& fn) {
  try {
    return fn(read_file(path));
  } catch (const ParseError& e) {
    throw ValidationError(path + ":" + e.what(), e.diagnostics());
  } catch (const ValidationError& e) {
    std::vector<std::string> diagnostics;
    for (const auto& d : e.diagnostics()) diagnostics.push_back(path + ": " + d);
    throw ValidationError(path + ": " + e.what(), std::move(diagnostics));
  }
}

std::vector<Ultranetwork> load_trees(const std::string& path, bool ultrametrize) {
  return with_file(path, [&](const std::string& text) {
    const auto trees = parse_newick(text);
    if (trees.empty()) throw ValidationError("no trees found");
    const TaxaSet taxa = newick_taxa(trees.front());
    std::vector<Ultranetwork> out;
    out.reserve(trees.size());
    for (const auto& t : trees) {
      try {
        out.push_back(ultranetwork_from_newick(t, ultrametrize, taxa));
      } catch (const ValidationError& e) {
        throw ValidationError("tree on line " + std::to_string(t.line) + ": " + e.what(), e.diagnostics());
      }
    }
    return out;
  });
}

PhyloNetwork load_matrix(const std::string& path) {
  return with_file(path, [](const std::string& text) { return parse_matrix_csv(text); });
}

Gram load_gram(const std::string& path) {
  return with_file(path, [](const std::string& text) { return gram_from_json(text); });
}

JoinMode join_mode(const std::string& s) {
  if (s == "cliquegram") return JoinMode::cliquegram;
  if (s == "facegram") return JoinMode::facegram;
  throw UsageError("unknown join mode '" + s + "'");
}

std::vector<Gram> treegrams(const std::vector<Ultranetwork>& trees) {
  std::vector<Gram> out;
  out.reserve(trees.size());
  for (const auto& t : trees) out.push_back(treegram_from_ultranetwork(t));
  return out;
}

// Any mergegram-carrying input: a mergegram document or a gram to take it from.
MergegramDocument load_mergegram(const std::string& path) {
  return with_file(path, [](const std::string& text) {
    const auto doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_object() && doc.contains("levels")) {
      const auto m = labeled_mergegram(gram_from_json(text));
      return MergegramDocument{m.unlabeled(), m};
    }
    return mergegram_from_json(text);
  });
}

void configure_logging() {
  auto logger = spdlog::stderr_logger_st("phylolattice");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("PHYLOLATTICE_LOG")) {
    const std::string level(env);
    if (level == "error") spdlog::set_level(spdlog::level::err);
    else if (level == "warn") spdlog::set_level(spdlog::level::warn);
    else if (level == "info") spdlog::set_level(spdlog::level::info);
    else if (level == "debug") spdlog::set_level(spdlog::level::debug);
    else spdlog::warn("ignoring PHYLOLATTICE_LOG={} (expected error, warn, info or debug)", level);
  }
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();

  CLI::App app{"Lattice models, joins and mergegram invariants of phylogenetic networks"};
  app.require_subcommand(1);
  std::size_t jobs = 1;
  double merge_tol = 0.0;
  app.add_option("--jobs", jobs, "Worker threads for per-level work")->check(CLI::Range(1, 1024));
  app.add_option("--merge-tol", merge_tol, "Merge critical values closer than this")->check(CLI::NonNegativeNumber);

  auto tidy = [&](Gram g) { return merge_tol > 0 ? coalesce_levels(g, merge_tol) : g; };

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check a gram/mergegram JSON, matrix CSV or Newick file");
  validate->add_option("file", file)->required();

  std::string matrix_path, out_path;
  auto* cliquegram = app.add_subcommand("cliquegram", "Cliquegram of a phylogenetic network");
  cliquegram->add_option("--matrix", matrix_path)->required();
  cliquegram->add_option("-o,--output", out_path);

  std::string newick_path;
  bool ultrametrize = false;
  auto* treegram = app.add_subcommand("treegram", "Treegram of a Newick tree");
  treegram->add_option("--newick", newick_path)->required();
  treegram->add_flag("--ultrametrize", ultrametrize, "Observe every leaf at time 0");
  treegram->add_option("-o,--output", out_path);

  std::string mode = "facegram";
  auto* join = app.add_subcommand("join", "Join of the treegrams of several Newick trees");
  join->add_option("--mode", mode)->check(CLI::IsMember({"cliquegram", "facegram"}));
  join->add_option("--trees", newick_path)->required();
  join->add_flag("--ultrametrize", ultrametrize);
  join->add_option("-o,--output", out_path);

  std::string in_path, svg_path;
  bool labeled = false, fast = false, check = false;
  auto* mgm = app.add_subcommand("mergegram", "Mergegram of a gram, a network or the join of trees");
  mgm->add_option("--in", in_path)->required();
  mgm->add_flag("--labeled", labeled);
  mgm->add_flag("--fast-tree-join", fast, "Direct formula for the facegram join of trees");
  mgm->add_flag("--check", check, "Also run the other tree-join route and compare");
  mgm->add_option("--mode", mode, "Join mode for several trees")->check(CLI::IsMember({"cliquegram", "facegram"}));
  mgm->add_flag("--ultrametrize", ultrametrize);
  mgm->add_option("-o,--output", out_path);
  mgm->add_option("--svg", svg_path);

  auto* reeb = app.add_subcommand("reeb", "Face-Reeb graph of a gram as DOT");
  reeb->add_option("--in", in_path)->required();
  reeb->add_option("-o,--output", out_path);

  auto* ph0 = app.add_subcommand("ph0", "Elder-rule 0-dimensional persistence of an ultrametric");
  ph0->add_option("--matrix", matrix_path)->required();
  ph0->add_option("-o,--output", out_path);

  std::string metric;
  std::vector<std::string> operands;
  auto* dist = app.add_subcommand("dist", "Distance between two mergegrams or grams");
  dist->add_option("--metric", metric)->required()->check(CLI::IsMember({"bottleneck", "interleaving", "linf"}));
  dist->add_option("operands", operands)->expected(2)->required();

  std::size_t n = 10, l = 21;
  std::uint64_t seed = 7;
  std::string method = "upgma", out_dir;
  auto* gen = app.add_subcommand("gen-trees", "Seeded random treegrams");
  gen->add_option("-n", n, "Number of taxa")->check(CLI::Range(std::size_t{1}, kMaxTaxa));
  gen->add_option("-l", l, "Number of trees")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed);
  gen->add_option("--method", method)->check(CLI::IsMember({"upgma", "single-linkage"}));
  gen->add_option("-o,--output", out_dir)->required();

  auto* experiment = app.add_subcommand("experiment", "Reproduction experiments");
  experiment->require_subcommand(1);
  auto* progression = experiment->add_subcommand("bottleneck-progression",
                                                 "d_B between partial joins and the full join of trees");
  std::string progression_mode = "both";
  progression->add_option("--trees", newick_path, "Newick file; random trees when absent");
  progression->add_option("--mode", progression_mode)->check(CLI::IsMember({"cliquegram", "facegram", "both"}));
  progression->add_flag("--ultrametrize", ultrametrize);
  progression->add_option("-n", n, "Taxa for random trees")->check(CLI::Range(std::size_t{1}, kMaxTaxa));
  progression->add_option("-l", l, "Random tree count")->check(CLI::PositiveNumber);
  progression->add_option("--seed", seed);
  progression->add_option("--method", method)->check(CLI::IsMember({"upgma", "single-linkage"}));
  progression->add_option("-o,--output", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      switch (input_kind(file)) {
        case InputKind::matrix: {
          const auto net = load_matrix(file);
          std::cout << "ok: phylogenetic network over " << net.size() << " taxa"
                    << (is_ultranetwork(net) ? " (ultranetwork)" : "") << "\n";
          break;
        }
        case InputKind::newick: {
          const auto trees = load_trees(file, false);
          std::cout << "ok: " << trees.size() << " tree(s) over " << trees.front().size() << " taxa\n";
          break;
        }
        case InputKind::json: {
          const std::string text = read_file(file);
          const auto doc = nlohmann::json::parse(text, nullptr, false);
          if (doc.is_object() && doc.contains("levels")) {
            const auto g = with_file(file, [](const std::string& t) { return gram_from_json(t); });
            std::cout << "ok: " << to_string(g.kind()) << " with " << g.size() << " levels over " << g.taxa().size()
                      << " taxa\n";
          } else {
            const auto m = with_file(file, [](const std::string& t) { return mergegram_from_json(t); });
            std::cout << "ok: " << (m.labeled ? "labeled " : "") << "mergegram with " << m.unlabeled.size()
                      << " intervals\n";
          }
          break;
        }
      }
    } else if (*cliquegram) {
      const auto g = tidy(cliquegram_from_network(load_matrix(matrix_path), jobs));
      write_output(out_path, gram_to_json(g));
    } else if (*treegram) {
      const auto trees = load_trees(newick_path, ultrametrize);
      if (trees.size() != 1)
        throw ValidationError(newick_path + ": expected one tree, found " + std::to_string(trees.size()) +
                              " (use join)");
      write_output(out_path, gram_to_json(tidy(treegram_from_ultranetwork(trees.front()))));
    } else if (*join) {
      const auto parts = treegrams(load_trees(newick_path, ultrametrize));
      write_output(out_path, gram_to_json(tidy(join_grams(parts, join_mode(mode), jobs))));
    } else if (*mgm) {
      const InputKind kind = input_kind(in_path);
      if ((fast || check) && kind != InputKind::newick)
        throw UsageError("--fast-tree-join and --check need Newick trees as input");
      if ((fast || check) && mode != "facegram")
        throw UsageError("the fast tree join computes the facegram join only");
      LabeledMergegram result;
      switch (kind) {
        case InputKind::json:
          result = labeled_mergegram(tidy(load_gram(in_path)));
          break;
        case InputKind::matrix:
          result = labeled_mergegram(tidy(cliquegram_from_network(load_matrix(in_path), jobs)));
          break;
        case InputKind::newick: {
          const auto trees = load_trees(in_path, ultrametrize);
          auto slow = [&] { return labeled_mergegram(join_grams(treegrams(trees), join_mode(mode), jobs)); };
          result = fast ? join_mergegram_of_treegrams(trees, jobs) : slow();
          if (check) {
            if (!(result == (fast ? slow() : join_mergegram_of_treegrams(trees, jobs))))
              throw ValidationError("fast and join routes disagree on the mergegram");
            spdlog::info("fast and join routes agree ({} intervals)", result.size());
          }
          if (merge_tol > 0) result = labeled_mergegram(tidy(gram_from_labeled_mergegram(result)));
          break;
        }
      }
      write_output(out_path, labeled ? mergegram_to_json(result) : mergegram_to_json(result.unlabeled()));
      if (!svg_path.empty()) write_output(svg_path, diagram_svg(result.unlabeled()));
    } else if (*reeb) {
      const auto graph = face_reeb_graph(tidy(load_gram(in_path)));
      spdlog::info("Reeb graph: {} vertices, {} edges, cycle rank {}", graph.vertices().size(), graph.edges().size(),
                   graph.cycle_rank());
      write_output(out_path, reeb_to_dot(graph));
    } else if (*ph0) {
      const auto net = load_matrix(matrix_path);
      if (!is_ultranetwork(net)) throw ValidationError(matrix_path + ": not an ultrametric");
      std::vector<Interval> points;
      for (const auto& p : ph0_elder(Ultranetwork(net))) points.push_back({p.birth, p.death});
      write_output(out_path, mergegram_to_json(Mergegram(std::move(points))));
    } else if (*dist) {
      double d = 0.0;
      if (metric == "interleaving") {
        d = facegram_interleaving(load_gram(operands[0]), load_gram(operands[1]));
      } else {
        const auto a = load_mergegram(operands[0]);
        const auto b = load_mergegram(operands[1]);
        if (metric == "bottleneck") {
          d = bottleneck_distance(a.unlabeled, b.unlabeled);
        } else {
          if (!a.labeled || !b.labeled) throw UsageError("linf needs labeled mergegrams or grams");
          d = linf_labeled_distance(*a.labeled, *b.labeled);
        }
      }
      std::cout << detail::format_number(d) << "\n";
    } else if (*gen) {
      const auto trees = gen_random_treegrams({n, l, seed, linkage_from_string(method)});
      std::string newick;
      for (std::size_t k = 0; k < trees.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "tree_%03zu.csv", k + 1);
        write_output((fs::path(out_dir) / name).string(), serialize_matrix_csv(trees[k].network()));
        newick += newick_from_ultranetwork(trees[k]) + "\n";
      }
      write_output((fs::path(out_dir) / "trees.nwk").string(), newick);
    } else if (*progression) {
      const auto trees = newick_path.empty() ? gen_random_treegrams({n, l, seed, linkage_from_string(method)})
                                             : load_trees(newick_path, ultrametrize);
      std::vector<JoinMode> modes;
      if (progression_mode != "facegram") modes.push_back(JoinMode::cliquegram);
      if (progression_mode != "cliquegram") modes.push_back(JoinMode::facegram);
      std::string csv;
      std::vector<PlotSeries> series;
      bool all_ok = true;
      for (const JoinMode m : modes) {
        const auto rows = bottleneck_progression(trees, m, jobs);
        const std::string name(to_string(m));
        const std::string table = progression_csv(rows, name);
        csv += csv.empty() ? table : table.substr(table.find('\n') + 1);
        PlotSeries s{name, {}};
        for (const auto& r : rows) {
          s.points.emplace_back(static_cast<double>(r.k), r.distance);
          if (!r.below_next) {
            spdlog::error("{} join of the first {} trees is not below the next partial join", name, r.k);
            all_ok = false;
          }
        }
        if (rows.back().distance != 0.0) {
          spdlog::error("{}: final distance is {}, expected 0", name, rows.back().distance);
          all_ok = false;
        }
        series.push_back(std::move(s));
      }
      if (out_dir.empty()) {
        std::cout << csv;
      } else {
        write_output((fs::path(out_dir) / "progression.csv").string(), csv);
        write_output((fs::path(out_dir) / "progression.svg").string(),
                     line_plot_svg(series, "Bottleneck distance to the full join", "trees joined", "bottleneck"));
      }
      if (!all_ok) return 1;
    }
  } catch (const UsageError& e) {
    spdlog::error("{}", e.what());
    return 2;
  } catch (const ValidationError& e) {
    spdlog::error("{}", e.what());
    for (const auto& d : e.diagnostics()) spdlog::error("  {}", d);
    return 1;
  } catch (const IoError& e) {
    spdlog::error("{}", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    spdlog::error("{}", e.what());
    return 1;
  } catch (const std::exception& e) {
    // Resource limits and similar; still a failed run, not a usage error.
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
