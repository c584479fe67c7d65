// quartet: tree reconstruction from quartet-topology costs.
//
// Subcommands:
//   maketree  distance matrix -> best tree by randomized hill climbing
//   exact     distance matrix or weight list -> provably optimal tree (small n)
//   ncd       directory or manifest -> compression distance matrix
//   gen       generators for controlled experiments
//
// Exit codes: 0 ok, 2 input error, 3 degenerate cost table,
// 4 agreement timeout, 5 enumeration cap exceeded.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "quartet/cost_model.hpp"
#include "quartet/datagen.hpp"
#include "quartet/errors.hpp"
#include "quartet/matrix_io.hpp"
#include "quartet/ncd.hpp"
#include "quartet/newick.hpp"
#include "quartet/oracle.hpp"
#include "quartet/scoring.hpp"
#include "quartet/search.hpp"

namespace fs = std::filesystem;
using namespace quartet;

namespace {

std::string format_score(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  out << text;
}

struct TerminationFlag {
  SearchConfig::Termination mode = SearchConfig::Termination::agreement;
  std::uint64_t patience = 100000;
  int runs = 0;  // agreement: 0 = pick by n
};

TerminationFlag parse_termination(const std::string& text) {
  TerminationFlag t;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "simple") {
    t.mode = SearchConfig::Termination::simple;
    if (!arg.empty()) t.patience = std::stoull(arg);
    if (t.patience < 1) throw input_error("patience must be >= 1");
  } else if (head == "agreement") {
    t.mode = SearchConfig::Termination::agreement;
    if (!arg.empty()) t.runs = std::stoi(arg);
    if (!arg.empty() && (t.runs < 1 || t.runs > 6))
      throw input_error("agreement runs must be in [1,6]");
  } else {
    throw input_error("termination must be simple[:PATIENCE] or agreement[:R]");
  }
  return t;
}

void write_stats(const std::string& path, const std::vector<RunStats>& runs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& st = runs[i];
    out << "# run " << i << "\n";
    out << "# trajectory: trees_examined S\n";
    for (auto [examined, s] : st.trajectory) out << examined << " " << format_score(s) << "\n";
    out << "# histogram: k accepted rejected\n";
    for (std::size_t k = 1; k < st.accepted_k.size(); ++k)
      if (st.accepted_k[k] || st.rejected_k[k])
        out << k << " " << st.accepted_k[k] << " " << st.rejected_k[k] << "\n";
  }
  write_text(path, out.str());
}

Corpus load_corpus(const std::string& input) {
  Corpus corpus;
  auto read_file = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw input_error("cannot read " + p.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
  };
  if (fs::is_directory(input)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(input))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) corpus.items.emplace_back(p.filename().string(), read_file(p));
  } else {
    // Manifest: one `label path` pair per line; paths are relative to the
    // manifest's directory.
    std::ifstream in(input);
    if (!in) throw input_error("cannot open " + input);
    const fs::path base = fs::path(input).parent_path();
    std::string label, path;
    while (in >> label >> path) corpus.items.emplace_back(label, read_file(base / path));
  }
  corpus.validate();
  return corpus;
}

int cmd_maketree(const std::string& matrix_path, const std::string& termination,
                 std::uint64_t seed, int k_max, std::optional<std::uint64_t> cap,
                 const std::string& out_path, const std::string& stats_path,
                 const std::string& graph_path) {
  const DistanceMatrix matrix = read_matrix_file(matrix_path);
  if (matrix.n() < 4) throw input_error("need at least 4 objects, got " + std::to_string(matrix.n()));
  const QuartetCostTable table = costs_from_matrix(matrix);

  SearchConfig config;
  config.seed = seed;
  config.k_max = k_max;
  config.max_trees = cap;
  const TerminationFlag flag = parse_termination(termination);
  config.termination = flag.mode;
  config.patience = flag.patience;
  config.runs = flag.runs;

  ScoredTree best = [&] {
    if (config.termination == SearchConfig::Termination::simple) {
      Rng rng(config.seed, 0);
      auto [scored, stats] = hill_climb(table, config, rng);
      if (!stats_path.empty()) write_stats(stats_path, {std::move(stats)});
      return std::move(scored);
    }
    auto result = search_with_agreement(table, config);
    if (!stats_path.empty()) write_stats(stats_path, result.runs);
    return std::move(result.best);
  }();

  const std::string newick = emit_newick(best.tree, matrix.labels());
  std::cout << newick << "\n";
  std::cout << "S(T) = " << format_score(best.score) << "\n";
  if (!out_path.empty()) write_text(out_path, newick + "\n");
  if (!graph_path.empty()) write_text(graph_path, emit_graph(best.tree, matrix.labels()));
  return 0;
}

int cmd_exact(const std::string& input_path, int cap, const std::string& out_path,
              const std::string& graph_path) {
  QuartetCostTable table;
  std::vector<std::string> labels;
  if (is_weights_file(input_path)) {
    auto [list, names] = read_weights_file(input_path);
    table = costs_from_weights(list);
    labels = std::move(names);
  } else {
    const DistanceMatrix matrix = read_matrix_file(input_path);
    table = costs_from_matrix(matrix);
    labels = matrix.labels();
  }

  auto [best, optima] = brute_force_optimum(table, cap);
  const std::string newick = emit_newick(best.tree, labels);
  std::cout << newick << "\n";
  std::cout << "S(T) = " << format_score(best.score) << "\n";
  std::cout << "optimal trees: " << optima << "\n";
  if (!out_path.empty()) write_text(out_path, newick + "\n");
  if (!graph_path.empty()) write_text(graph_path, emit_graph(best.tree, labels));
  return 0;
}

int cmd_ncd(const std::string& input, const std::string& compressor_name,
            const std::string& out_path) {
  const Corpus corpus = load_corpus(input);
  if (corpus.items.size() < 4)
    throw input_error("need at least 4 objects, got " + std::to_string(corpus.items.size()));
  const auto compressor = make_compressor(compressor_name);
  const DistanceMatrix matrix = ncd_matrix(corpus, *compressor);
  if (out_path.empty())
    std::cout << format_matrix(matrix);
  else
    write_matrix_file(out_path, matrix);
  return 0;
}

int cmd_gen_random_tree(int n, std::uint64_t seed, bool normalized, const std::string& out_dir) {
  Rng rng(seed, 0);
  auto [tree, matrix] = random_tree_metric(n, rng, normalized);
  fs::create_directories(out_dir);
  write_matrix_file((fs::path(out_dir) / "matrix.txt").string(), matrix);
  write_text((fs::path(out_dir) / "tree.nwk").string(), emit_newick(tree, matrix.labels()) + "\n");
  std::cout << "wrote " << out_dir << "/matrix.txt and " << out_dir << "/tree.nwk\n";
  return 0;
}

int cmd_gen_tags(std::uint64_t seed, bool ci_scale, std::optional<std::size_t> file_size,
                 std::optional<std::size_t> tag_size, std::optional<int> copies,
                 const std::string& out_dir) {
  TagCorpusSpec spec = ci_scale ? TagCorpusSpec::ci_scale() : TagCorpusSpec::standard();
  if (file_size) spec.file_size = *file_size;
  if (tag_size) spec.tag_size = *tag_size;
  if (copies) spec.copies_per_tag = *copies;
  Rng rng(seed, 0);
  const Corpus corpus = tag_corpus(rng, spec);
  fs::create_directories(out_dir);
  for (const auto& [label, bytes] : corpus.items) {
    std::ofstream out(fs::path(out_dir) / label, std::ios::binary);
    if (!out) throw input_error("cannot write " + (fs::path(out_dir) / label).string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  }
  std::cout << "wrote " << corpus.items.size() << " files to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal-weight tree reconstruction from quartet topology costs"};
  app.require_subcommand(1);

  // maketree
  std::string mt_matrix, mt_termination = "agreement", mt_out, mt_stats, mt_graph;
  std::uint64_t mt_seed = 0;
  int mt_kmax = 0;
  std::optional<std::uint64_t> mt_cap;
  auto* maketree = app.add_subcommand("maketree", "Search for the best tree for a distance matrix");
  maketree->add_option("matrix", mt_matrix, "Distance matrix file")->required();
  maketree->add_option("--seed", mt_seed, "Random seed");
  maketree->add_option("--termination", mt_termination, "simple[:PATIENCE] or agreement[:R]");
  maketree->add_option("--kmax", mt_kmax, "Mutation length cap (0 = max(64, 2n))");
  maketree->add_option("--cap", mt_cap, "Max trees examined per run");
  maketree->add_option("-o,--output", mt_out, "Write the tree (Newick) here");
  maketree->add_option("--stats", mt_stats, "Write trajectory and mutation histograms here");
  maketree->add_option("--graph", mt_graph, "Write a node/edge list here");

  // exact
  std::string ex_input, ex_out, ex_graph;
  int ex_cap = kDefaultEnumerationCap;
  auto* exact = app.add_subcommand("exact", "Exhaustive optimum for small n");
  exact->add_option("input", ex_input, "Distance matrix or weighted quartet file")->required();
  exact->add_option("--cap", ex_cap, "Enumeration cap on n");
  exact->add_option("-o,--output", ex_out, "Write the tree (Newick) here");
  exact->add_option("--graph", ex_graph, "Write a node/edge list here");

  // ncd
  std::string ncd_input, ncd_compressor = "bwt", ncd_out;
  auto* ncd = app.add_subcommand("ncd", "Compression distance matrix for files");
  ncd->add_option("input", ncd_input, "Directory of files, or manifest of `label path` lines")
      ->required();
  ncd->add_option("--compressor", ncd_compressor, "bwt or deflate");
  ncd->add_option("-o,--output", ncd_out, "Write the matrix here (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generators for controlled experiments");
  gen->require_subcommand(1);
  int rt_n = 18;
  std::uint64_t rt_seed = 0;
  bool rt_normalized = false;
  std::string rt_out;
  auto* gen_rt = gen->add_subcommand("random-tree", "Random tree and its path-length metric");
  gen_rt->add_option("--n", rt_n, "Leaf count");
  gen_rt->add_option("--seed", rt_seed, "Random seed");
  gen_rt->add_flag("--normalized", rt_normalized, "Divide by 2n instead of 18");
  gen_rt->add_option("--out", rt_out, "Output directory")->required();

  std::uint64_t tg_seed = 0;
  bool tg_ci = false;
  std::optional<std::size_t> tg_file_size, tg_tag_size;
  std::optional<int> tg_copies;
  std::string tg_out;
  auto* gen_tags = gen->add_subcommand("tags", "Random files with planted shared tags");
  gen_tags->add_option("--seed", tg_seed, "Random seed");
  gen_tags->add_flag("--ci-scale", tg_ci, "8 KiB files with 128 B tags");
  gen_tags->add_option("--file-size", tg_file_size, "File size in bytes");
  gen_tags->add_option("--tag-size", tg_tag_size, "Tag size in bytes");
  gen_tags->add_option("--copies", tg_copies, "Tag copies per file");
  gen_tags->add_option("--out", tg_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
    if (maketree->parsed())
      return cmd_maketree(mt_matrix, mt_termination, mt_seed, mt_kmax, mt_cap, mt_out, mt_stats,
                          mt_graph);
    if (exact->parsed()) return cmd_exact(ex_input, ex_cap, ex_out, ex_graph);
    if (ncd->parsed()) return cmd_ncd(ncd_input, ncd_compressor, ncd_out);
    if (gen->parsed()) {
      if (gen_rt->parsed()) return cmd_gen_random_tree(rt_n, rt_seed, rt_normalized, rt_out);
      if (gen_tags->parsed())
        return cmd_gen_tags(tg_seed, tg_ci, tg_file_size, tg_tag_size, tg_copies, tg_out);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const degenerate_table_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const agreement_timeout_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (std::size_t i = 0; i < e.best_per_run.size(); ++i)
      std::cerr << "  run " << i << " best S(T) = " << format_score(e.best_per_run[i].score) << "\n";
    return 4;
  } catch (const cap_exceeded_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
