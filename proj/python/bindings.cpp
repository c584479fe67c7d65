#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "quartet/compressor.hpp"
#include "quartet/cost_model.hpp"
#include "quartet/datagen.hpp"
#include "quartet/errors.hpp"
#include "quartet/matrix_io.hpp"
#include "quartet/ncd.hpp"
#include "quartet/newick.hpp"
#include "quartet/oracle.hpp"
#include "quartet/scoring.hpp"
#include "quartet/search.hpp"

namespace py = pybind11;
using namespace quartet;

namespace {

DistanceMatrix matrix_from_rows(const std::vector<std::string>& labels,
                                const std::vector<std::vector<double>>& rows) {
  const std::size_t n = labels.size();
  std::vector<double> entries;
  entries.reserve(n * n);
  if (rows.size() != n) throw input_error("row count does not match label count");
  for (const auto& row : rows) {
    if (row.size() != n) throw input_error("matrix rows must have n entries");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return DistanceMatrix(labels, std::move(entries));
}

std::vector<std::vector<double>> matrix_rows(const DistanceMatrix& m) {
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(m.n()));
  for (int i = 0; i < m.n(); ++i) {
    std::vector<double> row;
    row.reserve(static_cast<std::size_t>(m.n()));
    for (int j = 0; j < m.n(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

SearchConfig config_from_args(std::uint64_t seed, const std::string& termination,
                              std::uint64_t patience, int runs, int k_max,
                              std::optional<std::uint64_t> max_trees) {
  SearchConfig config;
  config.seed = seed;
  if (termination == "simple")
    config.termination = SearchConfig::Termination::simple;
  else if (termination == "agreement")
    config.termination = SearchConfig::Termination::agreement;
  else
    throw input_error("termination must be 'simple' or 'agreement'");
  config.patience = patience;
  config.runs = runs;
  config.k_max = k_max;
  config.max_trees = max_trees;
  return config;
}

Corpus corpus_from_items(const std::vector<std::pair<std::string, py::bytes>>& items) {
  Corpus corpus;
  for (const auto& [label, data] : items) {
    const std::string view = data;
    corpus.items.emplace_back(label,
                              std::vector<std::uint8_t>(view.begin(), view.end()));
  }
  corpus.validate();
  return corpus;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quartet-cost tree reconstruction core";

  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<degenerate_table_error>(m, "DegenerateTableError", PyExc_ValueError);
  py::register_exception<cap_exceeded_error>(m, "CapExceededError", PyExc_ValueError);
  py::register_exception<agreement_timeout_error>(m, "AgreementTimeoutError", PyExc_RuntimeError);

  py::class_<QuartetCostTable>(m, "CostTable")
      .def_property_readonly("n", &QuartetCostTable::n)
      .def_property_readonly("min_total", &QuartetCostTable::min_total)
      .def_property_readonly("max_total", &QuartetCostTable::max_total)
      .def_property_readonly("degenerate", &QuartetCostTable::degenerate)
      .def("__repr__", [](const QuartetCostTable& t) {
        return "<CostTable n=" + std::to_string(t.n()) + ">";
      });

  m.def(
      "cost_table",
      [](const std::vector<std::string>& labels, const std::vector<std::vector<double>>& rows) {
        return costs_from_matrix(matrix_from_rows(labels, rows));
      },
      py::arg("labels"), py::arg("distances"),
      "Quartet cost table from a symmetric distance matrix (C_ab|cd = d(a,b)+d(c,d))");

  m.def("no_perfect_tree_table", &no_perfect_tree_table, py::arg("epsilon"),
        "The 5-object instance whose best tree scores 4/(5-epsilon) < 1");

  m.def("count_trees", &count_trees, py::arg("n"),
        "(2n-5)!!, the number of ternary trees on n labeled leaves");

  m.def(
      "make_tree",
      [](const QuartetCostTable& table, const std::vector<std::string>& labels,
         std::uint64_t seed, const std::string& termination, std::uint64_t patience, int runs,
         int k_max, std::optional<std::uint64_t> max_trees) {
        const auto config =
            config_from_args(seed, termination, patience, runs, k_max, max_trees);
        if (static_cast<int>(labels.size()) != table.n())
          throw input_error("label count does not match table");
        ScoredTree best = [&] {
          py::gil_scoped_release release;
          if (config.termination == SearchConfig::Termination::simple) {
            Rng rng(config.seed, 0);
            return hill_climb(table, config, rng).first;
          }
          return search_with_agreement(table, config).best;
        }();
        return py::make_tuple(emit_newick(best.tree, labels), best.score);
      },
      py::arg("table"), py::arg("labels"), py::arg("seed") = 0,
      py::arg("termination") = "agreement", py::arg("patience") = 100000, py::arg("runs") = 0,
      py::arg("k_max") = 0, py::arg("max_trees") = py::none(),
      "Randomized hill climb; returns (newick, score)");

  m.def(
      "exact_tree",
      [](const QuartetCostTable& table, const std::vector<std::string>& labels, int cap) {
        if (static_cast<int>(labels.size()) != table.n())
          throw input_error("label count does not match table");
        auto [best, optima] = [&] {
          py::gil_scoped_release release;
          return brute_force_optimum(table, cap);
        }();
        return py::make_tuple(emit_newick(best.tree, labels), best.score, optima);
      },
      py::arg("table"), py::arg("labels"), py::arg("cap") = kDefaultEnumerationCap,
      "Exhaustive optimum for small n; returns (newick, score, optima_count)");

  m.def(
      "ncd",
      [](const py::bytes& x, const py::bytes& y, const std::string& compressor) {
        const std::string sx = x, sy = y;
        const auto c = make_compressor(compressor);
        return ncd_pair(std::vector<std::uint8_t>(sx.begin(), sx.end()),
                        std::vector<std::uint8_t>(sy.begin(), sy.end()), *c);
      },
      py::arg("x"), py::arg("y"), py::arg("compressor") = "bwt",
      "Normalized compression distance of two byte strings");

  m.def(
      "ncd_matrix",
      [](const std::vector<std::pair<std::string, py::bytes>>& items,
         const std::string& compressor) {
        const auto c = make_compressor(compressor);
        const Corpus corpus = corpus_from_items(items);
        const auto matrix = [&] {
          py::gil_scoped_release release;
          return ncd_matrix(corpus, *c);
        }();
        return py::make_tuple(matrix.labels(), matrix_rows(matrix));
      },
      py::arg("items"), py::arg("compressor") = "bwt",
      "Pairwise NCD matrix for (label, bytes) items; returns (labels, rows)");

  m.def(
      "random_tree_metric",
      [](int n, std::uint64_t seed, bool normalized) {
        Rng rng(seed, 0);
        const auto [tree, matrix] = random_tree_metric(n, rng, normalized);
        return py::make_tuple(emit_newick(tree, matrix.labels()), matrix.labels(),
                              matrix_rows(matrix));
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("normalized") = false,
      "Random ternary tree and its path-length metric; returns (newick, labels, rows)");

  m.def(
      "tag_corpus",
      [](std::uint64_t seed, bool ci_scale) {
        Rng rng(seed, 0);
        const Corpus corpus = tag_corpus(rng, ci_scale ? TagCorpusSpec::ci_scale()
                                                       : TagCorpusSpec::standard());
        std::vector<std::pair<std::string, py::bytes>> items;
        items.reserve(corpus.items.size());
        for (const auto& [label, bytes] : corpus.items)
          items.emplace_back(label, py::bytes(reinterpret_cast<const char*>(bytes.data()),
                                              bytes.size()));
        return items;
      },
      py::arg("seed") = 0, py::arg("ci_scale") = true,
      "Random files with planted shared tags, as (label, bytes) pairs");

  m.def(
      "sample_k",
      [](int k_max, std::uint64_t seed, int draws) {
        MutationLengthSampler sampler(k_max);
        Rng rng(seed, 0);
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(draws));
        for (int i = 0; i < draws; ++i) out.push_back(sampler.sample(rng));
        return out;
      },
      py::arg("k_max") = 64, py::arg("seed") = 0, py::arg("draws") = 1,
      "Draws from the truncated fat-tail mutation length distribution");
}
