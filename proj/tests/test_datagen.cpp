#include "quartet/datagen.hpp"

#include <string_view>
#include <unordered_set>

#include "doctest.h"
#include "quartet/cost_model.hpp"
#include "quartet/errors.hpp"
#include "quartet/scoring.hpp"

using namespace quartet;

TEST_SUITE_BEGIN("datagen");

TEST_CASE("alpha labels") {
  CHECK(alpha_label(0) == "a");
  CHECK(alpha_label(25) == "z");
  CHECK(alpha_label(26) == "aa");
  CHECK(alpha_label(27) == "ab");
}

TEST_CASE("random tree metric fixes distances from path lengths") {
  Rng rng(157);
  const auto [tree, matrix] = random_tree_metric(18, rng);
  const auto hops = tree.leaf_distances();
  const int n = 18;
  double smallest = 1.0;
  for (int a = 0; a < n; ++a) {
    CHECK(matrix.at(a, a) == 0.0);
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      CHECK(matrix.at(a, b) == (hops[a * n + b] + 1.0) / 18.0);
      smallest = std::min(smallest, matrix.at(a, b));
    }
  }
  // Leaf-to-leaf paths have at least 2 edges, so the smallest entry is 3/18.
  CHECK(smallest == 3.0 / 18.0);
}

TEST_CASE("the metric's cheapest pairing is the generating tree's topology") {
  Rng rng(163);
  for (int n : {6, 10}) {
    const auto [tree, matrix] = random_tree_metric(n, rng);
    const auto table = costs_from_matrix(matrix);
    const auto embedded = embedded_quartet_set(tree);
    for (std::uint64_t rank = 0; rank < embedded.size(); ++rank) {
      const auto winner = static_cast<std::uint64_t>(embedded[rank]);
      for (std::uint64_t p = 0; p < 3; ++p)
        if (p != winner)
          CHECK(table.cost(rank, static_cast<Pairing>(winner)) <
                table.cost(rank, static_cast<Pairing>(p)));
    }
  }
}

TEST_CASE("normalized variant keeps distances at most one for large n") {
  Rng rng(167);
  const int n = 30;
  const auto [tree, matrix] = random_tree_metric(n, rng, true);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) {
        CHECK(matrix.at(a, b) > 0.0);
        CHECK(matrix.at(a, b) <= 1.0);
      }
}

namespace {

// All distinct length-`len` windows of a byte string.
std::unordered_set<std::string_view> windows(const std::vector<std::uint8_t>& bytes,
                                             std::size_t len) {
  std::unordered_set<std::string_view> out;
  const char* base = reinterpret_cast<const char*>(bytes.data());
  for (std::size_t i = 0; i + len <= bytes.size(); ++i) out.emplace(base + i, len);
  return out;
}

bool share_window(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b,
                  std::size_t len) {
  const auto wa = windows(a, len);
  const char* base = reinterpret_cast<const char*>(b.data());
  for (std::size_t i = 0; i + len <= b.size(); ++i)
    if (wa.count(std::string_view(base + i, len))) return true;
  return false;
}

const std::vector<std::uint8_t>& item(const Corpus& c, const std::string& label) {
  for (const auto& [name, bytes] : c.items)
    if (name == label) return bytes;
  throw std::runtime_error("missing corpus item " + label);
}

}  // namespace

TEST_CASE("tag corpus layout") {
  Rng rng(173);
  const Corpus corpus = tag_corpus(rng);
  CHECK(corpus.items.size() == 22);
  for (const auto& [label, bytes] : corpus.items) CHECK(bytes.size() == 80 * 1024);
  // At most 4 tags of 10 copies each: planted bytes never exceed half a file.
  const TagCorpusSpec spec = TagCorpusSpec::standard();
  CHECK(4 * spec.copies_per_tag * spec.tag_size * 2 <= spec.file_size);
}

TEST_CASE("files sharing a tag share an intact tag-sized block") {
  Rng rng(179);
  const Corpus corpus = tag_corpus(rng, TagCorpusSpec::ci_scale());
  const std::size_t tag = TagCorpusSpec::ci_scale().tag_size;
  CHECK(share_window(item(corpus, "a"), item(corpus, "ab"), tag));
  CHECK(share_window(item(corpus, "a"), item(corpus, "abc"), tag));
  CHECK(share_window(item(corpus, "ef"), item(corpus, "efgh"), tag));
  // Disjoint tags mean no common block: the rest is independent random data.
  CHECK(!share_window(item(corpus, "a"), item(corpus, "cd"), tag));
  CHECK(!share_window(item(corpus, "gh"), item(corpus, "ijk"), tag));
}

TEST_CASE("tag corpus is reproducible and validates combos") {
  Rng r1(181), r2(181);
  const Corpus a = tag_corpus(r1, TagCorpusSpec::ci_scale());
  const Corpus b = tag_corpus(r2, TagCorpusSpec::ci_scale());
  REQUIRE(a.items.size() == b.items.size());
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    CHECK(a.items[i].first == b.items[i].first);
    CHECK(a.items[i].second == b.items[i].second);
  }

  TagCorpusSpec bad = TagCorpusSpec::ci_scale();
  bad.combos = {"abcde"};
  Rng rng(191);
  CHECK_THROWS_AS(tag_corpus(rng, bad), input_error);
  bad.combos = {"az"};  // 'z' is beyond the 11 tags
  CHECK_THROWS_AS(tag_corpus(rng, bad), input_error);
}

TEST_SUITE_END();
