#include "quartet/datagen.hpp"

#include <algorithm>

#include "quartet/errors.hpp"
#include "quartet/search.hpp"

namespace quartet {

std::string alpha_label(int i) {
  std::string s;
  for (i += 1; i > 0; i = (i - 1) / 26) s.insert(s.begin(), static_cast<char>('a' + (i - 1) % 26));
  return s;
}

std::pair<Tree, DistanceMatrix> random_tree_metric(int n, Rng& rng, bool normalized) {
  Tree t = random_tree(n, rng);
  const auto hops = t.leaf_distances();
  const double divisor = normalized ? 2.0 * n : 18.0;
  std::vector<double> entries(static_cast<std::size_t>(n) * n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b)
        entries[static_cast<std::size_t>(a) * n + b] =
            (static_cast<double>(hops[static_cast<std::size_t>(a) * n + b]) + 1.0) / divisor;
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = alpha_label(i);
  return {std::move(t), DistanceMatrix(std::move(labels), std::move(entries))};
}

TagCorpusSpec TagCorpusSpec::standard() {
  TagCorpusSpec spec;
  spec.combos = {
      // singletons; "b" is deliberately absent
      "a", "c", "d", "e", "f", "g", "h", "i", "j", "k",
      // pairs
      "ab", "cd", "ef", "gh", "ij", "jk",
      // triples
      "abc", "def", "ghi", "ijk",
      // quads
      "abcd", "efgh"};
  return spec;
}

TagCorpusSpec TagCorpusSpec::ci_scale() {
  TagCorpusSpec spec = standard();
  spec.tag_size = 128;
  spec.file_size = 8 * 1024;
  return spec;
}

Corpus tag_corpus(Rng& rng, const TagCorpusSpec& spec) {
  if (spec.num_tags < 1 || spec.num_tags > 26) throw input_error("tag count must be in [1,26]");
  if (spec.tag_size == 0 || spec.tag_size > spec.file_size)
    throw input_error("tag size must be in [1, file_size]");

  auto random_block = [&rng](std::size_t size) {
    std::vector<std::uint8_t> block(size);
    for (auto& b : block) b = static_cast<std::uint8_t>(rng.next_int(256));
    return block;
  };

  // One globally consistent block per tag letter.
  std::vector<std::vector<std::uint8_t>> tags;
  tags.reserve(static_cast<std::size_t>(spec.num_tags));
  for (int i = 0; i < spec.num_tags; ++i) tags.push_back(random_block(spec.tag_size));

  Corpus corpus;
  for (const auto& combo : spec.combos) {
    if (combo.empty() || combo.size() > 4)
      throw input_error("tag combination '" + combo + "' must use 1 to 4 tags");
    auto file = random_block(spec.file_size);
    for (char tag : combo) {
      const int idx = tag - 'a';
      if (idx < 0 || idx >= spec.num_tags)
        throw input_error("tag combination '" + combo + "' uses an unknown tag");
      // Later placements may overwrite earlier tags; that is part of the
      // construction.
      for (int copy = 0; copy < spec.copies_per_tag; ++copy) {
        const std::size_t offset = static_cast<std::size_t>(
            rng.next_int(static_cast<int>(spec.file_size - spec.tag_size + 1)));
        std::copy(tags[static_cast<std::size_t>(idx)].begin(),
                  tags[static_cast<std::size_t>(idx)].end(), file.begin() + offset);
      }
    }
    corpus.items.emplace_back(combo, std::move(file));
  }
  corpus.validate();
  return corpus;
}

}  // namespace quartet
