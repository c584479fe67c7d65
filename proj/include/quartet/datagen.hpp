#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quartet/distance_matrix.hpp"
#include "quartet/ncd.hpp"
#include "quartet/rng.hpp"
#include "quartet/tree.hpp"

namespace quartet {

// Spreadsheet-style leaf names: a..z, aa, ab, ...
std::string alpha_label(int i);

// A random ternary tree plus the metric d(a,b) = (L(a,b)+1)/18 on its
// leaves, where L is the leaf path length in edges and d(a,a) = 0. The
// divisor stays 18 for every n (only monotonicity in L matters for
// reconstruction); `normalized` switches to (L+1)/(2n) so distances keep
// within (0,1] for large n.
std::pair<Tree, DistanceMatrix> random_tree_metric(int n, Rng& rng, bool normalized = false);

// Corpus of files that are random bytes plus planted copies of shared random
// "tag" blocks: per tag in a file's name, `copies_per_tag` overwrites at
// random offsets (later tags may clobber earlier ones). Files sharing more
// tags compress better together, so an NCD tree should cluster them.
struct TagCorpusSpec {
  int num_tags = 11;
  std::size_t tag_size = 1024;
  std::size_t file_size = 80 * 1024;
  int copies_per_tag = 10;
  // File names; each name is the multiset of tags it carries, at most 4.
  std::vector<std::string> combos;

  // The 22-file layout: singletons (all but "b"), pairs, triples and quads
  // over tags a..k.
  static TagCorpusSpec standard();
  // Smaller files and tags with the same combination structure, for fast
  // test runs.
  static TagCorpusSpec ci_scale();
};

Corpus tag_corpus(Rng& rng, const TagCorpusSpec& spec = TagCorpusSpec::standard());

}  // namespace quartet
