#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quartet/compressor.hpp"
#include "quartet/distance_matrix.hpp"

namespace quartet {

// Ordered (label, contents) items; labels unique, contents non-empty.
struct Corpus {
  std::vector<std::pair<std::string, std::vector<std::uint8_t>>> items;

  void validate() const;  // throws input_error on violations
};

// Normalized compression distance for one ordered concatenation:
//   (C(x||y) - min(C(x), C(y))) / max(C(x), C(y)).
// Near 0 for near-identical inputs, near 1 for unrelated incompressible
// ones; small overshoots of 1 are normal for real compressors.
double ncd_pair(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y,
                const Compressor& c);

// Full pairwise matrix. Singleton sizes are compressed once and cached; the
// off-diagonal entry is the max of the two concatenation orders, which makes
// the matrix exactly symmetric. Pairs are computed concurrently into fixed
// slots, so the result does not depend on scheduling.
DistanceMatrix ncd_matrix(const Corpus& corpus, const Compressor& c);

}  // namespace quartet
