#pragma once

#include <string>
#include <vector>

namespace quartet {

// Labeled n x n pairwise distances. Construction canonicalizes near-symmetric
// input by averaging mirror entries; asymmetry beyond `tolerance` is
// rejected. Diagonal entries are recorded (real compressors give nonzero
// self-distances) but never enter quartet cost derivation.
class DistanceMatrix {
 public:
  static constexpr double kDefaultTolerance = 1e-9;

  DistanceMatrix(std::vector<std::string> labels, std::vector<double> entries,
                 double tolerance = kDefaultTolerance);

  int n() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  double at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n() + j]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> entries_;  // row-major, exactly symmetric off-diagonal
};

}  // namespace quartet
