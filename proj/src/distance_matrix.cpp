#include "quartet/distance_matrix.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "quartet/errors.hpp"

namespace quartet {

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, std::vector<double> entries,
                               double tolerance)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const int n = static_cast<int>(labels_.size());
  if (entries_.size() != static_cast<std::size_t>(n) * n)
    throw input_error("distance matrix entries are not n*n");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw input_error("empty label");
    if (!seen.insert(l).second) throw input_error("duplicate label: " + l);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const double a = at(i, j);
      const double b = at(j, i);
      if (!std::isfinite(a) || !std::isfinite(b))
        throw input_error("non-finite distance between " + labels_[i] + " and " + labels_[j]);
      if (a < 0.0 || b < 0.0)
        throw input_error("negative distance between " + labels_[i] + " and " + labels_[j]);
      if (std::fabs(a - b) > tolerance)
        throw input_error("asymmetry beyond tolerance between " + labels_[i] + " and " +
                          labels_[j]);
      const double avg = 0.5 * (a + b);
      entries_[static_cast<std::size_t>(i) * n + j] = avg;
      entries_[static_cast<std::size_t>(j) * n + i] = avg;
    }
    if (!std::isfinite(at(i, i))) throw input_error("non-finite diagonal at " + labels_[i]);
  }
}

}  // namespace quartet
