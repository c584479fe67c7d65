#pragma once

#include <iosfwd>
#include <string>

#include "quartet/cost_model.hpp"
#include "quartet/distance_matrix.hpp"

namespace quartet {

// Matrix file: first line the object count n, then n lines of
// `label v1 .. vn` with whitespace-separated decimals (fixed or scientific).
DistanceMatrix parse_matrix(std::istream& in);
DistanceMatrix read_matrix_file(const std::string& path);
std::string format_matrix(const DistanceMatrix& m);
void write_matrix_file(const std::string& path, const DistanceMatrix& m);

// Weighted quartet list file: first line `quartets n`, an optional
// `labels l0 .. l(n-1)` line, then one `a b c d weight` line per topology
// meaning the split ab|cd of leaf ids. Returns the list and the labels
// (generated a, b, c, ... when no labels line is present).
std::pair<WeightedQuartetList, std::vector<std::string>> parse_weights(std::istream& in);
std::pair<WeightedQuartetList, std::vector<std::string>> read_weights_file(const std::string& path);

// True when the file's first token is the `quartets` keyword.
bool is_weights_file(const std::string& path);

}  // namespace quartet
