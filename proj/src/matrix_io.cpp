#include "quartet/matrix_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "quartet/datagen.hpp"
#include "quartet/errors.hpp"

namespace quartet {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return in;
}

double parse_real(const std::string& token, int line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size())
    throw input_error("line " + std::to_string(line_no) + ": bad number '" + token + "'");
  return v;
}

// Shortest decimal form that parses back to the same double.
std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  for (int prec = 1; prec < 17; ++prec) {
    char probe[32];
    std::snprintf(probe, sizeof probe, "%.*g", prec, v);
    if (std::stod(probe) == v) return probe;
  }
  return buf;
}

}  // namespace

DistanceMatrix parse_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw input_error("line 1: missing object count");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(line, &used);
    while (used < line.size() && std::isspace(static_cast<unsigned char>(line[used]))) ++used;
    if (used != line.size()) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw input_error("line 1: expected the object count, got '" + line + "'");
  }
  if (n < 1) throw input_error("line 1: object count must be positive");

  std::vector<std::string> labels;
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    const int line_no = row + 2;
    if (!std::getline(in, line))
      throw input_error("line " + std::to_string(line_no) + ": missing matrix row");
    std::istringstream ss(line);
    std::string label;
    if (!(ss >> label))
      throw input_error("line " + std::to_string(line_no) + ": empty matrix row");
    labels.push_back(label);
    std::string token;
    int count = 0;
    while (ss >> token) {
      ++count;
      if (count <= n) entries.push_back(parse_real(token, line_no));
    }
    if (count != n)
      throw input_error("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                        " values, found " + std::to_string(count));
  }
  return DistanceMatrix(std::move(labels), std::move(entries));
}

DistanceMatrix read_matrix_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_matrix(in);
}

std::string format_matrix(const DistanceMatrix& m) {
  std::ostringstream out;
  out << m.n() << "\n";
  for (const auto& label : m.labels())
    for (char c : label)
      if (std::isspace(static_cast<unsigned char>(c)))
        throw input_error("label '" + label + "' contains whitespace");
  for (int i = 0; i < m.n(); ++i) {
    out << m.labels()[static_cast<std::size_t>(i)];
    for (int j = 0; j < m.n(); ++j) out << " " << format_real(m.at(i, j));
    out << "\n";
  }
  return out.str();
}

void write_matrix_file(const std::string& path, const DistanceMatrix& m) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  out << format_matrix(m);
}

std::pair<WeightedQuartetList, std::vector<std::string>> parse_weights(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw input_error("line 1: missing 'quartets n' header");
  std::istringstream header(line);
  std::string keyword;
  int n = 0;
  if (!(header >> keyword >> n) || keyword != "quartets")
    throw input_error("line 1: expected 'quartets n'");
  if (n < 4) throw input_error("line 1: need at least 4 objects");

  WeightedQuartetList list;
  list.n = n;
  std::vector<std::string> labels;

  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;  // blank line
    if (first == "labels") {
      std::string l;
      while (ss >> l) labels.push_back(l);
      if (static_cast<int>(labels.size()) != n)
        throw input_error("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                          " labels");
      continue;
    }
    int ids[4];
    std::istringstream entry(line);
    std::string ta, tb, tc, td, tw, extra;
    if (!(entry >> ta >> tb >> tc >> td >> tw) || (entry >> extra))
      throw input_error("line " + std::to_string(line_no) + ": expected 'a b c d weight'");
    const std::string* toks[4] = {&ta, &tb, &tc, &td};
    for (int i = 0; i < 4; ++i) {
      const double v = parse_real(*toks[i], line_no);
      ids[i] = static_cast<int>(v);
      if (v != ids[i] || ids[i] < 0 || ids[i] >= n)
        throw input_error("line " + std::to_string(line_no) + ": bad leaf id '" + *toks[i] + "'");
    }
    Topology topo;
    try {
      topo = make_topology(ids[0], ids[1], ids[2], ids[3]);
    } catch (const input_error&) {
      throw input_error("line " + std::to_string(line_no) + ": leaf ids must be distinct");
    }
    list.entries.emplace_back(topo, parse_real(tw, line_no));
  }

  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(alpha_label(i));
  return {std::move(list), std::move(labels)};
}

std::pair<WeightedQuartetList, std::vector<std::string>> read_weights_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_weights(in);
}

bool is_weights_file(const std::string& path) {
  auto in = open_or_throw(path);
  std::string first;
  in >> first;
  return first == "quartets";
}

}  // namespace quartet
