#include "quartet/ncd.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "quartet/errors.hpp"

namespace quartet {

void Corpus::validate() const {
  std::set<std::string> seen;
  for (const auto& [label, bytes] : items) {
    if (label.empty()) throw input_error("corpus item with empty label");
    if (!seen.insert(label).second) throw input_error("duplicate corpus label: " + label);
    if (bytes.empty()) throw input_error("corpus item " + label + " is empty");
  }
}

namespace {

double ncd_from_sizes(std::size_t cx, std::size_t cy, std::size_t cxy) {
  const double lo = static_cast<double>(std::min(cx, cy));
  const double hi = static_cast<double>(std::max(cx, cy));
  // A real compressor can in principle shave a byte or two off the pair
  // versus the singleton; keep the distance non-negative.
  return std::max(0.0, (static_cast<double>(cxy) - lo) / hi);
}

std::vector<std::uint8_t> concat(const std::vector<std::uint8_t>& x,
                                 const std::vector<std::uint8_t>& y) {
  std::vector<std::uint8_t> xy;
  xy.reserve(x.size() + y.size());
  xy.insert(xy.end(), x.begin(), x.end());
  xy.insert(xy.end(), y.begin(), y.end());
  return xy;
}

}  // namespace

double ncd_pair(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y,
                const Compressor& c) {
  if (x.empty() || y.empty()) throw input_error("ncd inputs must be non-empty");
  return ncd_from_sizes(c.compressed_size(x), c.compressed_size(y),
                        c.compressed_size(concat(x, y)));
}

DistanceMatrix ncd_matrix(const Corpus& corpus, const Compressor& c) {
  corpus.validate();
  const int n = static_cast<int>(corpus.items.size());
  if (n < 4) throw input_error("ncd matrix needs at least 4 objects");

  // Warm the singleton cache once, then fan the independent jobs (diagonal
  // self-distances and both concatenation orders per pair) out over threads.
  // Every job writes a fixed slot, so the result is schedule-independent.
  std::vector<std::size_t> single(static_cast<std::size_t>(n));
  std::vector<double> entries(static_cast<std::size_t>(n) * n, 0.0);

  struct Job {
    int i, j;  // entry slot; i == j is a self-distance
  };
  std::vector<Job> jobs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) jobs.push_back({i, j});

  auto run_job = [&](const Job& job) {
    const auto& x = corpus.items[static_cast<std::size_t>(job.i)].second;
    const auto& y = corpus.items[static_cast<std::size_t>(job.j)].second;
    const std::size_t cx = single[static_cast<std::size_t>(job.i)];
    const std::size_t cy = single[static_cast<std::size_t>(job.j)];
    double d;
    if (job.i == job.j) {
      d = ncd_from_sizes(cx, cy, c.compressed_size(concat(x, x)));
    } else {
      const double fwd = ncd_from_sizes(cx, cy, c.compressed_size(concat(x, y)));
      const double rev = ncd_from_sizes(cx, cy, c.compressed_size(concat(y, x)));
      d = std::max(fwd, rev);
    }
    entries[static_cast<std::size_t>(job.i) * n + job.j] = d;
    entries[static_cast<std::size_t>(job.j) * n + job.i] = d;
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(jobs.size()));
  {
    std::atomic<std::size_t> next_single{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<unsigned>(workers, static_cast<unsigned>(n)); ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next_single.fetch_add(1)) < single.size();)
          single[i] = c.compressed_size(corpus.items[i].second);
      });
  }
  {
    std::atomic<std::size_t> next_job{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next_job.fetch_add(1)) < jobs.size();) run_job(jobs[i]);
      });
  }

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (const auto& [label, bytes] : corpus.items) labels.push_back(label);
  return DistanceMatrix(std::move(labels), std::move(entries));
}

}  // namespace quartet
