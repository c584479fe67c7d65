#include "quartet/quartet.hpp"

#include <algorithm>

#include "quartet/errors.hpp"

namespace quartet {

namespace {

std::uint64_t binom(std::uint64_t i, int k) {
  switch (k) {
    case 1:
      return i;
    case 2:
      return i * (i - 1) / 2;
    case 3:
      return i * (i - 1) * (i - 2) / 6;
    case 4:
      return i * (i - 1) * (i - 2) * (i - 3) / 24;
    default:
      return 0;
  }
}

}  // namespace

Topology make_topology(int a, int b, int c, int d) {
  std::array<int, 4> sorted{a, b, c, d};
  std::sort(sorted.begin(), sorted.end());
  if (sorted[0] == sorted[1] || sorted[1] == sorted[2] || sorted[2] == sorted[3] || sorted[0] < 0)
    throw input_error("topology needs four distinct non-negative leaf ids");
  const int smallest = sorted[0];
  const int partner = (a == smallest || b == smallest) ? (a == smallest ? b : a)
                                                       : (c == smallest ? d : c);
  Pairing p;
  if (partner == sorted[1])
    p = Pairing::small_second;
  else if (partner == sorted[2])
    p = Pairing::small_third;
  else
    p = Pairing::small_fourth;
  return Topology{Quartet{sorted}, p};
}

std::uint64_t quartet_rank(int u, int v, int w, int x) {
  return binom(static_cast<std::uint64_t>(u), 1) + binom(static_cast<std::uint64_t>(v), 2) +
         binom(static_cast<std::uint64_t>(w), 3) + binom(static_cast<std::uint64_t>(x), 4);
}

Quartet quartet_unrank(std::uint64_t rank) {
  // Invert colex rank one coordinate at a time, largest first.
  auto take = [&rank](int k) {
    std::uint64_t i = static_cast<std::uint64_t>(k) - 1;
    while (binom(i + 1, k) <= rank) ++i;
    rank -= binom(i, k);
    return static_cast<int>(i);
  };
  const int x = take(4);
  const int w = take(3);
  const int v = take(2);
  const int u = take(1);
  return Quartet{{u, v, w, x}};
}

std::uint64_t quartet_count(int n) {
  return binom(static_cast<std::uint64_t>(n), 4);
}

}  // namespace quartet
