#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace quartet {

// One of the three ways to split a 4-set into sibling pairs. The value is
// the partner of the smallest member after sorting the quartet ascending:
// with u<v<w<x, small_second = uv|wx, small_third = uw|vx,
// small_fourth = ux|vw. This encoding is stable under any reordering of the
// input 4-set, which is what run-agreement comparison relies on.
enum class Pairing : std::uint8_t {
  small_second = 0,
  small_third = 1,
  small_fourth = 2,
};

struct Quartet {
  std::array<int, 4> leaf;  // strictly increasing
};

struct Topology {
  Quartet q;
  Pairing p;
};

// Canonical topology for the split {a,b}|{c,d} of four distinct leaf ids.
Topology make_topology(int a, int b, int c, int d);

// Colex rank of a sorted quartet within the canonical listing of all C(n,4)
// quartets: rank(u<v<w<x) = C(u,1)+C(v,2)+C(w,3)+C(x,4). The iteration
// order x, then w, then v, then u visits ranks 0,1,2,... consecutively.
std::uint64_t quartet_rank(int u, int v, int w, int x);
Quartet quartet_unrank(std::uint64_t rank);

std::uint64_t quartet_count(int n);  // C(n,4)

// Calls fn(rank, u, v, w, x) for every quartet in canonical (rank) order.
template <typename Fn>
void for_each_quartet(int n, Fn&& fn) {
  std::uint64_t rank = 0;
  for (int x = 3; x < n; ++x)
    for (int w = 2; w < x; ++w)
      for (int v = 1; v < w; ++v)
        for (int u = 0; u < v; ++u) fn(rank++, u, v, w, x);
}

}  // namespace quartet
