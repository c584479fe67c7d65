#include "quartet/tree.hpp"

#include <algorithm>
#include <queue>

#include "quartet/errors.hpp"

namespace quartet {

namespace {
constexpr int kUnset = -1;
}

Tree::Tree(int leaf_count, const std::vector<std::pair<int, int>>& edges)
    : leaf_count_(leaf_count) {
  if (leaf_count < 4) throw input_error("tree needs at least 4 leaves");
  adj_.assign(static_cast<std::size_t>(node_count()), {kUnset, kUnset, kUnset});
  std::vector<int> deg(static_cast<std::size_t>(node_count()), 0);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= node_count() || b >= node_count() || a == b)
      throw input_error("edge endpoint out of range");
    for (int v : {a, b}) {
      int cap = v < leaf_count ? 1 : 3;
      if (deg[v] >= cap) throw input_error("degree overflow at node " + std::to_string(v));
    }
    adj_[a][deg[a]++] = b;
    adj_[b][deg[b]++] = a;
  }
  check_valid();
}

Tree Tree::single_quartet() {
  return Tree(4, {{0, 4}, {1, 4}, {4, 5}, {2, 5}, {3, 5}});
}

std::vector<std::pair<int, int>> Tree::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(node_count() - 1));
  for (int v = 0; v < node_count(); ++v)
    for (int s = 0; s < degree(v); ++s)
      if (v < adj_[v][s]) out.emplace_back(v, adj_[v][s]);
  return out;
}

void Tree::replace_neighbor(int v, int old_nb, int new_nb) {
  for (int s = 0; s < degree(v); ++s) {
    if (adj_[v][s] == old_nb) {
      adj_[v][s] = new_nb;
      return;
    }
  }
  throw input_error("replace_neighbor: edge not present");
}

bool Tree::valid() const {
  try {
    check_valid();
  } catch (const input_error&) {
    return false;
  }
  return true;
}

void Tree::check_valid() const {
  const int nodes = node_count();
  if (leaf_count_ < 4) throw input_error("tree needs at least 4 leaves");
  if (static_cast<int>(adj_.size()) != nodes) throw input_error("node count is not 2n-2");
  int edge_count = 0;
  for (int v = 0; v < nodes; ++v) {
    const int want = degree(v);
    for (int s = 0; s < want; ++s) {
      int u = adj_[v][s];
      if (u < 0 || u >= nodes || u == v) throw input_error("bad adjacency at node " + std::to_string(v));
      bool mirrored = false;
      for (int t = 0; t < degree(u); ++t) mirrored |= adj_[u][t] == v;
      if (!mirrored) throw input_error("asymmetric adjacency at node " + std::to_string(v));
    }
    if (want == 3 && (adj_[v][0] == adj_[v][1] || adj_[v][0] == adj_[v][2] || adj_[v][1] == adj_[v][2]))
      throw input_error("parallel edge at node " + std::to_string(v));
    edge_count += want;
  }
  if (edge_count != 2 * (nodes - 1)) throw input_error("edge count is not 2n-3");

  // Connected with exactly nodes-1 edges implies acyclic.
  std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int s = 0; s < degree(v); ++s) {
      int u = adj_[v][s];
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        bfs.push(u);
      }
    }
  }
  if (reached != nodes) throw input_error("tree is disconnected");
}

std::vector<int> Tree::leaf_distances() const {
  const int n = leaf_count_;
  const int nodes = node_count();
  std::vector<int> dist(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> level(static_cast<std::size_t>(nodes));
  std::vector<int> frontier, next;
  frontier.reserve(static_cast<std::size_t>(nodes));
  next.reserve(static_cast<std::size_t>(nodes));
  for (int src = 0; src < n; ++src) {
    std::fill(level.begin(), level.end(), kUnset);
    level[src] = 0;
    frontier.assign(1, src);
    int depth = 0;
    while (!frontier.empty()) {
      ++depth;
      next.clear();
      for (int v : frontier) {
        for (int s = 0; s < degree(v); ++s) {
          int u = adj_[v][s];
          if (level[u] == kUnset) {
            level[u] = depth;
            next.push_back(u);
          }
        }
      }
      frontier.swap(next);
    }
    for (int dst = 0; dst < n; ++dst) dist[static_cast<std::size_t>(src) * n + dst] = level[dst];
  }
  return dist;
}

TreeBuilder::TreeBuilder(int leaf_count) : leaf_count_(leaf_count) {
  if (leaf_count < 4) throw input_error("tree needs at least 4 leaves");
}

Tree TreeBuilder::build(const std::vector<int>& edge_choices) const {
  const int n = leaf_count_;
  if (static_cast<int>(edge_choices.size()) != n - 3)
    throw input_error("expected one edge choice per added leaf");

  Tree t;
  t.leaf_count_ = n;
  t.adj_.assign(static_cast<std::size_t>(2 * n - 2), {kUnset, kUnset, kUnset});

  // Seed tree: leaves 0,1,2 on internal node n. Edges are maintained as an
  // append-only list so that choice indices are stable and enumerable.
  std::vector<std::pair<int, int>> live_edges;
  live_edges.reserve(static_cast<std::size_t>(2 * n - 3));
  auto link = [&t](int a, int b) {
    for (int s = 0; s < 3; ++s)
      if (t.adj_[a][s] == kUnset) {
        t.adj_[a][s] = b;
        break;
      }
    for (int s = 0; s < 3; ++s)
      if (t.adj_[b][s] == kUnset) {
        t.adj_[b][s] = a;
        break;
      }
  };
  const int hub = n;
  for (int leaf = 0; leaf < 3; ++leaf) {
    link(leaf, hub);
    live_edges.emplace_back(leaf, hub);
  }

  for (int next = 3; next < n; ++next) {
    const int pick = edge_choices[static_cast<std::size_t>(next - 3)];
    if (pick < 0 || pick >= static_cast<int>(live_edges.size()))
      throw input_error("edge choice out of range");
    auto [a, b] = live_edges[static_cast<std::size_t>(pick)];
    const int junction = n + (next - 2);  // next unused internal id
    // Subdivide {a,b} with the junction and hang the new leaf from it.
    t.replace_neighbor(a, b, junction);
    t.replace_neighbor(b, a, junction);
    t.adj_[junction] = {a, b, next};
    t.adj_[next][0] = junction;
    live_edges[static_cast<std::size_t>(pick)] = {a, junction};
    live_edges.emplace_back(junction, b);
    live_edges.emplace_back(next, junction);
  }
  return t;
}

}  // namespace quartet
