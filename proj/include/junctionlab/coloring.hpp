#pragma once

#include <algorithm>
#include <vector>

#include "junctionlab/plane_tree.hpp"
#include "junctionlab/regions.hpp"

namespace junctionlab {

// Assignment of one of three colors {1,2,3} to every region (region id ==
// boundary-gap index). Proper = adjacent regions differ.
struct Coloring {
  std::vector<int> color;  // indexed by region id, values in {1,2,3}

  bool operator==(const Coloring&) const = default;
};

inline bool verify_coloring(const PlanarNetwork& net, const Coloring& c) {
  RegionPartition part = regions(net);
  require(c.color.size() == static_cast<size_t>(part.n_regions()), Errc::unknown_region_id,
          "coloring size does not match region count");
  for (int v : c.color)
    require(v >= 1 && v <= 3, Errc::unknown_region_id, "color out of range");
  for (const auto& [a, b, arc] : part.adjacency)
    if (c.color[static_cast<size_t>(a)] == c.color[static_cast<size_t>(b)]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// three_color: the reduction argument run directly. While more than three
// leaves remain, pick an interior node v whose two leaf neighbors p_a, p_b
// are cyclically consecutive (such a node always exists for a plane tree),
// remove p_a and v merging the other two edges, and recurse; re-inserting
// colors the restored gap with the third color. Labels are then normalized:
// the region at gap (e_0, e_1) gets color 1 and the region at gap (e_1, e_2)
// gets color 2, which pins the relabeling freedom.
// ---------------------------------------------------------------------------
namespace detail {

struct ReductionStep {
  int removed_leaf;  // boundary index of the removed leaf p_a
  int kept_leaf;     // boundary index of p_b (cyclic successor of p_a)
};

}  // namespace detail

inline Coloring three_color(const PlanarNetwork& net) {
  PlaneTree tree = plane_tree_of(net);
  const int n = tree.n_leaves();
  require(n >= 3, Errc::not_a_tree, "need n >= 3");

  // mutable adjacency (rotation order not needed by the reduction)
  std::vector<std::vector<int>> adj(tree.nodes.size());
  std::vector<int> leaf_idx(tree.nodes.size(), -1);
  for (size_t v = 0; v < tree.nodes.size(); ++v) {
    adj[v] = tree.nodes[v].neighbors;
    if (tree.nodes[v].is_leaf) leaf_idx[v] = tree.nodes[v].boundary_index;
  }
  std::vector<bool> alive(tree.nodes.size(), true);
  std::vector<int> live_leaves;  // boundary indices, kept sorted
  for (int i = 0; i < n; ++i) live_leaves.push_back(i);

  std::vector<detail::ReductionStep> steps;
  int n_cur = n;
  while (n_cur > 3) {
    // cherries: interior nodes with two live leaf neighbors; deterministic
    // tie-break by the smallest (min, max) boundary-index pair
    int best_v = -1, best_a = -1, best_b = -1;
    for (size_t v = 0; v < adj.size(); ++v) {
      if (!alive[v] || leaf_idx[v] >= 0) continue;
      std::vector<int> leaves;
      for (int w : adj[v])
        if (leaf_idx[static_cast<size_t>(w)] >= 0) leaves.push_back(leaf_idx[static_cast<size_t>(w)]);
      if (leaves.size() != 2) continue;
      // orient the pair (a, b) with b = cyclic successor of a among live leaves
      int x = std::min(leaves[0], leaves[1]), y = std::max(leaves[0], leaves[1]);
      auto pos = [&](int idx) {
        return static_cast<int>(std::lower_bound(live_leaves.begin(), live_leaves.end(), idx) -
                                live_leaves.begin());
      };
      int a, b;
      if ((pos(x) + 1) % n_cur == pos(y)) {
        a = x;
        b = y;
      } else if ((pos(y) + 1) % n_cur == pos(x)) {
        a = y;
        b = x;
      } else {
        fail(Errc::not_a_tree, "cherry leaves not consecutive on the boundary");
      }
      if (best_v < 0 || std::pair(std::min(a, b), std::max(a, b)) <
                            std::pair(std::min(best_a, best_b), std::max(best_a, best_b))) {
        best_v = static_cast<int>(v);
        best_a = a;
        best_b = b;
      }
    }
    require(best_v >= 0, Errc::not_a_tree, "no cherry found");

    // remove leaf p_a and node v; attach p_b to v's third neighbor
    int va = tree.leaf_of_boundary[static_cast<size_t>(best_a)];
    int vb = tree.leaf_of_boundary[static_cast<size_t>(best_b)];
    int w = -1;
    for (int u : adj[static_cast<size_t>(best_v)])
      if (u != va && u != vb) w = u;
    alive[static_cast<size_t>(va)] = false;
    alive[static_cast<size_t>(best_v)] = false;
    auto replace = [&](std::vector<int>& list, int from, int to) {
      for (int& u : list)
        if (u == from) u = to;
    };
    replace(adj[static_cast<size_t>(w)], best_v, vb);
    replace(adj[static_cast<size_t>(vb)], best_v, w);
    live_leaves.erase(std::lower_bound(live_leaves.begin(), live_leaves.end(), best_a));
    steps.push_back({best_a, best_b});
    --n_cur;
  }

  // base case: three gaps, three distinct placeholder colors; gap keyed by
  // its left leaf boundary index
  std::vector<int> gap_color(static_cast<size_t>(n), -1);
  for (int k = 0; k < 3; ++k) gap_color[static_cast<size_t>(live_leaves[static_cast<size_t>(k)])] = k + 1;

  // unwind: restore p_a between its cyclic predecessor and p_b
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    auto insert_pos = std::lower_bound(live_leaves.begin(), live_leaves.end(), it->removed_leaf);
    live_leaves.insert(insert_pos, it->removed_leaf);
    int m = static_cast<int>(live_leaves.size());
    auto pos = [&](int idx) {
      return static_cast<int>(std::lower_bound(live_leaves.begin(), live_leaves.end(), idx) -
                              live_leaves.begin());
    };
    int pa = it->removed_leaf;
    int prev = live_leaves[static_cast<size_t>((pos(pa) + m - 1) % m)];
    int pb = it->kept_leaf;
    int next = live_leaves[static_cast<size_t>((pos(pb) + 1) % m)];
    // before insertion, gap keyed `prev` spanned prev->pb with color c1; it
    // now means prev->pa and keeps c1; the restored gap pa->pb takes the
    // third color against c1 and the color of gap pb->next
    int c1 = gap_color[static_cast<size_t>(prev)];
    int c2 = gap_color[static_cast<size_t>(pb)];
    require(c1 >= 1 && c2 >= 1 && c1 != c2, Errc::not_a_tree, "induction bookkeeping");
    gap_color[static_cast<size_t>(pa)] = 6 - c1 - c2;
    (void)next;
  }

  // normalize labels: gap 0 -> 1, gap 1 -> 2
  int a = gap_color[0], b = gap_color[1];
  std::array<int, 4> perm{};  // perm[old] = new
  perm[static_cast<size_t>(a)] = 1;
  perm[static_cast<size_t>(b)] = 2;
  perm[static_cast<size_t>(6 - a - b)] = 3;
  Coloring c;
  c.color.resize(static_cast<size_t>(n));
  for (int g = 0; g < n; ++g) c.color[static_cast<size_t>(g)] = perm[static_cast<size_t>(gap_color[static_cast<size_t>(g)])];
  return c;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of proper colorings (backtracking over 3^n). The
// uniqueness statement says the result always has exactly six elements.
// ---------------------------------------------------------------------------
inline std::vector<Coloring> enumerate_colorings(const PlanarNetwork& net, int cap = 10) {
  RegionPartition part = regions(net);
  const int n = part.n_regions();
  require(n <= cap, Errc::too_large,
          "n = " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
  std::vector<std::vector<int>> nbr(static_cast<size_t>(n));
  for (const auto& [a, b, arc] : part.adjacency) {
    nbr[static_cast<size_t>(a)].push_back(b);
    nbr[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<Coloring> out;
  std::vector<int> cur(static_cast<size_t>(n), 0);
  struct Rec {
    const std::vector<std::vector<int>>& nbr;
    std::vector<int>& cur;
    std::vector<Coloring>& out;
    int n;
    void operator()(int r) const {
      if (r == n) {
        Coloring c;
        c.color = cur;
        out.push_back(c);
        return;
      }
      for (int v = 1; v <= 3; ++v) {
        bool ok = true;
        for (int w : nbr[static_cast<size_t>(r)])
          if (w < r && cur[static_cast<size_t>(w)] == v) ok = false;
        if (!ok) continue;
        cur[static_cast<size_t>(r)] = v;
        (*this)(r + 1);
        cur[static_cast<size_t>(r)] = 0;
      }
    }
  };
  Rec{nbr, cur, out, n}(0);
  return out;
}

// Transfer a coloring to another network of the same topological class via
// the shared gap labels.
inline Coloring transfer_coloring(const Coloring& c, const PlanarNetwork& from,
                                  const PlanarNetwork& to) {
  require(topology_signature(from) == topology_signature(to), Errc::class_mismatch,
          "networks are in different topological classes");
  require(c.color.size() == static_cast<size_t>(from.n_exterior()), Errc::unknown_region_id,
          "coloring does not match source network");
  return c;  // gap labels are the region ids in both networks
}

}  // namespace junctionlab
