#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "junctionlab/network.hpp"

namespace junctionlab {

// ---------------------------------------------------------------------------
// Combinatorial plane tree: leaves carry boundary indices, interior nodes are
// trivalent, and neighbor lists are stored in counterclockwise rotation
// order. This is the complete invariant of the topological class of an
// embedded boundary-anchored tree, and the object the coloring induction and
// the canonical signature operate on.
// ---------------------------------------------------------------------------
struct PlaneTree {
  struct Node {
    bool is_leaf = false;
    int boundary_index = -1;            // for leaves
    std::vector<int> neighbors;         // CCW rotation order
  };
  std::vector<Node> nodes;
  std::vector<int> leaf_of_boundary;    // boundary index -> node id

  int n_leaves() const { return static_cast<int>(leaf_of_boundary.size()); }
};

// Extract the plane tree from the geometry: rotation order at each node is
// the CCW order of arc departure angles.
inline PlaneTree plane_tree_of(const PlanarNetwork& net) {
  PlaneTree t;
  const int ne = net.n_exterior(), ni = net.n_interior();
  t.nodes.resize(static_cast<size_t>(ne + ni));
  t.leaf_of_boundary.resize(static_cast<size_t>(ne));
  auto node_id = [&](NodeRef r) {
    return r.kind == NodeRef::Kind::exterior ? r.index : ne + r.index;
  };
  for (int i = 0; i < ne; ++i) {
    t.nodes[static_cast<size_t>(i)].is_leaf = true;
    t.nodes[static_cast<size_t>(i)].boundary_index = i;
    t.leaf_of_boundary[static_cast<size_t>(i)] = i;
  }
  for (int v = 0; v < ne + ni; ++v) {
    NodeRef r = v < ne ? NodeRef{NodeRef::Kind::exterior, v}
                       : NodeRef{NodeRef::Kind::interior, v - ne};
    auto inc = net.incident(r);
    std::vector<std::pair<double, int>> order;
    for (auto [arc, at_from] : inc) {
      const Arc& a = net.arcs[static_cast<size_t>(arc)];
      double ang = angle_of(net.departure_dir(arc, at_from));
      int other = node_id(at_from ? a.to : a.from);
      order.emplace_back(ang, other);
    }
    std::sort(order.begin(), order.end());
    for (auto& [ang, other] : order)
      t.nodes[static_cast<size_t>(v)].neighbors.push_back(other);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Canonical signature of the leaf-labeled plane tree. Rooted at the leaf of
// boundary index 0; children of each node are listed in CCW order after the
// incoming edge. Equal strings <=> same topological class (for networks with
// their exterior nodes identified by boundary order).
// ---------------------------------------------------------------------------
namespace detail {
inline void signature_rec(const PlaneTree& t, int v, int parent, std::string& out) {
  const auto& node = t.nodes[static_cast<size_t>(v)];
  if (node.is_leaf) {
    out += "e";
    out += std::to_string(node.boundary_index);
    return;
  }
  // rotate neighbor list so it starts just after the parent
  size_t pi = 0;
  for (size_t i = 0; i < node.neighbors.size(); ++i)
    if (node.neighbors[i] == parent) pi = i;
  out += "(";
  for (size_t k = 1; k <= node.neighbors.size(); ++k) {
    int w = node.neighbors[(pi + k) % node.neighbors.size()];
    if (w == parent) continue;
    signature_rec(t, w, v, out);
    if (k + 1 < node.neighbors.size() ||
        (k + 1 == node.neighbors.size() && node.neighbors[(pi + k + 1) % node.neighbors.size()] != parent))
      out += ",";
  }
  if (out.back() == ',') out.pop_back();
  out += ")";
}
}  // namespace detail

using TopologySignature = std::string;

inline TopologySignature signature_of(const PlaneTree& t) {
  int root = t.leaf_of_boundary.at(0);
  std::string out = "[" + std::to_string(t.n_leaves()) + ":";
  detail::signature_rec(t, t.nodes[static_cast<size_t>(root)].neighbors.at(0), root, out);
  out += "]";
  return out;
}

inline TopologySignature topology_signature(const PlanarNetwork& net) {
  return signature_of(plane_tree_of(net));
}

// ---------------------------------------------------------------------------
// Triangulation <-> trivalent plane tree correspondence.
//
// Triangulations of a convex n-gon are in bijection with trivalent plane
// trees with n cyclically ordered leaves: triangles <-> interior nodes,
// polygon sides <-> leaves. This gives a uniform sampler (via Catalan
// weights), an exhaustive enumerator for small n, and a planar geometric
// realization with non-crossing straight arcs (centroid of each triangle ->
// adjacent centroids / side midpoints on the circle).
// ---------------------------------------------------------------------------
namespace detail {

// triangles as index triples into polygon vertices 0..n-1
using Triangulation = std::vector<std::array<int, 3>>;

inline std::vector<Triangulation> enumerate_triangulations(int n) {
  // all triangulations of the convex n-gon, n >= 3
  std::vector<Triangulation> out;
  if (n < 3) return out;
  // simple recursive enumeration: fan on edge (0, n-1)
  struct Rec {
    std::vector<Triangulation> operator()(int lo, int hi) const {
      std::vector<Triangulation> res;
      if (hi - lo < 2) {
        res.push_back({});
        return res;
      }
      for (int k = lo + 1; k < hi; ++k) {
        auto left = (*this)(lo, k);
        auto right = (*this)(k, hi);
        for (const auto& L : left)
          for (const auto& R : right) {
            Triangulation t;
            t.push_back({lo, k, hi});
            t.insert(t.end(), L.begin(), L.end());
            t.insert(t.end(), R.begin(), R.end());
            res.push_back(t);
          }
      }
      return res;
    }
  };
  return Rec{}(0, n - 1);
}

inline double catalan(int n) {
  // C_0..C_20 comfortably fit a double
  double c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

inline void sample_triangulation_rec(int lo, int hi, std::mt19937_64& rng, Triangulation& out) {
  if (hi - lo < 2) return;
  // choose apex k with probability C(k-lo-1) * C(hi-k-1) / C(hi-lo-1)
  std::vector<double> w;
  double total = 0;
  for (int k = lo + 1; k < hi; ++k) {
    double p = catalan(k - lo - 1) * catalan(hi - k - 1);
    w.push_back(p);
    total += p;
  }
  std::uniform_real_distribution<double> U(0.0, total);
  double u = U(rng);
  int k = lo + 1;
  for (size_t i = 0; i < w.size(); ++i) {
    if (u < w[i]) {
      k = lo + 1 + static_cast<int>(i);
      break;
    }
    u -= w[i];
    k = lo + 1 + static_cast<int>(i);
  }
  out.push_back({lo, k, hi});
  sample_triangulation_rec(lo, k, rng, out);
  sample_triangulation_rec(k, hi, rng, out);
}

}  // namespace detail

// Geometric realization of a triangulation-encoded tree inside a disk of
// radius R: polygon vertex i sits at the boundary gap between consecutive
// exterior nodes; exterior node i at the midpoint of polygon side (i, i+1).
// Interior nodes at triangle centroids scaled by `shrink` toward the origin.
inline PlanarNetwork realize_tree_in_disk(const detail::Triangulation& tris, int n, double R,
                                          double angle_offset = kPi / 2, double shrink = 1.0) {
  std::vector<Vec2> poly(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double a = angle_offset + 2 * kPi * i / n;
    poly[static_cast<size_t>(i)] = {R * std::cos(a), R * std::sin(a)};
  }
  std::vector<Vec2> exterior(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double a = angle_offset + 2 * kPi * (i + 0.5) / n;
    exterior[static_cast<size_t>(i)] = {R * std::cos(a), R * std::sin(a)};
  }
  std::vector<Vec2> interior;
  for (const auto& t : tris) {
    Vec2 c = (poly[static_cast<size_t>(t[0])] + poly[static_cast<size_t>(t[1])] +
              poly[static_cast<size_t>(t[2])]) /
             3.0;
    interior.push_back(c * shrink);
  }
  // adjacency: triangles sharing an edge -> internal arc; triangle owning
  // polygon side (i, i+1 mod n) -> pendant arc to exterior node i
  auto has_edge = [&](const std::array<int, 3>& t, int a, int b) {
    int cnt = 0;
    for (int v : t) cnt += (v == a || v == b) ? 1 : 0;
    return cnt == 2;
  };
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    for (size_t ti = 0; ti < tris.size(); ++ti)
      if (has_edge(tris[ti], i, j)) {
        Arc a;
        a.from = {NodeRef::Kind::interior, static_cast<int>(ti)};
        a.to = {NodeRef::Kind::exterior, i};
        a.points = {interior[ti], exterior[static_cast<size_t>(i)]};
        arcs.push_back(std::move(a));
        break;
      }
  }
  for (size_t ti = 0; ti < tris.size(); ++ti)
    for (size_t tj = ti + 1; tj < tris.size(); ++tj) {
      int common = 0;
      for (int u : tris[ti])
        for (int v : tris[tj])
          if (u == v) ++common;
      if (common == 2) {
        Arc a;
        a.from = {NodeRef::Kind::interior, static_cast<int>(ti)};
        a.to = {NodeRef::Kind::interior, static_cast<int>(tj)};
        a.points = {interior[ti], interior[tj]};
        arcs.push_back(std::move(a));
      }
    }
  return build_network(std::move(arcs), DomainSpec::disk(R), std::move(exterior),
                       std::move(interior));
}

// Uniform random trivalent plane tree with n leaves, realized in a disk.
inline PlanarNetwork random_tree_network(int n, std::mt19937_64& rng, double R = 1.0) {
  require(n >= 3, Errc::usage_error, "need n >= 3 leaves");
  detail::Triangulation t;
  detail::sample_triangulation_rec(0, n - 1, rng, t);
  return realize_tree_in_disk(t, n, R);
}

// All topological classes for n boundary points, as signature -> realization.
inline std::vector<std::pair<TopologySignature, PlanarNetwork>> enumerate_classes(int n,
                                                                                  double R = 1.0) {
  std::vector<std::pair<TopologySignature, PlanarNetwork>> out;
  for (const auto& t : detail::enumerate_triangulations(n)) {
    PlanarNetwork net = realize_tree_in_disk(t, n, R);
    TopologySignature sig = topology_signature(net);
    bool seen = false;
    for (auto& [s, _] : out) seen = seen || s == sig;
    if (!seen) out.emplace_back(sig, std::move(net));
  }
  return out;
}

}  // namespace junctionlab
