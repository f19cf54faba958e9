#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "junctionlab/network.hpp"

namespace junctionlab {

// ---------------------------------------------------------------------------
// Region partition of the domain complement of the network.
//
// The faces are traced on the planar map formed by the arcs plus virtual
// boundary edges between consecutive exterior nodes. Each region touches
// exactly one boundary gap (e_i, e_{i+1}), which is its canonical label: gap
// labels are stable across all networks of a topological class, so colorings
// can be transferred between class members.
// ---------------------------------------------------------------------------
struct Region {
  int id = -1;           // == gap index
  int gap = -1;          // region lies against the boundary between e_gap, e_{gap+1}
  std::vector<int> arcs; // real arcs on its boundary
};

struct RegionPartition {
  std::vector<Region> regions;                          // indexed by gap label
  std::vector<std::array<int, 2>> arc_sides;            // arc id -> {left region, right region}
  std::vector<std::array<int, 3>> adjacency;            // (region a, region b, separating arc)

  int n_regions() const { return static_cast<int>(regions.size()); }
};

namespace detail {

struct Dart {
  int edge = 0;       // edge id: real arcs [0, na), boundary edges [na, na+ne)
  bool forward = true;
};

}  // namespace detail

inline RegionPartition regions(const PlanarNetwork& net) {
  const int ne = net.n_exterior(), ni = net.n_interior(), na = net.n_arcs();
  const int n_nodes = ne + ni;
  const int n_edges = na + ne;  // plus boundary edge i: e_i -> e_{i+1}
  auto node_id = [&](NodeRef r) {
    return r.kind == NodeRef::Kind::exterior ? r.index : ne + r.index;
  };

  // endpoints and departure directions of every dart (2 per edge)
  // dart id: 2*edge + (forward ? 0 : 1); forward = from->to
  std::vector<int> dart_tail(static_cast<size_t>(2 * n_edges));
  std::vector<int> dart_head(static_cast<size_t>(2 * n_edges));
  std::vector<double> dart_angle(static_cast<size_t>(2 * n_edges));
  for (int a = 0; a < na; ++a) {
    const Arc& arc = net.arcs[static_cast<size_t>(a)];
    dart_tail[static_cast<size_t>(2 * a)] = node_id(arc.from);
    dart_head[static_cast<size_t>(2 * a)] = node_id(arc.to);
    dart_angle[static_cast<size_t>(2 * a)] = angle_of(net.departure_dir(a, true));
    dart_tail[static_cast<size_t>(2 * a + 1)] = node_id(arc.to);
    dart_head[static_cast<size_t>(2 * a + 1)] = node_id(arc.from);
    dart_angle[static_cast<size_t>(2 * a + 1)] = angle_of(net.departure_dir(a, false));
  }
  for (int i = 0; i < ne; ++i) {
    int e = na + i;
    int j = (i + 1) % ne;
    Vec2 pi = net.exterior[static_cast<size_t>(i)];
    Vec2 pj = net.exterior[static_cast<size_t>(j)];
    dart_tail[static_cast<size_t>(2 * e)] = i;
    dart_head[static_cast<size_t>(2 * e)] = j;
    dart_angle[static_cast<size_t>(2 * e)] = angle_of(net.domain.boundary_tangent(pi));
    dart_tail[static_cast<size_t>(2 * e + 1)] = j;
    dart_head[static_cast<size_t>(2 * e + 1)] = i;
    dart_angle[static_cast<size_t>(2 * e + 1)] = angle_of(-net.domain.boundary_tangent(pj));
  }

  // rotation system: darts out of each node sorted CCW by departure angle
  std::vector<std::vector<int>> rot(static_cast<size_t>(n_nodes));
  for (int d = 0; d < 2 * n_edges; ++d) rot[static_cast<size_t>(dart_tail[static_cast<size_t>(d)])].push_back(d);
  for (auto& v : rot)
    std::sort(v.begin(), v.end(), [&](int a, int b) {
      return dart_angle[static_cast<size_t>(a)] < dart_angle[static_cast<size_t>(b)];
    });
  std::vector<int> rot_pos(static_cast<size_t>(2 * n_edges));
  for (int v = 0; v < n_nodes; ++v)
    for (size_t k = 0; k < rot[static_cast<size_t>(v)].size(); ++k)
      rot_pos[static_cast<size_t>(rot[static_cast<size_t>(v)][k])] = static_cast<int>(k);

  auto twin = [](int d) { return d ^ 1; };
  // face to the LEFT of dart d: arriving at head(d), continue with the dart
  // clockwise-next from twin(d) in the rotation at that node
  auto face_next = [&](int d) {
    int v = dart_head[static_cast<size_t>(d)];
    const auto& r = rot[static_cast<size_t>(v)];
    int k = rot_pos[static_cast<size_t>(twin(d))];
    int km = (k - 1 + static_cast<int>(r.size())) % static_cast<int>(r.size());
    return r[static_cast<size_t>(km)];
  };

  std::vector<int> face_of_dart(static_cast<size_t>(2 * n_edges), -1);
  int n_faces = 0;
  for (int d0 = 0; d0 < 2 * n_edges; ++d0) {
    if (face_of_dart[static_cast<size_t>(d0)] >= 0) continue;
    int d = d0;
    do {
      face_of_dart[static_cast<size_t>(d)] = n_faces;
      d = face_next(d);
    } while (d != d0);
    ++n_faces;
  }

  // interior regions are the faces left of the forward boundary darts
  // (counterclockwise boundary edges); the remaining face is the outer one.
  require(n_faces == ne + 1, Errc::not_a_tree,
          "face count " + std::to_string(n_faces) + " != n+1");
  std::vector<int> gap_of_face(static_cast<size_t>(n_faces), -1);
  for (int i = 0; i < ne; ++i) {
    int f = face_of_dart[static_cast<size_t>(2 * (na + i))];
    require(gap_of_face[static_cast<size_t>(f)] == -1, Errc::not_a_tree,
            "region touches two boundary gaps");
    gap_of_face[static_cast<size_t>(f)] = i;
  }

  RegionPartition part;
  part.regions.resize(static_cast<size_t>(ne));
  std::vector<int> region_of_face(static_cast<size_t>(n_faces), -1);
  for (int f = 0; f < n_faces; ++f)
    if (gap_of_face[static_cast<size_t>(f)] >= 0) {
      int g = gap_of_face[static_cast<size_t>(f)];
      part.regions[static_cast<size_t>(g)].id = g;
      part.regions[static_cast<size_t>(g)].gap = g;
      region_of_face[static_cast<size_t>(f)] = g;
    }

  part.arc_sides.resize(static_cast<size_t>(na));
  for (int a = 0; a < na; ++a) {
    int left = region_of_face[static_cast<size_t>(face_of_dart[static_cast<size_t>(2 * a)])];
    int right = region_of_face[static_cast<size_t>(face_of_dart[static_cast<size_t>(2 * a + 1)])];
    require(left >= 0 && right >= 0 && left != right, Errc::not_a_tree,
            "arc does not separate two interior regions");
    part.arc_sides[static_cast<size_t>(a)] = {left, right};
    part.regions[static_cast<size_t>(left)].arcs.push_back(a);
    part.regions[static_cast<size_t>(right)].arcs.push_back(a);
    part.adjacency.push_back({std::min(left, right), std::max(left, right), a});
  }
  std::sort(part.adjacency.begin(), part.adjacency.end());
  return part;
}

// Region membership of an arbitrary point: side of the nearest arc. Exact off
// the network; ties near nodes are resolved by the first arc attaining the
// minimum distance.
inline int region_of_point(const PlanarNetwork& net, const RegionPartition& part, Vec2 x) {
  double best = std::numeric_limits<double>::infinity();
  int best_arc = 0;
  for (int a = 0; a < net.n_arcs(); ++a) {
    double d = dist_point_polyline(net.arcs[static_cast<size_t>(a)].points, x);
    if (d < best) {
      best = d;
      best_arc = a;
    }
  }
  double sd = signed_dist_point_polyline(net.arcs[static_cast<size_t>(best_arc)].points, x);
  const auto& sides = part.arc_sides[static_cast<size_t>(best_arc)];
  return sd >= 0 ? sides[0] : sides[1];
}

}  // namespace junctionlab
