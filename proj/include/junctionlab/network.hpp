#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "junctionlab/polyline.hpp"

namespace junctionlab {

// ---------------------------------------------------------------------------
// Domain: disk of radius R about the origin, or the square [-L, L]^2.
// ---------------------------------------------------------------------------
struct DomainSpec {
  enum class Kind : uint8_t { disk, rect } kind = Kind::disk;
  double size = 1.0;  // R for disk, half-width L for rect

  static DomainSpec disk(double R) { return {Kind::disk, R}; }
  static DomainSpec rect(double L) { return {Kind::rect, L}; }

  bool contains(Vec2 p, double tol = 0.0) const {
    if (kind == Kind::disk) return norm(p) <= size + tol;
    return std::abs(p.x) <= size + tol && std::abs(p.y) <= size + tol;
  }
  bool on_boundary(Vec2 p, double tol = 1e-7) const {
    if (kind == Kind::disk) return std::abs(norm(p) - size) <= tol;
    double dx = size - std::abs(p.x), dy = size - std::abs(p.y);
    return std::min(dx, dy) >= -tol && std::min(dx, dy) <= tol;
  }
  // counterclockwise parameter along the boundary, used to order exterior nodes
  double boundary_parameter(Vec2 p) const {
    if (kind == Kind::disk) {
      double a = angle_of(p);
      return a < 0 ? a + 2 * kPi : a;
    }
    // perimeter coordinate starting at (L, -L) going CCW
    double L = size;
    if (std::abs(p.x - L) <= std::abs(p.y - L) && std::abs(p.x - L) <= std::abs(p.y + L) &&
        std::abs(p.x - L) <= std::abs(p.x + L))
      return p.y + L;                       // right side
    if (std::abs(p.y - L) <= std::abs(p.x + L) && std::abs(p.y - L) <= std::abs(p.x - L))
      return 2 * L + (L - p.x);             // top
    if (std::abs(p.x + L) <= std::abs(p.y + L)) return 4 * L + (L - p.y);  // left
    return 6 * L + (p.x + L);               // bottom
  }
  double area() const {
    return kind == Kind::disk ? kPi * size * size : 4 * size * size;
  }
  // outward CCW tangent direction of the boundary at p
  Vec2 boundary_tangent(Vec2 p) const {
    if (kind == Kind::disk) return normalized(perp(p));
    double L = size;
    double dr = std::abs(p.x - L), dt = std::abs(p.y - L), dl = std::abs(p.x + L),
           db = std::abs(p.y + L);
    double m = std::min({dr, dt, dl, db});
    if (m == dr) return {0, 1};
    if (m == dt) return {-1, 0};
    if (m == dl) return {0, -1};
    return {1, 0};
  }
};

// ---------------------------------------------------------------------------
// Node references: exterior nodes "e<i>" (valence 1, on the boundary, listed
// in CCW order) and interior nodes "i<j>" (valence 3).
// ---------------------------------------------------------------------------
struct NodeRef {
  enum class Kind : uint8_t { exterior, interior } kind = Kind::exterior;
  int index = 0;
  bool operator==(const NodeRef&) const = default;

  std::string str() const {
    return (kind == Kind::exterior ? "e" : "i") + std::to_string(index);
  }
  static NodeRef parse(const std::string& s) {
    require(!s.empty() && (s[0] == 'e' || s[0] == 'i'), Errc::usage_error,
            "bad node ref '" + s + "'");
    NodeRef r;
    r.kind = s[0] == 'e' ? Kind::exterior : Kind::interior;
    r.index = std::stoi(s.substr(1));
    return r;
  }
};

struct Arc {
  Polyline points;   // first/last coincide with the endpoint node positions
  NodeRef from, to;
};

struct PlanarNetwork {
  DomainSpec domain;
  std::vector<Vec2> exterior;  // CCW boundary order
  std::vector<Vec2> interior;
  std::vector<Arc> arcs;

  Vec2 node_pos(NodeRef r) const {
    return r.kind == NodeRef::Kind::exterior ? exterior[static_cast<size_t>(r.index)]
                                             : interior[static_cast<size_t>(r.index)];
  }
  int n_exterior() const { return static_cast<int>(exterior.size()); }
  int n_interior() const { return static_cast<int>(interior.size()); }
  int n_arcs() const { return static_cast<int>(arcs.size()); }

  // arc ends incident to a node, as (arc index, true if arc.from == node)
  std::vector<std::pair<int, bool>> incident(NodeRef r) const {
    std::vector<std::pair<int, bool>> out;
    for (int a = 0; a < n_arcs(); ++a) {
      if (arcs[static_cast<size_t>(a)].from == r) out.emplace_back(a, true);
      if (arcs[static_cast<size_t>(a)].to == r) out.emplace_back(a, false);
    }
    return out;
  }

  // departure direction of an arc end at its node (toward the second point)
  Vec2 departure_dir(int arc_id, bool at_from) const {
    const Polyline& p = arcs[static_cast<size_t>(arc_id)].points;
    Vec2 d = at_from ? p[1] - p[0] : p[p.size() - 2] - p[p.size() - 1];
    return normalized(d);
  }

  double total_length() const {
    double L = 0;
    for (const auto& a : arcs) L += polyline_length(a.points);
    return L;
  }
};

// ---------------------------------------------------------------------------
// build_network: assemble and validate. Checks the full invariant list:
// tree-ness, valences, counts, embeddedness, exterior nodes on the boundary
// in CCW list order.
// ---------------------------------------------------------------------------
namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = b;
    return true;
  }
};

}  // namespace detail

inline PlanarNetwork build_network(std::vector<Arc> arcs, DomainSpec domain,
                                   std::vector<Vec2> exterior, std::vector<Vec2> interior,
                                   double pos_tol = 1e-7) {
  require(!arcs.empty(), Errc::empty_input, "no arcs");
  PlanarNetwork net;
  net.domain = domain;
  net.exterior = std::move(exterior);
  net.interior = std::move(interior);
  net.arcs = std::move(arcs);

  const int ne = net.n_exterior(), ni = net.n_interior(), na = net.n_arcs();
  require(ne >= 2, Errc::not_a_tree, "need at least two exterior nodes");

  // arcs sane; endpoints pinned to node positions
  for (auto& a : net.arcs) {
    require(a.points.size() >= 2, Errc::empty_input, "arc with fewer than 2 points");
    for (size_t i = 0; i + 1 < a.points.size(); ++i)
      require(dist(a.points[i], a.points[i + 1]) > 1e-14, Errc::empty_input,
              "repeated consecutive arc points");
    require(dist(a.points.front(), net.node_pos(a.from)) <= pos_tol, Errc::usage_error,
            "arc start does not match its node");
    require(dist(a.points.back(), net.node_pos(a.to)) <= pos_tol, Errc::usage_error,
            "arc end does not match its node");
    a.points.front() = net.node_pos(a.from);
    a.points.back() = net.node_pos(a.to);
  }

  // valences
  auto node_id = [&](NodeRef r) {
    return r.kind == NodeRef::Kind::exterior ? r.index : ne + r.index;
  };
  std::vector<int> degree(static_cast<size_t>(ne + ni), 0);
  for (const auto& a : net.arcs) {
    ++degree[static_cast<size_t>(node_id(a.from))];
    ++degree[static_cast<size_t>(node_id(a.to))];
    require(!(a.from == a.to), Errc::not_a_tree, "arc loop");
  }
  for (int i = 0; i < ne; ++i)
    require(degree[static_cast<size_t>(i)] == 1, Errc::bad_valence,
            "exterior node e" + std::to_string(i) + " has degree " +
                std::to_string(degree[static_cast<size_t>(i)]));
  for (int j = 0; j < ni; ++j)
    require(degree[static_cast<size_t>(ne + j)] == 3, Errc::bad_valence,
            "interior node i" + std::to_string(j) + " has degree " +
                std::to_string(degree[static_cast<size_t>(ne + j)]));

  // connected tree; the counts n-2 and 2n-3 then come for free but are asserted
  detail::UnionFind uf(ne + ni);
  for (const auto& a : net.arcs)
    require(uf.unite(node_id(a.from), node_id(a.to)), Errc::not_a_tree, "cycle detected");
  require(na == ne + ni - 1, Errc::not_a_tree, "not connected");
  require(ni == ne - 2, Errc::not_a_tree, "interior node count is not n-2");
  require(na == 2 * ne - 3, Errc::not_a_tree, "arc count is not 2n-3");

  // exterior nodes on the boundary, CCW in list (cyclic) order
  for (int i = 0; i < ne; ++i)
    require(net.domain.on_boundary(net.exterior[static_cast<size_t>(i)], pos_tol),
            Errc::exterior_off_boundary, "exterior node e" + std::to_string(i));
  {
    std::vector<double> par(static_cast<size_t>(ne));
    for (int i = 0; i < ne; ++i)
      par[static_cast<size_t>(i)] = net.domain.boundary_parameter(net.exterior[static_cast<size_t>(i)]);
    int wraps = 0;
    for (int i = 0; i < ne; ++i)
      if (par[static_cast<size_t>((i + 1) % ne)] < par[static_cast<size_t>(i)]) ++wraps;
    require(wraps == 1, Errc::exterior_off_boundary,
            "exterior nodes are not in counterclockwise boundary order");
  }

  // embeddedness: arcs meet only at shared endpoint nodes
  for (int a = 0; a < na; ++a) {
    const auto& pa = net.arcs[static_cast<size_t>(a)].points;
    // self-intersection within one arc (non-adjacent segments)
    for (size_t i = 0; i + 1 < pa.size(); ++i)
      for (size_t j = i + 2; j + 1 < pa.size(); ++j)
        require(!segments_intersect(pa[i], pa[i + 1], pa[j], pa[j + 1]), Errc::self_intersection,
                "arc " + std::to_string(a) + " self-intersects");
    for (int b = a + 1; b < na; ++b) {
      const auto& pb = net.arcs[static_cast<size_t>(b)].points;
      // shared endpoints are allowed; anything else is a crossing
      std::vector<Vec2> shared;
      for (NodeRef ra : {net.arcs[static_cast<size_t>(a)].from, net.arcs[static_cast<size_t>(a)].to})
        for (NodeRef rb : {net.arcs[static_cast<size_t>(b)].from, net.arcs[static_cast<size_t>(b)].to})
          if (ra == rb) shared.push_back(net.node_pos(ra));
      for (size_t i = 0; i + 1 < pa.size(); ++i)
        for (size_t j = 0; j + 1 < pb.size(); ++j) {
          if (!segments_intersect(pa[i], pa[i + 1], pb[j], pb[j + 1])) continue;
          bool at_shared = false;
          for (Vec2 s : shared)
            if (dist_point_segment(pa[i], pa[i + 1], s) <= pos_tol &&
                dist_point_segment(pb[j], pb[j + 1], s) <= pos_tol)
              at_shared = true;
          require(at_shared, Errc::self_intersection,
                  "arcs " + std::to_string(a) + " and " + std::to_string(b) + " cross");
        }
    }
  }
  return net;
}

// ---------------------------------------------------------------------------
// JSON serialization
// {"domain": {"type":"disk","R":1}, "exterior": [[x,y],...],
//  "interior": [[x,y],...], "arcs":[{"from":"e0","to":"i0","points":[[x,y],..]}]}
// ---------------------------------------------------------------------------
inline nlohmann::json network_to_json(const PlanarNetwork& net) {
  nlohmann::json j;
  if (net.domain.kind == DomainSpec::Kind::disk)
    j["domain"] = {{"type", "disk"}, {"R", net.domain.size}};
  else
    j["domain"] = {{"type", "rect"}, {"L", net.domain.size}};
  auto pts = [](const std::vector<Vec2>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (Vec2 p : v) a.push_back({p.x, p.y});
    return a;
  };
  j["exterior"] = pts(net.exterior);
  j["interior"] = pts(net.interior);
  j["arcs"] = nlohmann::json::array();
  for (const auto& arc : net.arcs) {
    nlohmann::json ja;
    ja["from"] = arc.from.str();
    ja["to"] = arc.to.str();
    ja["points"] = pts(arc.points);
    j["arcs"].push_back(ja);
  }
  return j;
}

inline PlanarNetwork network_from_json(const nlohmann::json& j) {
  DomainSpec dom;
  const auto& jd = j.at("domain");
  std::string type = jd.at("type").get<std::string>();
  if (type == "disk")
    dom = DomainSpec::disk(jd.at("R").get<double>());
  else if (type == "rect")
    dom = DomainSpec::rect(jd.at("L").get<double>());
  else
    fail(Errc::usage_error, "unknown domain type '" + type + "'");
  auto pts = [](const nlohmann::json& a) {
    std::vector<Vec2> v;
    for (const auto& p : a) v.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    return v;
  };
  std::vector<Arc> arcs;
  for (const auto& ja : j.at("arcs")) {
    Arc a;
    a.from = NodeRef::parse(ja.at("from").get<std::string>());
    a.to = NodeRef::parse(ja.at("to").get<std::string>());
    a.points = pts(ja.at("points"));
    arcs.push_back(std::move(a));
  }
  return build_network(std::move(arcs), dom, pts(j.at("exterior")), pts(j.at("interior")));
}

inline void save_network(const PlanarNetwork& net, const std::string& path) {
  std::ofstream f(path);
  require(f.good(), Errc::usage_error, "cannot write " + path);
  f << network_to_json(net).dump(2) << "\n";
}

inline PlanarNetwork load_network(const std::string& path) {
  std::ifstream f(path);
  require(f.good(), Errc::usage_error, "cannot read " + path);
  nlohmann::json j;
  f >> j;
  return network_from_json(j);
}

}  // namespace junctionlab
