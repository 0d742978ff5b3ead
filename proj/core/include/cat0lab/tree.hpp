// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace cat0lab {

/// Length of every edge of the parametric tree Y.
inline constexpr double kEdgeLength = std::numbers::pi_v<double> / 4.0;

enum class TreeLocus { Root, Trunk, Branch, Leaf, Endpoint };

/// A point of the parametric tree Y.
///
/// Y is a tree with root p, countably many branch vertices b_i at distance
/// pi/4 from p (one per copy index i), and countably many endpoints e_{i,j}
/// at distance pi/4 from b_i (one per leaf index j).  Copy and leaf indices
/// are arbitrary 64-bit labels; nothing is ever enumerated.
///
/// Canonical form: interior offsets t lie strictly inside (0, pi/4); the
/// boundary values collapse to the named vertices, so equality of canonical
/// points is structural.
struct TreePoint {
  TreeLocus locus{TreeLocus::Root};
  std::int64_t copy{0};
  std::int64_t leaf{0};
  double t{0.0};  // offset within the open edge, measured from the p-side

  static TreePoint root();
  static TreePoint trunk(std::int64_t copy, double t);
  static TreePoint branch(std::int64_t copy);
  static TreePoint leaf_point(std::int64_t copy, std::int64_t leaf, double t);
  static TreePoint endpoint(std::int64_t copy, std::int64_t leaf);

  friend bool operator==(const TreePoint&, const TreePoint&) = default;
};

/// Distance from the root p.
double tree_arc_from_root(const TreePoint& y);

/// Exact path length through the unique tree path.
double tree_distance(const TreePoint& u, const TreePoint& v);

/// Point at fraction frac in [0,1] along the unique path from u to v.
TreePoint tree_geodesic(const TreePoint& u, const TreePoint& v, double frac);

/// Canonical vertices visited by the path from u to v, inclusive of both
/// ends; every consecutive pair lies on a single edge of Y.
std::vector<TreePoint> tree_path_waypoints(const TreePoint& u, const TreePoint& v);

/// Identifies one edge of Y: the trunk edge [p, b_copy] or the leaf edge
/// [b_copy, e_{copy,leaf}].
struct TreeEdgeRef {
  bool is_leaf{false};
  std::int64_t copy{0};
  std::int64_t leaf{0};
  friend auto operator<=>(const TreeEdgeRef&, const TreeEdgeRef&) = default;
};

struct TreeEdgeInterval {
  TreeEdgeRef edge;
  double lo{0.0};
  double hi{0.0};  // coordinates from the p-side endpoint, lo <= hi
};

/// Coordinate of y on the given edge, if y lies on it.
std::optional<double> tree_coord_on_edge(const TreePoint& y, const TreeEdgeRef& e);

/// Canonical point at coordinate c in [0, kEdgeLength] on an edge.
TreePoint tree_point_on_edge(const TreeEdgeRef& e, double c);

/// The path from u to v decomposed into per-edge intervals.
std::vector<TreeEdgeInterval> tree_path_segments(const TreePoint& u, const TreePoint& v);

/// Circumcenter of a finite set: midpoint of a diametral pair (exact in
/// trees).  Returns the center and the realized radius.
std::pair<TreePoint, double> tree_circumcenter(const std::vector<TreePoint>& points);

/// Distance from y to the branch-vertex set B.
double tree_distance_to_branch_set(const TreePoint& y);

/// Distance from y to the endpoint set E.
double tree_distance_to_endpoint_set(const TreePoint& y);

/// Formatting and parsing of the locus grammar:
///   p | trunk:<i>:<t> | b:<i> | leaf:<i>:<j>:<t> | e:<i>:<j>
std::string format_locus(const TreePoint& y);
TreePoint parse_locus(const std::string& text);

/// A point of a FiniteTree: offset t from vertex u along edge {u,v}.
/// Vertices canonicalize to (u, u, 0).
struct FinitePoint {
  std::int32_t u{0};
  std::int32_t v{0};
  double t{0.0};
  friend bool operator==(const FinitePoint&, const FinitePoint&) = default;
};

/// A finite weighted tree, the brute-force oracle substrate.
class FiniteTree {
 public:
  std::int32_t add_vertex(const std::string& name);
  void add_edge(const std::string& a, const std::string& b, double weight);

  /// Parses the plain-text edge-list format: one "u v weight" per line.
  /// Blank lines and lines starting with '#' are skipped.
  static FiniteTree parse_edge_list(const std::string& text);

  std::size_t vertex_count() const { return names_.size(); }
  std::int32_t vertex_id(const std::string& name) const;
  const std::string& vertex_name(std::int32_t id) const { return names_[id]; }
  double edge_weight(std::int32_t a, std::int32_t b) const;

  FinitePoint vertex_point(const std::string& name) const;
  FinitePoint edge_point(const std::string& a, const std::string& b, double t) const;
  FinitePoint canonical(const FinitePoint& p) const;

  double vertex_distance(std::int32_t a, std::int32_t b) const;
  double distance(const FinitePoint& a, const FinitePoint& b) const;
  FinitePoint geodesic(const FinitePoint& a, const FinitePoint& b, double frac) const;
  std::vector<std::int32_t> vertex_path(std::int32_t a, std::int32_t b) const;

  std::pair<FinitePoint, double> circumcenter(const std::vector<FinitePoint>& points) const;

  struct Edge {
    std::int32_t a, b;
    double w;
  };
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  void validate_tree() const;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::int32_t, double>>> adj_;
};

}  // namespace cat0lab
