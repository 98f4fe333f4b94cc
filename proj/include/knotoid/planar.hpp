#pragma once

// Spherical embedding of a diagram as a combinatorial map, its dual
// multigraph, and exact heights via breadth-first search in the dual.
//
// Darts: arc a owns dart 2a (tail -> head, along the strand) and dart 2a+1
// (head -> tail). Vertices: crossing c is vertex c-1; for open diagrams the
// beginning is vertex n and the end is vertex n+1. Faces lie to the left of
// their darts; a face is identified by the least dart in its orbit and faces
// are numbered in increasing order of that dart.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "knotoid/code.hpp"

namespace knotoid {

using Dart = std::uint32_t;

constexpr Dart reverse(Dart d) noexcept { return d ^ 1u; }
constexpr std::size_t arc_of(Dart d) noexcept { return d >> 1; }
constexpr Dart forward_dart(std::size_t arc) noexcept { return static_cast<Dart>(2 * arc); }
constexpr Dart backward_dart(std::size_t arc) noexcept { return static_cast<Dart>(2 * arc + 1); }

/// Counterclockwise rotation at a crossing from the chirality rule:
/// + gives (f_in, s_in, f_out, s_out), - gives (f_in, s_out, f_out, s_in),
/// where f/s are the first/second visit and in/out are the outgoing darts
/// running back along the arriving arc / forward along the leaving arc.
std::array<Dart, 4> crossing_rotation(const Diagram& d, int crossing);

class CombinatorialMap {
 public:
  std::size_t dart_count() const noexcept { return tail_.size(); }
  std::size_t arc_count() const noexcept { return tail_.size() / 2; }
  std::size_t vertex_count() const noexcept { return vertex_darts_.size(); }
  std::size_t face_count() const noexcept { return faces_.size(); }

  int tail(Dart d) const { return tail_[d]; }
  int head(Dart d) const { return tail_[reverse(d)]; }
  /// Next outgoing dart counterclockwise / clockwise around tail(d).
  Dart ccw_next(Dart d) const { return ccw_next_[d]; }
  Dart cw_next(Dart d) const { return cw_next_[d]; }
  /// Face successor: the dart following d on the boundary of its left face.
  Dart face_next(Dart d) const { return cw_next_[reverse(d)]; }

  /// Outgoing darts of a vertex in counterclockwise order.
  std::span<const Dart> vertex_darts(int v) const { return vertex_darts_[static_cast<std::size_t>(v)]; }

  int face_of(Dart d) const { return face_of_[d]; }
  int left_face(std::size_t arc) const { return face_of_[forward_dart(arc)]; }
  int right_face(std::size_t arc) const { return face_of_[backward_dart(arc)]; }
  /// Boundary orbit of a face, starting at its least dart.
  std::span<const Dart> face(int f) const { return faces_[static_cast<std::size_t>(f)]; }

  /// Vertex ids of the beginning / end endpoints (open diagrams only).
  int begin_vertex() const noexcept { return begin_vertex_; }
  int end_vertex() const noexcept { return end_vertex_; }
  int begin_face() const;
  int end_face() const;

  bool is_open() const noexcept { return begin_vertex_ >= 0; }

 private:
  std::vector<int> tail_;
  std::vector<Dart> ccw_next_;
  std::vector<Dart> cw_next_;
  std::vector<std::vector<Dart>> vertex_darts_;
  std::vector<int> face_of_;
  std::vector<std::vector<Dart>> faces_;
  int begin_vertex_ = -1;
  int end_vertex_ = -1;

  friend CombinatorialMap trace_faces(const Diagram& d);
};

CombinatorialMap trace_faces(const Diagram& d);

/// Number of faces the rotation system of a (not yet validated) signed visit
/// sequence would produce. Labels must be 1..n with two visits each.
std::size_t count_faces(std::span<const Visit> visits, std::span<const int> chirality, bool closed);

/// Faces required for a spherical embedding: n+1 (open) or n+2 (closed).
std::size_t spherical_face_count(int crossings, bool closed) noexcept;

struct DualEdge {
  std::size_t arc;
  int to;
};

class DualGraph {
 public:
  explicit DualGraph(const CombinatorialMap& map);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return ends_.size(); }
  /// Incident dual edges sorted by arc; a loop appears twice.
  std::span<const DualEdge> edges(int face) const { return adjacency_[static_cast<std::size_t>(face)]; }
  std::pair<int, int> ends(std::size_t arc) const { return ends_[arc]; }
  bool is_loop(std::size_t arc) const { return ends_[arc].first == ends_[arc].second; }

  /// BFS distances from a face; unreachable faces get -1.
  std::vector<int> distances_from(int face) const;

 private:
  std::vector<std::vector<DualEdge>> adjacency_;
  std::vector<std::pair<int, int>> ends_;
};

DualGraph build_dual(const CombinatorialMap& map);

/// Alternating face/arc path through the dual: faces f_0..f_m and arcs
/// a_1..a_m with a_i separating f_{i-1} and f_i.
struct Shortcut {
  std::vector<int> faces;
  std::vector<std::size_t> arcs;

  std::size_t length() const noexcept { return arcs.size(); }
  friend bool operator==(const Shortcut&, const Shortcut&) = default;
  friend auto operator<=>(const Shortcut& a, const Shortcut& b) { return a.arcs <=> b.arcs; }
};

struct HeightResult {
  int height = 0;
  Shortcut shortcut;
};

/// Height of an open diagram: dual distance from the begin-face to the
/// end-face, with the lexicographically least shortest crossed-arc sequence.
HeightResult height(const Diagram& d);
HeightResult height(const CombinatorialMap& map, const DualGraph& dual);

struct ShortcutList {
  std::vector<Shortcut> shortcuts;
  bool truncated = false;
};

/// All shortest dual paths from begin-face to end-face in lexicographic order
/// of crossed arcs, at most `cap` of them.
ShortcutList enumerate_minimal_shortcuts(const Diagram& d, std::size_t cap);
ShortcutList enumerate_minimal_shortcuts(const CombinatorialMap& map, const DualGraph& dual, std::size_t cap);

/// Rebuilds the face sequence of a dual path from the arcs it crosses,
/// starting at the begin-face. Throws std::invalid_argument unless the arcs
/// form a path ending at the end-face.
Shortcut shortcut_from_arcs(const CombinatorialMap& map, std::span<const std::size_t> arcs);

int region_distance(const Diagram& d, int f1, int f2);
int region_distance(const DualGraph& dual, int f1, int f2);

}  // namespace knotoid
