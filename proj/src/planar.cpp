#include "knotoid/planar.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace knotoid {

namespace {

struct RawCode {
  std::span<const Visit> visits;
  std::span<const int> chirality;
  bool closed;

  std::size_t m() const { return visits.size(); }
  std::size_t in_arc(std::size_t pos) const { return closed ? (pos + m() - 1) % m() : pos; }
  std::size_t out_arc(std::size_t pos) const { return closed ? pos : pos + 1; }
  std::size_t arcs() const { return closed ? m() : m() + 1; }
};

// Occurrence positions per crossing (index = label - 1).
std::vector<std::array<std::size_t, 2>> occurrences_of(const RawCode& code) {
  std::vector<std::array<std::size_t, 2>> occ(code.chirality.size(), {Diagram::npos, Diagram::npos});
  for (std::size_t pos = 0; pos < code.m(); ++pos) {
    auto& o = occ[static_cast<std::size_t>(code.visits[pos].crossing - 1)];
    (o[0] == Diagram::npos ? o[0] : o[1]) = pos;
  }
  return occ;
}

std::array<Dart, 4> rotation_from(const RawCode& code, std::size_t first, std::size_t second, int chirality) {
  const Dart f_in = backward_dart(code.in_arc(first));
  const Dart f_out = forward_dart(code.out_arc(first));
  const Dart s_in = backward_dart(code.in_arc(second));
  const Dart s_out = forward_dart(code.out_arc(second));
  if (chirality > 0) return {f_in, s_in, f_out, s_out};
  return {f_in, s_out, f_out, s_in};
}

// Clockwise successor of every dart around its tail vertex.
std::vector<Dart> clockwise_successors(const RawCode& code) {
  const std::size_t darts = 2 * code.arcs();
  std::vector<Dart> cw(darts);
  const auto occ = occurrences_of(code);
  for (std::size_t c = 0; c < occ.size(); ++c) {
    const auto rot = rotation_from(code, occ[c][0], occ[c][1], code.chirality[c]);
    for (std::size_t i = 0; i < 4; ++i) cw[rot[i]] = rot[(i + 3) % 4];
  }
  if (!code.closed) {
    cw[0] = 0;
    const Dart end = backward_dart(code.arcs() - 1);
    cw[end] = end;
  }
  return cw;
}

}  // namespace

std::array<Dart, 4> crossing_rotation(const Diagram& d, int crossing) {
  const RawCode code{d.visits(), d.chiralities(), d.is_closed()};
  const auto& occ = d.occurrences(crossing);
  return rotation_from(code, occ[0], occ[1], d.chirality(crossing));
}

std::size_t spherical_face_count(int crossings, bool closed) noexcept {
  return static_cast<std::size_t>(crossings) + (closed ? 2 : 1);
}

std::size_t count_faces(std::span<const Visit> visits, std::span<const int> chirality, bool closed) {
  const RawCode code{visits, chirality, closed};
  const auto cw = clockwise_successors(code);
  std::vector<char> seen(cw.size(), 0);
  std::size_t faces = 0;
  for (Dart d = 0; d < cw.size(); ++d) {
    if (seen[d]) continue;
    ++faces;
    for (Dart e = d; !seen[e]; e = cw[reverse(e)]) seen[e] = 1;
  }
  return faces;
}

CombinatorialMap trace_faces(const Diagram& d) {
  const std::size_t arcs = d.arc_count();
  const std::size_t darts = 2 * arcs;
  const int n = d.crossing_count();

  CombinatorialMap map;
  map.tail_.assign(darts, -1);
  map.ccw_next_.assign(darts, 0);
  map.cw_next_.assign(darts, 0);
  map.vertex_darts_.assign(static_cast<std::size_t>(n) + (d.is_open() ? 2 : 0), {});
  if (d.is_open()) {
    map.begin_vertex_ = n;
    map.end_vertex_ = n + 1;
  }

  for (std::size_t a = 0; a < arcs; ++a) {
    const auto t = d.arc_tail(a);
    const auto h = d.arc_head(a);
    map.tail_[forward_dart(a)] = t == Diagram::npos ? map.begin_vertex_ : d.visit(t).crossing - 1;
    map.tail_[backward_dart(a)] = h == Diagram::npos ? map.end_vertex_ : d.visit(h).crossing - 1;
  }
  for (int c = 1; c <= n; ++c) {
    const auto rot = crossing_rotation(d, c);
    auto& list = map.vertex_darts_[static_cast<std::size_t>(c - 1)];
    list.assign(rot.begin(), rot.end());
    for (std::size_t i = 0; i < 4; ++i) {
      map.ccw_next_[rot[i]] = rot[(i + 1) % 4];
      map.cw_next_[rot[i]] = rot[(i + 3) % 4];
    }
  }
  if (d.is_open()) {
    const Dart first = forward_dart(0);
    const Dart last = backward_dart(arcs - 1);
    map.vertex_darts_[static_cast<std::size_t>(map.begin_vertex_)] = {first};
    map.vertex_darts_[static_cast<std::size_t>(map.end_vertex_)] = {last};
    map.ccw_next_[first] = map.cw_next_[first] = first;
    map.ccw_next_[last] = map.cw_next_[last] = last;
  }

  map.face_of_.assign(darts, -1);
  for (Dart start = 0; start < darts; ++start) {
    if (map.face_of_[start] >= 0) continue;
    const int id = static_cast<int>(map.faces_.size());
    auto& orbit = map.faces_.emplace_back();
    for (Dart e = start; map.face_of_[e] < 0; e = map.face_next(e)) {
      map.face_of_[e] = id;
      orbit.push_back(e);
    }
  }
  return map;
}

int CombinatorialMap::begin_face() const {
  if (!is_open()) throw std::logic_error("begin_face: closed diagram");
  return face_of_[forward_dart(0)];
}

int CombinatorialMap::end_face() const {
  if (!is_open()) throw std::logic_error("end_face: closed diagram");
  return face_of_[backward_dart(arc_count() - 1)];
}

DualGraph::DualGraph(const CombinatorialMap& map) : adjacency_(map.face_count()), ends_(map.arc_count()) {
  for (std::size_t a = 0; a < map.arc_count(); ++a) {
    const int l = map.left_face(a);
    const int r = map.right_face(a);
    ends_[a] = {l, r};
    adjacency_[static_cast<std::size_t>(l)].push_back({a, r});
    adjacency_[static_cast<std::size_t>(r)].push_back({a, l});
  }
}

std::vector<int> DualGraph::distances_from(int face) const {
  std::vector<int> dist(adjacency_.size(), -1);
  std::deque<int> queue{face};
  dist[static_cast<std::size_t>(face)] = 0;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (const auto& e : adjacency_[static_cast<std::size_t>(f)]) {
      if (dist[static_cast<std::size_t>(e.to)] >= 0) continue;
      dist[static_cast<std::size_t>(e.to)] = dist[static_cast<std::size_t>(f)] + 1;
      queue.push_back(e.to);
    }
  }
  return dist;
}

DualGraph build_dual(const CombinatorialMap& map) { return DualGraph(map); }

HeightResult height(const CombinatorialMap& map, const DualGraph& dual) {
  const int begin = map.begin_face();
  const int end = map.end_face();
  const auto to_end = dual.distances_from(end);
  HeightResult result;
  result.height = to_end[static_cast<std::size_t>(begin)];
  result.shortcut.faces.push_back(begin);
  int cur = begin;
  while (to_end[static_cast<std::size_t>(cur)] > 0) {
    const int want = to_end[static_cast<std::size_t>(cur)] - 1;
    for (const auto& e : dual.edges(cur)) {
      if (to_end[static_cast<std::size_t>(e.to)] == want) {
        result.shortcut.arcs.push_back(e.arc);
        result.shortcut.faces.push_back(e.to);
        cur = e.to;
        break;
      }
    }
  }
  return result;
}

HeightResult height(const Diagram& d) {
  if (d.is_closed()) throw std::invalid_argument("height: closed diagrams have no endpoints");
  const auto map = trace_faces(d);
  return height(map, DualGraph(map));
}

namespace {

void extend_shortcuts(const DualGraph& dual, const std::vector<int>& to_end, Shortcut& partial, std::size_t cap,
                      ShortcutList& out) {
  if (out.truncated) return;
  const int cur = partial.faces.back();
  const int remaining = to_end[static_cast<std::size_t>(cur)];
  if (remaining == 0) {
    if (out.shortcuts.size() == cap) {
      out.truncated = true;
      return;
    }
    out.shortcuts.push_back(partial);
    return;
  }
  for (const auto& e : dual.edges(cur)) {
    if (to_end[static_cast<std::size_t>(e.to)] != remaining - 1) continue;
    partial.arcs.push_back(e.arc);
    partial.faces.push_back(e.to);
    extend_shortcuts(dual, to_end, partial, cap, out);
    partial.arcs.pop_back();
    partial.faces.pop_back();
    if (out.truncated) return;
  }
}

}  // namespace

ShortcutList enumerate_minimal_shortcuts(const CombinatorialMap& map, const DualGraph& dual, std::size_t cap) {
  const auto to_end = dual.distances_from(map.end_face());
  ShortcutList out;
  Shortcut partial;
  partial.faces.push_back(map.begin_face());
  extend_shortcuts(dual, to_end, partial, cap, out);
  return out;
}

ShortcutList enumerate_minimal_shortcuts(const Diagram& d, std::size_t cap) {
  if (d.is_closed()) throw std::invalid_argument("enumerate_minimal_shortcuts: closed diagram");
  const auto map = trace_faces(d);
  return enumerate_minimal_shortcuts(map, DualGraph(map), cap);
}

Shortcut shortcut_from_arcs(const CombinatorialMap& map, std::span<const std::size_t> arcs) {
  if (!map.is_open()) throw std::invalid_argument("shortcuts need an open diagram");
  Shortcut s;
  int face = map.begin_face();
  s.faces.push_back(face);
  for (std::size_t a : arcs) {
    if (a >= map.arc_count()) throw std::invalid_argument("shortcut arc out of range");
    const int l = map.left_face(a), r = map.right_face(a);
    if (face != l && face != r) throw std::invalid_argument("shortcut arc does not bound the current face");
    face = face == l ? r : l;
    s.arcs.push_back(a);
    s.faces.push_back(face);
  }
  if (face != map.end_face()) throw std::invalid_argument("shortcut does not end at the end-face");
  return s;
}

int region_distance(const DualGraph& dual, int f1, int f2) {
  return dual.distances_from(f1)[static_cast<std::size_t>(f2)];
}

int region_distance(const Diagram& d, int f1, int f2) {
  const auto map = trace_faces(d);
  return region_distance(DualGraph(map), f1, f2);
}

}  // namespace knotoid
